#pragma once

#include "padicgl/polynomial.hpp"
#include "padicgl/valuation.hpp"

#include <cstddef>
#include <vector>

namespace padic {

struct PolygonVertex {
    int index;           // coefficient index i
    Rational valuation;  // v_p(a_i)

    friend bool operator==(const PolygonVertex& a, const PolygonVertex& b) {
        return a.index == b.index && a.valuation == b.valuation;
    }
    friend bool operator!=(const PolygonVertex& a, const PolygonVertex& b) {
        return !(a == b);
    }
};

// Lower convex hull of {(i, v_p(a_i)) : a_i != 0}. Vertices are in strictly
// convex position (collinear interior points are dropped) and ordered by
// increasing index. zero_root_count is the multiplicity of the root 0,
// i.e. the index of the lowest nonzero coefficient.
class NewtonPolygon {
public:
    NewtonPolygon(std::vector<PolygonVertex> vertices, int zero_root_count)
        : vertices_(std::move(vertices)), zero_root_count_(zero_root_count) {}

    const std::vector<PolygonVertex>& vertices() const noexcept { return vertices_; }
    int zero_root_count() const noexcept { return zero_root_count_; }

private:
    std::vector<PolygonVertex> vertices_;
    int zero_root_count_;
};

NewtonPolygon build_polygon(const Poly& P, const Prime& p);

// Multiset of valuations sorted in non-increasing order, so that entry k
// (1-based) is the valuation of the k-th smallest-norm element.
class ValuationMultiset {
public:
    ValuationMultiset() = default;
    explicit ValuationMultiset(std::vector<ExtendedValuation> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<ExtendedValuation>& entries() const noexcept { return entries_; }

    // 1-based access in norm order (largest valuation = smallest norm first).
    const ExtendedValuation& kth(std::size_t k) const;

    // Smallest valuation, i.e. the largest norm. Throws on an empty multiset.
    const ExtendedValuation& min() const;

    // How many entries have valuation >= bound (membership count for the
    // closed disk of radius p^-bound).
    int count_at_least(const ExtendedValuation& bound) const;

    friend bool operator==(const ValuationMultiset& a, const ValuationMultiset& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const ValuationMultiset& a, const ValuationMultiset& b) {
        return !(a == b);
    }

private:
    std::vector<ExtendedValuation> entries_;
};

// Valuations of all degree(P) roots of P in an algebraic closure, read off
// the Newton polygon: a segment of slope s and horizontal length l yields l
// roots of valuation -s, and a zero constant term yields roots at 0 with
// valuation +inf. No root finding takes place.
ValuationMultiset root_valuations(const Poly& P, const Prime& p);

// Valuation exponent of the smallest closed disk around center containing
// every root. The radius is the largest root distance, so the exponent is the
// minimum of v_p(root - center); +inf when all roots equal the center.
ExtendedValuation min_enclosing_valuation(const Poly& P, const Prime& p, const Rational& center);

// Number of roots of P inside the closed disk of radius p^-radius_val around
// center, counted with multiplicity.
int count_roots_in_disk(const Poly& P, const Prime& p, const Rational& center,
                        const ExtendedValuation& radius_val);

}  // namespace padic
