#include "padicgl/newton_polygon.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace padic {

namespace {

// True when B lies strictly below the segment AC, i.e. slope(A,B) < slope(B,C).
// Cross-multiplied so the comparison stays exact; index gaps are positive.
bool strictly_convex(const PolygonVertex& a, const PolygonVertex& b, const PolygonVertex& c) {
    Rational lhs = (b.valuation - a.valuation) * Rational(static_cast<long>(c.index - b.index));
    Rational rhs = (c.valuation - b.valuation) * Rational(static_cast<long>(b.index - a.index));
    return lhs < rhs;
}

}  // namespace

NewtonPolygon build_polygon(const Poly& P, const Prime& p) {
    if (P.degree() < 1)
        throw std::invalid_argument("newton polygon requires degree >= 1");

    const auto& coeffs = P.coeffs();
    int zero_root_count = 0;
    while (coeffs[static_cast<std::size_t>(zero_root_count)] == 0) ++zero_root_count;

    std::vector<PolygonVertex> hull;
    for (std::size_t i = static_cast<std::size_t>(zero_root_count); i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        PolygonVertex next{static_cast<int>(i),
                           valuation_of_rational(coeffs[i], p).finite()};
        while (hull.size() >= 2 &&
               !strictly_convex(hull[hull.size() - 2], hull.back(), next)) {
            hull.pop_back();
        }
        hull.push_back(std::move(next));
    }
    return NewtonPolygon(std::move(hull), zero_root_count);
}

ValuationMultiset::ValuationMultiset(std::vector<ExtendedValuation> entries)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const ExtendedValuation& a, const ExtendedValuation& b) { return b < a; });
}

const ExtendedValuation& ValuationMultiset::kth(std::size_t k) const {
    if (k < 1 || k > entries_.size())
        throw std::out_of_range("multiset rank out of range");
    return entries_[k - 1];
}

const ExtendedValuation& ValuationMultiset::min() const {
    if (entries_.empty()) throw std::domain_error("empty valuation multiset");
    return entries_.back();
}

int ValuationMultiset::count_at_least(const ExtendedValuation& bound) const {
    int count = 0;
    for (const ExtendedValuation& v : entries_) {
        if (v >= bound)
            ++count;
        else
            break;
    }
    return count;
}

ValuationMultiset root_valuations(const Poly& P, const Prime& p) {
    NewtonPolygon polygon = build_polygon(P, p);
    std::vector<ExtendedValuation> vals;
    vals.reserve(static_cast<std::size_t>(P.degree()));
    for (int i = 0; i < polygon.zero_root_count(); ++i) {
        vals.push_back(ExtendedValuation::infinity());
    }
    const auto& verts = polygon.vertices();
    for (std::size_t s = 1; s < verts.size(); ++s) {
        long length = verts[s].index - verts[s - 1].index;
        Rational slope = (verts[s].valuation - verts[s - 1].valuation) / Rational(length);
        for (long i = 0; i < length; ++i) {
            vals.push_back(ExtendedValuation(Rational(-slope)));
        }
    }
    return ValuationMultiset(std::move(vals));
}

ExtendedValuation min_enclosing_valuation(const Poly& P, const Prime& p,
                                          const Rational& center) {
    // roots of P(z + c) are exactly root - c for each root of P
    return root_valuations(P.taylor_shift(center), p).min();
}

int count_roots_in_disk(const Poly& P, const Prime& p, const Rational& center,
                        const ExtendedValuation& radius_val) {
    return root_valuations(P.taylor_shift(center), p).count_at_least(radius_val);
}

}  // namespace padic
