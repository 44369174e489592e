#pragma once

#include "padicgl/newton_polygon.hpp"
#include "padicgl/polynomial.hpp"
#include "padicgl/valuation.hpp"

#include <vector>

namespace padic {

// Valuation exponents of the critical-point disk radii for a degree n
// polynomial whose roots lie in a disk of radius exponent base_val:
// val(r_k) = base_val + min_{1<=j<=k} (v_p(j) - v_p(n)) / (n - j).
// radii_vals[k-1] belongs to k, for k = 1 .. n-1. Radii never shrink as k
// grows, so the valuation sequence is non-increasing.
struct CriticalRadii {
    Prime prime;
    int degree;
    ExtendedValuation base_val;
    std::vector<ExtendedValuation> radii_vals;

    const ExtendedValuation& for_k(int k) const;
};

CriticalRadii critical_radii(int degree, const ExtendedValuation& base_val, const Prime& p);

// Radius exponents of the two coarser enclosures, plus whether the exact
// enclosure (all critical points inside the root disk itself) applies:
//   c1_val = base_val - v_p(n)/(n-1)   smallest disk holding >= 1 critical point
//   c2_val = base_val - v_p(n)         disk holding all n-1 critical points
//   c3_applicable  <=>  v_p(n) = 0     then every r_k equals the base radius
struct CorollaryBounds {
    ExtendedValuation c1_val;
    ExtendedValuation c2_val;
    bool c3_applicable;
};

CorollaryBounds corollary_bounds(int degree, const ExtendedValuation& base_val, const Prime& p);

struct PerKResult {
    int k;
    ExtendedValuation bound_val;  // val(r_k)
    int count_in_disk;            // critical points with valuation >= bound_val
    bool holds;                   // count_in_disk >= k
    bool tight;                   // k-th smallest-norm critical point sits exactly at val(r_k)

    friend bool operator==(const PerKResult& a, const PerKResult& b) {
        return a.k == b.k && a.bound_val == b.bound_val &&
               a.count_in_disk == b.count_in_disk && a.holds == b.holds && a.tight == b.tight;
    }
    friend bool operator!=(const PerKResult& a, const PerKResult& b) { return !(a == b); }
};

struct TheoremReport {
    std::vector<PerKResult> per_k;  // k = 1 .. n-1 in order
    bool all_hold = false;
    bool corollary1_holds = false;  // >= 1 critical point within c1_val
    bool corollary2_holds = false;  // all n-1 critical points within c2_val
    bool corollary3_applicable = false;

    friend bool operator==(const TheoremReport& a, const TheoremReport& b) {
        return a.per_k == b.per_k && a.all_hold == b.all_hold &&
               a.corollary1_holds == b.corollary1_holds &&
               a.corollary2_holds == b.corollary2_holds &&
               a.corollary3_applicable == b.corollary3_applicable;
    }
    friend bool operator!=(const TheoremReport& a, const TheoremReport& b) { return !(a == b); }
};

// Checks every k against the minimal disk enclosing the roots of P around
// center. Requires degree >= 2.
TheoremReport verify_theorem(const Poly& P, const Prime& p, const Rational& center);

// Same check against a caller-supplied disk D(center, p^-radius_val), which
// must contain all roots of P; throws std::domain_error otherwise.
TheoremReport verify_with_explicit_disk(const Poly& P, const Prime& p, const Rational& center,
                                        const ExtendedValuation& radius_val);

}  // namespace padic
