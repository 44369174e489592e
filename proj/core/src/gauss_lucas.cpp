#include "padicgl/gauss_lucas.hpp"

#include <stdexcept>
#include <utility>

namespace padic {

namespace {

long integer_valuation(long x, const Prime& p) {
    Integer pz(p.value());
    Integer stripped;
    return static_cast<long>(
        mpz_remove(stripped.get_mpz_t(), Integer(x).get_mpz_t(), pz.get_mpz_t()));
}

void require_theorem_degree(const Poly& P) {
    if (P.is_zero()) throw std::invalid_argument("zero polynomial");
    if (P.degree() < 2) throw std::invalid_argument("theorem requires degree >= 2");
}

// Core check, on a polynomial already recentered so the disk sits at 0.
TheoremReport check_recentered(const Poly& Q, const Prime& p, const ExtendedValuation& base_val) {
    int n = Q.degree();
    CriticalRadii radii = critical_radii(n, base_val, p);
    ValuationMultiset omega = root_valuations(Q.derivative(), p);

    TheoremReport report;
    report.per_k.reserve(static_cast<std::size_t>(n - 1));
    report.all_hold = true;
    for (int k = 1; k <= n - 1; ++k) {
        const ExtendedValuation& bound = radii.for_k(k);
        int count = omega.count_at_least(bound);
        bool holds = count >= k;
        bool tight = omega.kth(static_cast<std::size_t>(k)) == bound;
        report.all_hold = report.all_hold && holds;
        report.per_k.push_back(PerKResult{k, bound, count, holds, tight});
    }

    CorollaryBounds cb = corollary_bounds(n, base_val, p);
    report.corollary1_holds = omega.count_at_least(cb.c1_val) >= 1;
    report.corollary2_holds = omega.count_at_least(cb.c2_val) == n - 1;
    report.corollary3_applicable = cb.c3_applicable;
    return report;
}

}  // namespace

const ExtendedValuation& CriticalRadii::for_k(int k) const {
    if (k < 1 || k > static_cast<int>(radii_vals.size()))
        throw std::out_of_range("critical radius index out of range");
    return radii_vals[static_cast<std::size_t>(k - 1)];
}

CriticalRadii critical_radii(int degree, const ExtendedValuation& base_val, const Prime& p) {
    if (degree < 2) throw std::invalid_argument("theorem requires degree >= 2");
    long n = degree;
    long vpn = integer_valuation(n, p);

    CriticalRadii out{p, degree, base_val, {}};
    out.radii_vals.reserve(static_cast<std::size_t>(degree - 1));
    Rational running_min;
    for (long j = 1; j <= n - 1; ++j) {
        Rational term = make_rational(integer_valuation(j, p) - vpn, n - j);
        if (j == 1 || term < running_min) running_min = term;
        out.radii_vals.push_back(base_val + ExtendedValuation(running_min));
    }
    return out;
}

CorollaryBounds corollary_bounds(int degree, const ExtendedValuation& base_val, const Prime& p) {
    if (degree < 2) throw std::invalid_argument("theorem requires degree >= 2");
    long n = degree;
    long vpn = integer_valuation(n, p);
    return CorollaryBounds{
        base_val + ExtendedValuation(make_rational(-vpn, n - 1)),
        base_val + ExtendedValuation(make_rational(-vpn)),
        vpn == 0,
    };
}

TheoremReport verify_theorem(const Poly& P, const Prime& p, const Rational& center) {
    require_theorem_degree(P);
    Poly Q = P.taylor_shift(center);
    ExtendedValuation base = root_valuations(Q, p).min();
    return check_recentered(Q, p, base);
}

TheoremReport verify_with_explicit_disk(const Poly& P, const Prime& p, const Rational& center,
                                        const ExtendedValuation& radius_val) {
    require_theorem_degree(P);
    Poly Q = P.taylor_shift(center);
    ExtendedValuation base = root_valuations(Q, p).min();
    if (base < radius_val) throw std::domain_error("disk does not enclose roots");
    return check_recentered(Q, p, radius_val);
}

}  // namespace padic
