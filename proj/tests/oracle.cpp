#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace padic::oracle {

Rational elementary_symmetric_enumerated(const std::vector<Rational>& values, int k) {
    int n = static_cast<int>(values.size());
    if (k < 0 || k > n) throw std::out_of_range("subset size out of range");
    if (k == 0) return Rational(1);

    // walk all k-subsets via the usual index-vector odometer
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    Rational sum(0);
    while (true) {
        Rational prod(1);
        for (int i : idx) prod *= values[static_cast<std::size_t>(i)];
        sum += prod;

        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) {
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return sum;
}

namespace {

long count_factors(Integer x, unsigned long p) {
    long count = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
        ++count;
    }
    return count;
}

}  // namespace

MaybeVal valuation_by_division(const Rational& x, unsigned long p) {
    if (x == 0) return std::nullopt;
    long v = count_factors(x.get_num(), p) - count_factors(x.get_den(), p);
    return make_rational(v);
}

std::vector<MaybeVal> direct_valuations(const std::vector<Rational>& roots, unsigned long p,
                                        const Rational& center) {
    std::vector<MaybeVal> vals;
    vals.reserve(roots.size());
    for (const Rational& r : roots) {
        vals.push_back(valuation_by_division(r - center, p));
    }
    std::sort(vals.begin(), vals.end(), [](const MaybeVal& a, const MaybeVal& b) {
        if (!a) return true;  // +inf first
        if (!b) return false;
        return *a > *b;
    });
    return vals;
}

int count_at_least(const std::vector<MaybeVal>& vals, const MaybeVal& bound) {
    int count = 0;
    for (const MaybeVal& v : vals) {
        bool ge = !v || (bound && *v >= *bound);
        if (ge) ++count;
    }
    return count;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    Integer num = x.get_num();
    Integer den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer snum, sden;
    mpz_sqrt(snum.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sden.get_mpz_t(), den.get_mpz_t());
    Rational r{snum, sden};
    r.canonicalize();
    return r;
}

namespace {

// quotient of q by (z - root); the remainder must vanish
Poly deflate(const Poly& q, const Rational& root) {
    const auto& c = q.coeffs();
    std::vector<Rational> quot(c.size() - 1);
    Rational carry = c.back();
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        quot[i - 1] = carry;
        carry = c[i - 1] + root * carry;
    }
    if (carry != 0) throw std::logic_error("deflation by a non-root");
    return Poly(std::move(quot));
}

std::vector<Integer> small_divisors(const Integer& x) {
    Integer ax = abs(x);
    if (!ax.fits_ulong_p()) return {};  // oracle gives up on huge inputs
    unsigned long n = ax.get_ui();
    std::vector<Integer> divs;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divs.emplace_back(d);
        if (d != n / d) divs.emplace_back(n / d);
    }
    return divs;
}

std::optional<Rational> find_rational_root(const Poly& q) {
    // clear denominators so the rational root theorem applies
    Integer lcm_den(1);
    for (const Rational& c : q.coeffs()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    std::vector<Integer> b;
    b.reserve(q.coeffs().size());
    for (const Rational& c : q.coeffs()) {
        Rational scaled = c * Rational(lcm_den);
        b.push_back(scaled.get_num());
    }
    if (b.front() == 0) return Rational(0);

    for (const Integer& u : small_divisors(b.front())) {
        for (const Integer& v : small_divisors(b.back())) {
            Rational candidate{u, v};
            candidate.canonicalize();
            if (q.evaluate(candidate) == 0) return candidate;
            Rational negated = -candidate;
            if (q.evaluate(negated) == 0) return negated;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Poly& q) {
    int n = q.degree();
    if (n < 0 || n > 3) return std::nullopt;
    if (n == 0) return std::vector<Rational>{};
    if (n == 1) {
        Rational root = -q.coeff(0) / q.coeff(1);
        return std::vector<Rational>{root};
    }
    if (n == 2) {
        Rational a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
        Rational disc = b * b - 4 * a * c;
        std::optional<Rational> s = rational_sqrt(disc);
        if (!s) return std::nullopt;
        Rational r1 = (-b + *s) / (2 * a);
        Rational r2 = (-b - *s) / (2 * a);
        return std::vector<Rational>{r1, r2};
    }
    std::optional<Rational> first = find_rational_root(q);
    if (!first) return std::nullopt;
    std::optional<std::vector<Rational>> rest = rational_roots(deflate(q, *first));
    if (!rest) return std::nullopt;
    rest->push_back(*first);
    return rest;
}

}  // namespace padic::oracle
