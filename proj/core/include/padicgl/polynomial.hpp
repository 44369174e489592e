#pragma once

#include "padicgl/rational.hpp"

#include <string>
#include <vector>

namespace padic {

using RootList = std::vector<Rational>;

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The representation is canonical: no trailing zero coefficients, and the
// zero polynomial is an empty vector (degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    // Expands leading * prod (z - root). The multiset of roots is preserved
    // exactly; leading must be nonzero.
    static Poly from_roots(const RootList& roots, const Rational& leading);

    // Parses the comma separated coefficient list, e.g. "0,0,-1,1" for z^3 - z^2.
    static Poly parse(const std::string& text);
    std::string to_text() const;

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Coefficient of z^i; zero beyond the degree.
    Rational coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Poly derivative() const;

    // Coefficients of P(z + a); exact, degree preserved.
    Poly taylor_shift(const Rational& a) const;

    Rational evaluate(const Rational& x) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend Poly operator*(const Poly& p, const Rational& c);
    friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }

private:
    std::vector<Rational> coeffs_;
};

// e_k of the given values, 1 for k = 0. Throws std::out_of_range unless
// 0 <= k <= values.size().
Rational elementary_symmetric(const std::vector<Rational>& values, int k);

}  // namespace padic
