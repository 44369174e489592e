#pragma once

#include "padicgl/rational.hpp"

#include <string>

namespace padic {

// A validated prime. Construction rejects non-primes so downstream code can
// rely on v_p being a genuine valuation.
class Prime {
public:
    explicit Prime(unsigned long p);
    unsigned long value() const noexcept { return p_; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return !(a == b); }

private:
    unsigned long p_;
};

// An element of Q ∪ {+inf}, the value group of v_p extended to 0.
// +inf absorbs addition and compares greater than every rational.
class ExtendedValuation {
public:
    ExtendedValuation() : value_(0) {}
    ExtendedValuation(Rational v) : value_(std::move(v)) {}
    ExtendedValuation(long v) : value_(make_rational(v)) {}

    static ExtendedValuation infinity();

    bool is_infinite() const noexcept { return infinite_; }
    // The underlying rational; throws std::domain_error when infinite.
    const Rational& finite() const;

    std::string str() const;  // "num/den" or "inf"

    friend ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b);
    friend bool operator==(const ExtendedValuation& a, const ExtendedValuation& b);
    friend bool operator!=(const ExtendedValuation& a, const ExtendedValuation& b);
    friend bool operator<(const ExtendedValuation& a, const ExtendedValuation& b);
    friend bool operator>(const ExtendedValuation& a, const ExtendedValuation& b);
    friend bool operator<=(const ExtendedValuation& a, const ExtendedValuation& b);
    friend bool operator>=(const ExtendedValuation& a, const ExtendedValuation& b);

private:
    bool infinite_ = false;
    Rational value_;
};

ExtendedValuation min(const ExtendedValuation& a, const ExtendedValuation& b);

// Multiplies a finite scale factor into the valuation; scale must be > 0
// (used for exponent laws like v(x^e) = e*v(x)).
ExtendedValuation scale(const ExtendedValuation& v, const Rational& factor);

// v_p(x) with v_p(0) = +inf. Exact for any rational x.
ExtendedValuation valuation_of_rational(const Rational& x, const Prime& p);

// v(xy) = v(x) + v(y).
ExtendedValuation val_mul(const ExtendedValuation& a, const ExtendedValuation& b);

// Ultrametric bound: v(x+y) >= min(v(x), v(y)), an equality when a != b.
ExtendedValuation val_add_lower_bound(const ExtendedValuation& a, const ExtendedValuation& b);

}  // namespace padic
