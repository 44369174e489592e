#include "padicgl/valuation.hpp"

#include <stdexcept>
#include <utility>

namespace padic {

Prime::Prime(unsigned long p) : p_(p) {
    if (p < 2) throw std::invalid_argument("prime must be at least 2");
    for (unsigned long d = 2; d * d <= p; ++d) {
        if (p % d == 0)
            throw std::invalid_argument("not a prime: " + std::to_string(p));
    }
}

ExtendedValuation ExtendedValuation::infinity() {
    ExtendedValuation v;
    v.infinite_ = true;
    return v;
}

const Rational& ExtendedValuation::finite() const {
    if (infinite_) throw std::domain_error("valuation is infinite");
    return value_;
}

std::string ExtendedValuation::str() const {
    return infinite_ ? "inf" : to_string(value_);
}

ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b) {
    if (a.infinite_ || b.infinite_) return ExtendedValuation::infinity();
    return ExtendedValuation(Rational(a.value_ + b.value_));
}

bool operator==(const ExtendedValuation& a, const ExtendedValuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

bool operator!=(const ExtendedValuation& a, const ExtendedValuation& b) {
    return !(a == b);
}

bool operator<(const ExtendedValuation& a, const ExtendedValuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
}

bool operator>(const ExtendedValuation& a, const ExtendedValuation& b) { return b < a; }
bool operator<=(const ExtendedValuation& a, const ExtendedValuation& b) { return !(b < a); }
bool operator>=(const ExtendedValuation& a, const ExtendedValuation& b) { return !(a < b); }

ExtendedValuation min(const ExtendedValuation& a, const ExtendedValuation& b) {
    return a < b ? a : b;
}

ExtendedValuation scale(const ExtendedValuation& v, const Rational& factor) {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    if (v.is_infinite()) return ExtendedValuation::infinity();
    return ExtendedValuation(Rational(v.finite() * factor));
}

ExtendedValuation valuation_of_rational(const Rational& x, const Prime& p) {
    if (x == 0) return ExtendedValuation::infinity();
    Integer pz(p.value());
    Integer stripped;
    long vnum = static_cast<long>(
        mpz_remove(stripped.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
    long vden = static_cast<long>(
        mpz_remove(stripped.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
    return ExtendedValuation(make_rational(vnum - vden));
}

ExtendedValuation val_mul(const ExtendedValuation& a, const ExtendedValuation& b) {
    return a + b;
}

ExtendedValuation val_add_lower_bound(const ExtendedValuation& a, const ExtendedValuation& b) {
    return min(a, b);
}

}  // namespace padic
