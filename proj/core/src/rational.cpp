#include "padicgl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace padic {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(const std::string& s, std::size_t first, std::size_t last) {
    if (first >= last) return false;
    for (std::size_t i = first; i < last; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    std::string s = text.substr(begin, end - begin + 1);

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::size_t slash = s.find('/', pos);
    bool ok = slash == std::string::npos
                  ? all_digits(s, pos, s.size())
                  : all_digits(s, pos, slash) && all_digits(s, slash + 1, s.size());
    if (!ok)
        throw std::invalid_argument("malformed rational literal: " + text);

    Integer num(s.substr(pos, (slash == std::string::npos ? s.size() : slash) - pos));
    Integer den = slash == std::string::npos ? Integer(1) : Integer(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("rational literal with zero denominator: " + text);
    if (negative) num = -num;

    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    return x.get_str();
}

long to_long(const Integer& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer exceeds machine range");
    return x.get_si();
}

}  // namespace padic
