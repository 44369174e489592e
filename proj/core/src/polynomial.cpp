#include "padicgl/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace padic {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::from_roots(const RootList& roots, const Rational& leading) {
    if (leading == 0) throw std::invalid_argument("leading coefficient is zero");
    std::vector<Rational> c{leading};
    for (const Rational& r : roots) {
        // multiply the lowest-first coefficients by (z - r)
        c.emplace_back(0);
        for (std::size_t j = c.size() - 1; j > 0; --j) {
            Rational next = c[j - 1] - r * c[j];
            c[j] = std::move(next);
        }
        c[0] = -r * c[0];
    }
    return Poly(std::move(c));
}

Poly Poly::parse(const std::string& text) {
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        coeffs.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Poly(std::move(coeffs));
}

std::string Poly::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out = to_string(coeffs_[0]);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out += ',';
        out += to_string(coeffs_[i]);
    }
    return out;
}

Rational Poly::coeff(int i) const {
    if (i < 0) throw std::out_of_range("negative coefficient index");
    if (static_cast<std::size_t>(i) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::derivative() const {
    if (degree() < 1) throw std::invalid_argument("constant has no derivative roots");
    std::vector<Rational> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.emplace_back(Rational(static_cast<long>(i)) * coeffs_[i]);
    }
    return Poly(std::move(d));
}

Poly Poly::taylor_shift(const Rational& a) const {
    if (a == 0 || coeffs_.empty()) return *this;
    // repeated synthetic division by (z - (-a)), i.e. Horner evaluation of all
    // Taylor coefficients at -(-a) = a
    std::vector<Rational> c = coeffs_;
    long n = static_cast<long>(c.size()) - 1;
    for (long i = 0; i < n; ++i) {
        for (long j = n - 1; j >= i; --j) {
            c[static_cast<std::size_t>(j)] += a * c[static_cast<std::size_t>(j) + 1];
        }
    }
    return Poly(std::move(c));
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly operator*(const Poly& p, const Rational& c) {
    if (c == 0) return Poly();
    std::vector<Rational> scaled;
    scaled.reserve(p.coeffs_.size());
    for (const Rational& a : p.coeffs_) scaled.emplace_back(a * c);
    return Poly(std::move(scaled));
}

Rational elementary_symmetric(const std::vector<Rational>& values, int k) {
    int n = static_cast<int>(values.size());
    if (k < 0 || k > n) throw std::out_of_range("elementary symmetric index out of range");
    // e[j] after processing a prefix holds e_j of that prefix
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
    e[0] = 1;
    for (const Rational& x : values) {
        for (std::size_t j = e.size() - 1; j > 0; --j) {
            e[j] += x * e[j - 1];
        }
    }
    return e[static_cast<std::size_t>(k)];
}

}  // namespace padic
