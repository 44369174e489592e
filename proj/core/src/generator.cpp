#include "padicgl/generator.hpp"

#include <stdexcept>

namespace padic {

namespace {

// splitmix64, small and stateless enough to derive one stream per instance
struct Rng {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool one_in(std::uint64_t n) { return below(n) == 0; }

    Rational rational(int height) {
        long num = range(-height, height);
        long den = range(1, height);
        return make_rational(num, den);
    }

    Rational nonzero_rational(int height) {
        long num = range(1, height);
        if (one_in(2)) num = -num;
        long den = range(1, height);
        return make_rational(num, den);
    }
};

}  // namespace

void validate(const GeneratorConfig& config) {
    if (config.primes.empty())
        throw std::invalid_argument("generator needs at least one prime");
    if (config.degree_min < 2)
        throw std::invalid_argument("theorem requires degree >= 2");
    if (config.degree_max < config.degree_min)
        throw std::invalid_argument("degree range is inverted");
    if (config.coeff_height < 1)
        throw std::invalid_argument("coefficient height must be positive");
    if (config.trials < 1)
        throw std::invalid_argument("trial count must be positive");
}

Instance generate_instance(const GeneratorConfig& config, long index) {
    validate(config);
    if (index < 0 || index >= config.trials)
        throw std::out_of_range("instance index outside [0, trials)");

    Rng rng{config.seed ^
            (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1))};
    rng.next();
    rng.next();

    Prime p = config.primes[rng.below(config.primes.size())];
    int n = static_cast<int>(rng.range(config.degree_min, config.degree_max));
    GenMode mode = config.mode;
    if (mode == GenMode::Mixed)
        mode = rng.one_in(2) ? GenMode::FromRoots : GenMode::RandomCoeffs;
    Rational center = rng.one_in(2) ? Rational(0) : rng.rational(config.coeff_height);

    if (mode == GenMode::FromRoots) {
        RootList roots;
        roots.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            // occasionally repeat an earlier root so multiplicities get exercised
            if (i > 0 && rng.one_in(3)) {
                roots.push_back(roots[rng.below(static_cast<std::uint64_t>(i))]);
            } else {
                roots.push_back(rng.rational(config.coeff_height));
            }
        }
        Rational leading = rng.nonzero_rational(config.coeff_height);
        return Instance{Poly::from_roots(roots, leading), p, center, roots};
    }

    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        coeffs[static_cast<std::size_t>(i)] = rng.rational(config.coeff_height);
    }
    coeffs[static_cast<std::size_t>(n)] = rng.nonzero_rational(config.coeff_height);
    return Instance{Poly(std::move(coeffs)), p, center, std::nullopt};
}

}  // namespace padic
