#pragma once

#include "padicgl/polynomial.hpp"
#include "padicgl/valuation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace padic {

enum class GenMode { FromRoots, RandomCoeffs, Mixed };

struct GeneratorConfig {
    std::uint64_t seed = 0;
    std::vector<Prime> primes;
    int degree_min = 2;
    int degree_max = 8;
    int coeff_height = 10;  // numerators in [-h, h], denominators in [1, h]
    GenMode mode = GenMode::Mixed;
    long trials = 1000;
};

// Throws std::invalid_argument when the configuration cannot generate valid
// theorem instances (empty prime list, degree_min < 2, inverted range,
// nonpositive height or trials).
void validate(const GeneratorConfig& config);

struct Instance {
    Poly poly;
    Prime prime;
    Rational center;
    // Set when the polynomial was expanded from explicit roots, so callers
    // can cross-check polygon output against directly computed valuations.
    std::optional<RootList> roots;
};

// Deterministic function of (config.seed, index); repeated calls with the
// same arguments produce identical instances. index must lie in [0, trials).
Instance generate_instance(const GeneratorConfig& config, long index);

}  // namespace padic
