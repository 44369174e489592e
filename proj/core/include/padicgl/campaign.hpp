#pragma once

#include "padicgl/gauss_lucas.hpp"
#include "padicgl/generator.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace padic {

struct Violation {
    std::string polynomial;  // coefficient text of the offending input
    unsigned long prime;
    std::string center;
    int failing_k;      // 0 when the failing check has no per-k index
    std::string check;  // "theorem", "corollary1", "corollary2", "corollary3", "proof_step"

    friend bool operator==(const Violation& a, const Violation& b) {
        return a.polynomial == b.polynomial && a.prime == b.prime && a.center == b.center &&
               a.failing_k == b.failing_k && a.check == b.check;
    }
};

struct CampaignResult {
    long total = 0;  // generated trials (the built-in corpus runs in addition)
    std::vector<Violation> violations;
    long tight_instances = 0;  // instances where some k met its bound exactly
    std::int64_t elapsed_ms = 0;
};

// Hand-picked instances that pin known behavior: the sharp degree-3 example,
// perfect powers with their base disk collapsing to a point, scaled and
// shifted variants. Always verified ahead of the random trials.
std::vector<Instance> builtin_corpus();

// Verifies the full set of claims on one instance: every per-k disk bound,
// both corollary enclosures, the exact-enclosure case when it applies, and
// the first-step valuation chain val(a_1) - val(n a_n) >= (n-1) base - v_p(n)
// on the recentered polynomial (checked only when a_1 != 0 there).
// Appends one Violation per failed claim; returns whether any k was tight.
bool check_instance(const Poly& P, const Prime& p, const Rational& center,
                    std::vector<Violation>& violations);

CampaignResult run_campaign(const GeneratorConfig& config);

}  // namespace padic
