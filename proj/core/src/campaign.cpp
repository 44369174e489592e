#include "padicgl/campaign.hpp"

#include <chrono>
#include <utility>

namespace padic {

std::vector<Instance> builtin_corpus() {
    auto inst = [](const char* poly, unsigned long p, const char* center) {
        return Instance{Poly::parse(poly), Prime(p), parse_rational(center), std::nullopt};
    };
    return {
        // z^2 (z - 1): the bound for k = 2 is met with equality at p = 3
        inst("0,0,-1,1", 3, "0"),
        inst("0,0,-1,1", 2, "0"),
        // scaled copy, same geometry
        inst("0,0,-7,7", 3, "0"),
        // perfect powers: (z-1)^4 and (z-2)^6, the latter centered on its root
        // so every valuation in sight is infinite
        inst("1,-4,6,-4,1", 2, "0"),
        inst("1,-4,6,-4,1", 3, "0"),
        inst("64,-192,240,-160,60,-12,1", 2, "2"),
        inst("64,-192,240,-160,60,-12,1", 5, "2"),
        // (z+3)^2 and a degree-2 instance with distinct root valuations
        inst("9,6,1", 3, "0"),
        inst("0,-2,3", 3, "0"),
        inst("2,-3,1", 2, "0"),
    };
}

bool check_instance(const Poly& P, const Prime& p, const Rational& center,
                    std::vector<Violation>& violations) {
    std::string poly_text = P.to_text();
    std::string center_text = to_string(center);
    auto report_violation = [&](int k, const char* check) {
        violations.push_back(Violation{poly_text, p.value(), center_text, k, check});
    };

    TheoremReport report = verify_theorem(P, p, center);
    bool tight = false;
    for (const PerKResult& pk : report.per_k) {
        if (!pk.holds) report_violation(pk.k, "theorem");
        tight = tight || pk.tight;
    }
    if (!report.corollary1_holds) report_violation(0, "corollary1");
    if (!report.corollary2_holds) report_violation(0, "corollary2");
    // when v_p(n) = 0 the two radii coincide, so the exact enclosure must hold
    if (report.corollary3_applicable && !report.corollary2_holds) report_violation(0, "corollary3");

    Poly Q = P.taylor_shift(center);
    if (Q.coeff(1) != 0) {
        long n = Q.degree();
        Rational va1 = valuation_of_rational(Q.coeff(1), p).finite();
        Rational vnan = valuation_of_rational(Rational(n) * Q.leading(), p).finite();
        Rational vpn = valuation_of_rational(Rational(n), p).finite();
        // a_1 != 0 forces some root away from 0, so the base valuation is finite
        Rational base = root_valuations(Q, p).min().finite();
        ValuationMultiset omega = root_valuations(Q.derivative(), p);
        Rational upper(Rational(n - 1) * omega.kth(1).finite());
        Rational middle(va1 - vnan);
        Rational lower(Rational(n - 1) * base - vpn);
        if (!(upper >= middle && middle >= lower)) report_violation(1, "proof_step");
    }
    return tight;
}

CampaignResult run_campaign(const GeneratorConfig& config) {
    validate(config);
    auto start = std::chrono::steady_clock::now();

    CampaignResult result;
    for (const Instance& inst : builtin_corpus()) {
        if (check_instance(inst.poly, inst.prime, inst.center, result.violations))
            ++result.tight_instances;
    }
    for (long i = 0; i < config.trials; ++i) {
        Instance inst = generate_instance(config, i);
        if (check_instance(inst.poly, inst.prime, inst.center, result.violations))
            ++result.tight_instances;
    }
    result.total = config.trials;
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return result;
}

}  // namespace padic
