#include "padicgl/report.hpp"

#include <ostream>
#include <stdexcept>

namespace padic {

Json valuation_json(const ExtendedValuation& v) {
    if (v.is_infinite()) return Json("inf");
    Json j;
    j["num"] = to_long(v.finite().get_num());
    j["den"] = to_long(v.finite().get_den());
    return j;
}

std::string norm_string(const Prime& p, const ExtendedValuation& v) {
    if (v.is_infinite()) return "0";
    Rational exponent(-v.finite());
    if (exponent == 0) return "1";
    std::string base = std::to_string(p.value());
    if (exponent.get_den() == 1) return base + "^" + exponent.get_num().get_str();
    return base + "^(" + to_string(exponent) + ")";
}

Json polygon_json(const NewtonPolygon& polygon) {
    Json verts = Json::array();
    for (const PolygonVertex& v : polygon.vertices()) {
        Json jv;
        jv["index"] = v.index;
        jv["valuation"] = valuation_json(ExtendedValuation(v.valuation));
        verts.push_back(std::move(jv));
    }
    Json j;
    j["zero_root_count"] = polygon.zero_root_count();
    j["vertices"] = std::move(verts);
    return j;
}

Json multiset_json(const Prime& p, const ValuationMultiset& vals) {
    Json jvals = Json::array();
    Json jnorms = Json::array();
    for (const ExtendedValuation& v : vals.entries()) {
        jvals.push_back(valuation_json(v));
        jnorms.push_back(norm_string(p, v));
    }
    Json j;
    j["vals"] = std::move(jvals);
    j["norms"] = std::move(jnorms);
    return j;
}

Json radii_json(const CriticalRadii& radii) {
    Json jvals = Json::array();
    Json jnorms = Json::array();
    for (const ExtendedValuation& v : radii.radii_vals) {
        jvals.push_back(valuation_json(v));
        jnorms.push_back(norm_string(radii.prime, v));
    }
    Json j;
    j["prime"] = radii.prime.value();
    j["degree"] = radii.degree;
    j["base_val"] = valuation_json(radii.base_val);
    j["base_norm"] = norm_string(radii.prime, radii.base_val);
    j["radii_vals"] = std::move(jvals);
    j["radii_norms"] = std::move(jnorms);
    return j;
}

Json report_json(const Prime& p, const TheoremReport& report) {
    Json per_k = Json::array();
    for (const PerKResult& pk : report.per_k) {
        Json j;
        j["k"] = pk.k;
        j["bound_val"] = valuation_json(pk.bound_val);
        j["bound_norm"] = norm_string(p, pk.bound_val);
        j["count_in_disk"] = pk.count_in_disk;
        j["holds"] = pk.holds;
        j["tight"] = pk.tight;
        per_k.push_back(std::move(j));
    }
    Json j;
    j["per_k"] = std::move(per_k);
    j["all_hold"] = report.all_hold;
    j["corollary1_holds"] = report.corollary1_holds;
    j["corollary2_holds"] = report.corollary2_holds;
    j["corollary3_applicable"] = report.corollary3_applicable;
    return j;
}

const char* mode_name(GenMode mode) {
    switch (mode) {
        case GenMode::FromRoots: return "roots";
        case GenMode::RandomCoeffs: return "coeffs";
        case GenMode::Mixed: return "mixed";
    }
    throw std::invalid_argument("unknown generator mode");
}

GenMode parse_mode(const std::string& name) {
    if (name == "roots") return GenMode::FromRoots;
    if (name == "coeffs") return GenMode::RandomCoeffs;
    if (name == "mixed") return GenMode::Mixed;
    throw std::invalid_argument("unknown generator mode: " + name);
}

namespace {

Json input_json(const Poly& P, const Prime& p, const Rational& center,
                const std::optional<ExtendedValuation>& radius_val) {
    Json j;
    j["poly"] = P.to_text();
    j["prime"] = p.value();
    j["center"] = to_string(center);
    if (radius_val) j["radius_exp"] = valuation_json(*radius_val);
    return j;
}

}  // namespace

Json analysis_json(const Poly& P, const Prime& p, const Rational& center,
                   const std::optional<ExtendedValuation>& radius_val) {
    TheoremReport report = radius_val ? verify_with_explicit_disk(P, p, center, *radius_val)
                                      : verify_theorem(P, p, center);
    Poly Q = P.taylor_shift(center);
    ValuationMultiset root_vals = root_valuations(Q, p);
    ValuationMultiset deriv_vals = root_valuations(Q.derivative(), p);
    ExtendedValuation base = radius_val ? *radius_val : root_vals.min();

    Json j;
    j["input"] = input_json(P, p, center, radius_val);
    j["newton_polygon"] = polygon_json(build_polygon(Q, p));
    j["root_valuations"] = multiset_json(p, root_vals);
    j["derivative_valuations"] = multiset_json(p, deriv_vals);
    j["critical_radii"] = radii_json(critical_radii(Q.degree(), base, p));
    j["report"] = report_json(p, report);
    return j;
}

namespace {

std::string multiset_line(const Prime& p, const ValuationMultiset& vals) {
    std::string line;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i > 0) line += ", ";
        const ExtendedValuation& v = vals.entries()[i];
        line += v.str() + " (|.| = " + norm_string(p, v) + ")";
    }
    return line;
}

}  // namespace

void write_analysis_text(std::ostream& out, const Poly& P, const Prime& p,
                         const Rational& center,
                         const std::optional<ExtendedValuation>& radius_val) {
    TheoremReport report = radius_val ? verify_with_explicit_disk(P, p, center, *radius_val)
                                      : verify_theorem(P, p, center);
    Poly Q = P.taylor_shift(center);
    ValuationMultiset root_vals = root_valuations(Q, p);
    ValuationMultiset deriv_vals = root_valuations(Q.derivative(), p);
    ExtendedValuation base = radius_val ? *radius_val : root_vals.min();
    CriticalRadii radii = critical_radii(Q.degree(), base, p);
    NewtonPolygon polygon = build_polygon(Q, p);

    out << "polynomial: " << P.to_text() << "  degree " << P.degree() << "\n";
    out << "prime: " << p.value() << "  center: " << to_string(center) << "\n";
    out << "newton polygon (recentered): zero_root_count=" << polygon.zero_root_count()
        << "  vertices:";
    for (const PolygonVertex& v : polygon.vertices()) {
        out << " (" << v.index << ", " << to_string(v.valuation) << ")";
    }
    out << "\n";
    out << "root valuations: " << multiset_line(p, root_vals) << "\n";
    out << "critical point valuations: " << multiset_line(p, deriv_vals) << "\n";
    out << (radius_val ? "disk radius: " : "minimal enclosing radius: ")
        << norm_string(p, base) << "  (valuation " << base.str() << ")\n";
    for (const PerKResult& pk : report.per_k) {
        out << "  k=" << pk.k << ": r_" << pk.k << " = " << norm_string(p, pk.bound_val)
            << " (val " << pk.bound_val.str() << "), critical points in disk: "
            << pk.count_in_disk << ", " << (pk.holds ? "holds" : "VIOLATED")
            << (pk.tight ? ", tight" : "") << "\n";
    }
    out << "corollary enclosures: first=" << (report.corollary1_holds ? "holds" : "VIOLATED")
        << ", all=" << (report.corollary2_holds ? "holds" : "VIOLATED")
        << ", exact-applicable=" << (report.corollary3_applicable ? "yes" : "no") << "\n";
    out << "verdict: " << (report.all_hold ? "THEOREM HOLDS" : "THEOREM VIOLATED") << "\n";
}

Json polygon_only_json(const Poly& P, const Prime& p, const Rational& center) {
    Poly Q = P.taylor_shift(center);
    Json j;
    j["input"] = input_json(P, p, center, std::nullopt);
    j["newton_polygon"] = polygon_json(build_polygon(Q, p));
    j["root_valuations"] = multiset_json(p, root_valuations(Q, p));
    return j;
}

void write_polygon_text(std::ostream& out, const Poly& P, const Prime& p,
                        const Rational& center) {
    Poly Q = P.taylor_shift(center);
    NewtonPolygon polygon = build_polygon(Q, p);
    out << "polynomial: " << P.to_text() << "  degree " << P.degree() << "\n";
    out << "prime: " << p.value() << "  center: " << to_string(center) << "\n";
    out << "zero_root_count: " << polygon.zero_root_count() << "\n";
    out << "vertices:";
    for (const PolygonVertex& v : polygon.vertices()) {
        out << " (" << v.index << ", " << to_string(v.valuation) << ")";
    }
    out << "\n";
    out << "root valuations: " << multiset_line(p, root_valuations(Q, p)) << "\n";
}

Json campaign_json(const GeneratorConfig& config, const CampaignResult& result) {
    Json primes = Json::array();
    for (const Prime& p : config.primes) primes.push_back(p.value());
    Json jconfig;
    jconfig["seed"] = config.seed;
    jconfig["primes"] = std::move(primes);
    jconfig["degree_min"] = config.degree_min;
    jconfig["degree_max"] = config.degree_max;
    jconfig["coeff_height"] = config.coeff_height;
    jconfig["mode"] = mode_name(config.mode);
    jconfig["trials"] = config.trials;

    Json jviolations = Json::array();
    for (const Violation& v : result.violations) {
        Json jv;
        jv["polynomial"] = v.polynomial;
        jv["prime"] = v.prime;
        jv["center"] = v.center;
        jv["failing_k"] = v.failing_k;
        jv["check"] = v.check;
        jviolations.push_back(std::move(jv));
    }

    Json j;
    j["config"] = std::move(jconfig);
    j["total"] = result.total;
    j["violations"] = std::move(jviolations);
    j["tight_instances"] = result.tight_instances;
    j["elapsed_ms"] = result.elapsed_ms;
    return j;
}

void write_campaign_text(std::ostream& out, const GeneratorConfig& config,
                         const CampaignResult& result) {
    out << "campaign: seed=" << config.seed << " trials=" << config.trials << " primes=";
    for (std::size_t i = 0; i < config.primes.size(); ++i) {
        out << (i > 0 ? "," : "") << config.primes[i].value();
    }
    out << " degrees=" << config.degree_min << ":" << config.degree_max
        << " coeff_height=" << config.coeff_height << " mode=" << mode_name(config.mode)
        << "\n";
    out << "verified: " << result.total << " generated instances plus built-in corpus\n";
    out << "violations: " << result.violations.size() << "\n";
    for (const Violation& v : result.violations) {
        out << "  check=" << v.check << " poly=" << v.polynomial << " prime=" << v.prime
            << " center=" << v.center << " k=" << v.failing_k << "\n";
    }
    out << "tight instances: " << result.tight_instances << "\n";
    out << "elapsed: " << result.elapsed_ms << " ms\n";
}

}  // namespace padic
