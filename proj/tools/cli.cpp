#include "cli.hpp"

#include "padicgl/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace padic {

namespace {

struct InstanceOpts {
    unsigned long prime = 0;
    std::string poly;
    std::string center = "0";
    bool json = false;
    std::string out_path;
};

struct CampaignOpts {
    std::uint64_t seed = 0;
    long trials = 1000;
    std::string primes = "2,3,5,7,11,13";
    std::string degrees = "2:8";
    int coeff_height = 10;
    std::string mode = "mixed";
    bool json = false;
    std::string out_path;
};

void add_instance_options(CLI::App* cmd, InstanceOpts& o) {
    cmd->add_option("--prime", o.prime, "prime p of the valuation")->required();
    cmd->add_option("--poly", o.poly, "coefficients lowest degree first, e.g. 0,0,-1,1")
        ->required();
    cmd->add_option("--center", o.center, "disk center, a rational");
    cmd->add_flag("--json", o.json, "print the JSON report instead of text");
    cmd->add_option("--out", o.out_path, "also write the JSON report to this file");
}

void add_output_options(CLI::App* cmd, CampaignOpts& o) {
    cmd->add_flag("--json", o.json, "print the JSON report instead of text");
    cmd->add_option("--out", o.out_path, "also write the JSON report to this file");
}

// Prints either the JSON document or its human rendering, and mirrors the
// JSON to --out when requested.
template <typename TextWriter>
void deliver(const Json& j, bool as_json, const std::string& out_path, std::ostream& out,
             TextWriter&& write_text) {
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        write_text(out);
    }
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        file << j.dump(2) << "\n";
    }
}

std::vector<Prime> parse_primes(const std::string& text) {
    std::vector<Prime> primes;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        primes.emplace_back(std::stoul(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return primes;
}

std::pair<int, int> parse_degrees(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("degree range must look like min:max");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

int run_instance(const InstanceOpts& o, const std::optional<std::string>& radius_exp,
                 std::ostream& out) {
    Prime p(o.prime);
    Poly P = Poly::parse(o.poly);
    Rational center = parse_rational(o.center);
    std::optional<ExtendedValuation> radius;
    if (radius_exp) radius = ExtendedValuation(parse_rational(*radius_exp));

    Json j = analysis_json(P, p, center, radius);
    deliver(j, o.json, o.out_path, out,
            [&](std::ostream& os) { write_analysis_text(os, P, p, center, radius); });
    return j["report"]["all_hold"].get<bool>() ? 0 : 2;
}

int run_polygon(const InstanceOpts& o, std::ostream& out) {
    Prime p(o.prime);
    Poly P = Poly::parse(o.poly);
    Rational center = parse_rational(o.center);
    Json j = polygon_only_json(P, p, center);
    deliver(j, o.json, o.out_path, out,
            [&](std::ostream& os) { write_polygon_text(os, P, p, center); });
    return 0;
}

int run_campaign_cmd(const CampaignOpts& o, std::ostream& out) {
    GeneratorConfig config;
    config.seed = o.seed;
    config.trials = o.trials;
    config.primes = parse_primes(o.primes);
    auto [dmin, dmax] = parse_degrees(o.degrees);
    config.degree_min = dmin;
    config.degree_max = dmax;
    config.coeff_height = o.coeff_height;
    config.mode = parse_mode(o.mode);

    CampaignResult result = run_campaign(config);
    Json j = campaign_json(config, result);
    deliver(j, o.json, o.out_path, out,
            [&](std::ostream& os) { write_campaign_text(os, config, result); });
    return result.violations.empty() ? 0 : 2;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Newton polygon analysis of root and critical point disks over Q_p"};
    app.require_subcommand(1);

    InstanceOpts analyze_opts;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "full report for one polynomial: polygon, valuations, disk bounds");
    add_instance_options(analyze, analyze_opts);

    InstanceOpts verify_opts;
    std::string radius_exp;
    CLI::App* verify = app.add_subcommand(
        "verify", "check the disk bounds against an explicitly supplied root disk");
    add_instance_options(verify, verify_opts);
    verify
        ->add_option("--radius-exp", radius_exp,
                     "valuation exponent of the disk radius p^-e, a rational")
        ->required();

    InstanceOpts polygon_opts;
    CLI::App* polygon = app.add_subcommand(
        "polygon", "Newton polygon and root valuations only");
    add_instance_options(polygon, polygon_opts);

    CampaignOpts campaign_opts;
    CLI::App* campaign = app.add_subcommand(
        "campaign", "verify the bounds on randomly generated instances");
    campaign->add_option("--seed", campaign_opts.seed, "campaign seed");
    campaign->add_option("--trials", campaign_opts.trials, "number of generated instances");
    campaign->add_option("--primes", campaign_opts.primes, "comma separated primes to draw from");
    campaign->add_option("--degrees", campaign_opts.degrees, "degree range min:max");
    campaign->add_option("--coeff-height", campaign_opts.coeff_height,
                         "bound on coefficient and root numerators/denominators");
    campaign->add_option("--mode", campaign_opts.mode,
                         "instance construction: roots, coeffs or mixed");
    add_output_options(campaign, campaign_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return run_instance(analyze_opts, std::nullopt, out);
        if (verify->parsed()) return run_instance(verify_opts, radius_exp, out);
        if (polygon->parsed()) return run_polygon(polygon_opts, out);
        if (campaign->parsed()) return run_campaign_cmd(campaign_opts, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 1;
}

}  // namespace padic
