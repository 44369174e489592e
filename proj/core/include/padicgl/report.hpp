#pragma once

#include "padicgl/campaign.hpp"
#include "padicgl/gauss_lucas.hpp"
#include "padicgl/generator.hpp"
#include "padicgl/newton_polygon.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace padic {

// Key order is fixed so reruns serialize byte for byte.
using Json = nlohmann::ordered_json;

// {"num": .., "den": ..} for finite values, the string "inf" otherwise.
Json valuation_json(const ExtendedValuation& v);

// Norm p^-v as a display string: "3^2", "3^(1/2)", "1" for exponent zero,
// "0" for an infinite valuation.
std::string norm_string(const Prime& p, const ExtendedValuation& v);

Json polygon_json(const NewtonPolygon& polygon);
Json multiset_json(const Prime& p, const ValuationMultiset& vals);
Json radii_json(const CriticalRadii& radii);
Json report_json(const Prime& p, const TheoremReport& report);

const char* mode_name(GenMode mode);
GenMode parse_mode(const std::string& name);

// Full analysis of one instance: recentered Newton polygon, root and critical
// point valuations, disk radii, verdicts. radius_val switches the check from
// the minimal enclosing disk to the supplied one.
Json analysis_json(const Poly& P, const Prime& p, const Rational& center,
                   const std::optional<ExtendedValuation>& radius_val);
void write_analysis_text(std::ostream& out, const Poly& P, const Prime& p,
                         const Rational& center,
                         const std::optional<ExtendedValuation>& radius_val);

Json polygon_only_json(const Poly& P, const Prime& p, const Rational& center);
void write_polygon_text(std::ostream& out, const Poly& P, const Prime& p,
                        const Rational& center);

Json campaign_json(const GeneratorConfig& config, const CampaignResult& result);
void write_campaign_text(std::ostream& out, const GeneratorConfig& config,
                         const CampaignResult& result);

}  // namespace padic
