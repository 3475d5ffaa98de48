// JSON encoding for every report type, plus the certificate-file wrapper
// the CLI emits. Rationals always cross as "num/den" strings and big
// integers as decimal strings, so round-trips are lossless. Parsers are
// plain functions (parse_x) rather than nlohmann from_json hooks because
// several types have no default constructor.
#pragma once

#include "apcolor/bounds.hpp"
#include "apcolor/coloring.hpp"
#include "apcolor/search.hpp"
#include "apcolor/simulate.hpp"
#include "apcolor/verifier.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace apcolor {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const ResidueSet& set);
Json to_json(const ColoringParams& params);
Json to_json(const Certificate& cert);
Json to_json(const KWindow& window);
Json to_json(const DirichletApprox& approx);
Json to_json(const BoundReport& report);
Json to_json(const ProgressionNorms& norms);
Json to_json(const SearchHit& hit);
Json to_json(const WitnessPair& pair);
Json to_json(const ScanReport& report);
Json to_json(const CampaignConfig& config);
Json to_json(const CampaignReport& report);

Rational parse_rational_json(const Json& j);
ColoringParams parse_coloring_params(const Json& j);
Certificate parse_certificate(const Json& j);
DirichletApprox parse_dirichlet_approx(const Json& j);
BoundReport parse_bound_report(const Json& j);
SearchHit parse_search_hit(const Json& j);
WitnessPair parse_witness_pair(const Json& j);
ScanReport parse_scan_report(const Json& j);
CampaignConfig parse_campaign_config(const Json& j);
CampaignReport parse_campaign_report(const Json& j);

/// Envelope written by every CLI subcommand.
struct CertificateFile {
    std::string schema_version = "1";
    std::string tool_version;
    std::string command;
    Json inputs;
    Json results;  // array
    std::int64_t timing_ms = 0;
};

Json to_json(const CertificateFile& file);
CertificateFile parse_certificate_file(const Json& j);

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace apcolor
