#include "apcolor/json_io.hpp"

#include <stdexcept>

namespace apcolor {

namespace {

Json integer_json(const Integer& v) { return v.str(); }

Integer parse_integer_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    return Integer(j.get<std::string>());
}

const char* status_name(CheckStatus s) {
    return s == CheckStatus::Verified ? "verified" : "refuted";
}

CheckStatus parse_status(const std::string& s) {
    if (s == "verified") return CheckStatus::Verified;
    if (s == "refuted") return CheckStatus::Refuted;
    throw std::invalid_argument("unknown certificate status: " + s);
}

DistanceCase parse_case(const std::string& s) {
    if (s == "unit") return DistanceCase::UnitDistance;
    if (s == "general") return DistanceCase::GeneralDistance;
    throw std::invalid_argument("unknown distance case: " + s);
}

CaseTag parse_case_tag(const std::string& s) {
    for (CaseTag t : {CaseTag::Large, CaseTag::Small, CaseTag::Rational1, CaseTag::Rational2,
                      CaseTag::Irrational})
        if (s == case_tag_name(t)) return t;
    throw std::invalid_argument("unknown witness case tag: " + s);
}

}  // namespace

Json to_json(const Rational& q) { return rational_to_string(q); }

Rational parse_rational_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json to_json(const ResidueSet& set) {
    return Json{{"p", set.modulus.value()}, {"members", set.members}};
}

Json to_json(const ColoringParams& params) {
    Json j{{"p", params.p.value()}, {"red_set", params.red_set.members}};
    if (params.generator) {
        j["d"] = params.generator->d;
        j["l"] = params.generator->l;
    }
    return j;
}

ColoringParams parse_coloring_params(const Json& j) {
    PrimeModulus p(j.at("p").get<std::int64_t>());
    if (j.contains("d")) {
        auto params = ColoringParams::from_generator(p, j.at("d").get<std::int64_t>(),
                                                     j.at("l").get<std::int64_t>());
        if (j.contains("red_set") &&
            params.red_set.members != j.at("red_set").get<std::vector<std::int64_t>>())
            throw std::invalid_argument("red_set does not match its generator");
        return params;
    }
    return ColoringParams::from_set(p, j.at("red_set").get<std::vector<std::int64_t>>());
}

Json to_json(const Certificate& cert) {
    Json j{{"lemma_id", cert.lemma_id},
           {"params", to_json(cert.params)},
           {"status", status_name(cert.status)},
           {"enumeration_size", cert.enumeration_size},
           {"notes", cert.notes}};
    if (cert.counterexample) j["counterexample"] = cert.counterexample->assignment;
    return j;
}

Certificate parse_certificate(const Json& j) {
    Certificate cert{j.at("lemma_id").get<std::string>(),
                     parse_coloring_params(j.at("params")),
                     parse_status(j.at("status").get<std::string>()),
                     std::nullopt,
                     j.at("enumeration_size").get<std::uint64_t>(),
                     j.at("notes").get<std::string>()};
    if (j.contains("counterexample"))
        cert.counterexample = Counterexample{
            j.at("counterexample").get<std::map<std::string, std::int64_t>>()};
    return cert;
}

Json to_json(const KWindow& window) {
    Json raw = Json::array();
    for (const Integer& k : window.raw) raw.push_back(integer_json(k));
    return Json{{"p", window.p}, {"raw", raw}, {"residues", window.residues}};
}

Json to_json(const DirichletApprox& approx) {
    return Json{{"a", integer_json(approx.a)},
                {"d", approx.d},
                {"N", approx.n},
                {"error", to_json(approx.error)},
                {"error_bound", to_json(approx.error_bound)}};
}

DirichletApprox parse_dirichlet_approx(const Json& j) {
    return DirichletApprox{parse_integer_json(j.at("a")), j.at("d").get<std::int64_t>(),
                           j.at("N").get<std::int64_t>(), parse_rational_json(j.at("error")),
                           parse_rational_json(j.at("error_bound"))};
}

Json to_json(const BoundReport& report) {
    return Json{{"p", report.p},
                {"case", distance_case_name(report.distance_case)},
                {"required_index_count", report.required_index_count},
                {"max_denominator", report.max_denominator},
                {"m", report.m},
                {"notes", report.notes}};
}

BoundReport parse_bound_report(const Json& j) {
    return BoundReport{j.at("p").get<std::int64_t>(),
                       parse_case(j.at("case").get<std::string>()),
                       j.at("required_index_count").get<std::int64_t>(),
                       j.at("max_denominator").get<std::int64_t>(),
                       j.at("m").get<std::int64_t>(),
                       j.at("notes").get<std::string>()};
}

Json to_json(const ProgressionNorms& norms) {
    Json values = Json::array();
    for (const Rational& v : norms.values) values.push_back(to_json(v));
    return Json{{"x0", to_json(norms.x0)},
                {"beta", to_json(norms.beta)},
                {"alpha_sq", to_json(norms.alpha_sq)},
                {"values", values}};
}

Json to_json(const SearchHit& hit) {
    return Json{{"params", to_json(hit.params)}, {"bound", to_json(hit.bound)}};
}

SearchHit parse_search_hit(const Json& j) {
    return SearchHit{parse_coloring_params(j.at("params")), parse_bound_report(j.at("bound"))};
}

Json to_json(const WitnessPair& pair) {
    return Json{{"case", case_tag_name(pair.case_tag)},
                {"alpha_red_sq_lo", to_json(pair.alpha_red_sq.lo)},
                {"alpha_red_sq_hi", to_json(pair.alpha_red_sq.hi)},
                {"alpha_blue_sq", to_json(pair.alpha_blue_sq)},
                {"b", integer_json(pair.b)},
                {"eps2", to_json(pair.eps2)},
                {"notes", pair.notes}};
}

WitnessPair parse_witness_pair(const Json& j) {
    return WitnessPair{{parse_rational_json(j.at("alpha_red_sq_lo")),
                        parse_rational_json(j.at("alpha_red_sq_hi"))},
                       parse_rational_json(j.at("alpha_blue_sq")),
                       parse_integer_json(j.at("b")),
                       parse_rational_json(j.at("eps2")),
                       parse_case_tag(j.at("case").get<std::string>()),
                       j.at("notes").get<std::string>()};
}

Json to_json(const ScanReport& report) {
    Json runs = Json::array();
    for (const ColorRun& run : report.runs)
        runs.push_back(Json::array({color_name(run.color), run.count}));
    Json j{{"red_l3_found", report.red_l3_found},
           {"max_blue_run", report.max_blue_run},
           {"runs", runs}};
    if (report.red_l3_index) j["red_l3_index"] = *report.red_l3_index;
    return j;
}

ScanReport parse_scan_report(const Json& j) {
    ScanReport report;
    report.red_l3_found = j.at("red_l3_found").get<bool>();
    if (j.contains("red_l3_index")) report.red_l3_index = j.at("red_l3_index").get<std::int64_t>();
    report.max_blue_run = j.at("max_blue_run").get<std::int64_t>();
    for (const Json& run : j.at("runs"))
        report.runs.push_back(ColorRun{
            run.at(0).get<std::string>() == "Red" ? Color::Red : Color::Blue,
            run.at(1).get<std::int64_t>()});
    return report;
}

Json to_json(const CampaignConfig& config) {
    return Json{{"dims", config.dims},
                {"alpha_sq", to_json(config.alpha_sq)},
                {"length", config.length},
                {"trials", config.trials},
                {"master_seed", config.master_seed},
                {"coord_bound", config.coord_bound},
                {"start_num_bound", config.start_num_bound},
                {"length_cap", config.length_cap},
                {"threads", config.threads}};
}

CampaignConfig parse_campaign_config(const Json& j) {
    CampaignConfig config;
    config.dims = j.at("dims").get<std::vector<int>>();
    config.alpha_sq = parse_rational_json(j.at("alpha_sq"));
    config.length = j.at("length").get<std::int64_t>();
    config.trials = j.at("trials").get<std::int64_t>();
    config.master_seed = j.at("master_seed").get<std::uint64_t>();
    config.coord_bound = j.at("coord_bound").get<std::int64_t>();
    config.start_num_bound = j.at("start_num_bound").get<std::int64_t>();
    config.length_cap = j.at("length_cap").get<std::int64_t>();
    config.threads = j.at("threads").get<int>();
    return config;
}

Json to_json(const CampaignReport& report) {
    Json histogram = Json::array();
    for (const auto& [run, count] : report.blue_run_histogram)
        histogram.push_back(Json::array({run, count}));
    return Json{{"config", to_json(report.config)},
                {"trials_run", report.trials_run},
                {"red_l3_total", report.red_l3_total},
                {"max_blue_run", report.max_blue_run},
                {"blue_run_histogram", histogram}};
}

CampaignReport parse_campaign_report(const Json& j) {
    CampaignReport report;
    report.config = parse_campaign_config(j.at("config"));
    report.trials_run = j.at("trials_run").get<std::int64_t>();
    report.red_l3_total = j.at("red_l3_total").get<std::int64_t>();
    report.max_blue_run = j.at("max_blue_run").get<std::int64_t>();
    for (const Json& bucket : j.at("blue_run_histogram"))
        report.blue_run_histogram[bucket.at(0).get<std::int64_t>()] =
            bucket.at(1).get<std::int64_t>();
    return report;
}

Json to_json(const CertificateFile& file) {
    return Json{{"schema_version", file.schema_version},
                {"tool_version", file.tool_version},
                {"command", file.command},
                {"inputs", file.inputs},
                {"results", file.results},
                {"timing_ms", file.timing_ms}};
}

CertificateFile parse_certificate_file(const Json& j) {
    return CertificateFile{j.at("schema_version").get<std::string>(),
                           j.at("tool_version").get<std::string>(),
                           j.at("command").get<std::string>(),
                           j.at("inputs"),
                           j.at("results"),
                           j.at("timing_ms").get<std::int64_t>()};
}

}  // namespace apcolor
