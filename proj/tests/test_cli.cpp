// Drives the installed binary end to end: exit codes, certificate files,
// stdout streams.
#include "apcolor/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using namespace apcolor;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = "cli_stdout.tmp";
    const std::string command =
        env_prefix + std::string(APCOLOR_BIN) + " " + args + " > " + out_path + " 2>cli_stderr.tmp";
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(raw);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    result.stdout_text = ss.str();
    return result;
}

Json output_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    Json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("verify: canonical 29 instance passes with four certificates") {
    const RunResult r = run("verify --prime 29 --d 4 --l 4 --alpha-sq 1 --output verify29.json");
    CHECK(r.exit_code == 0);
    const CertificateFile file = parse_certificate_file(output_json("verify29.json"));
    CHECK(file.command == "verify");
    CHECK(file.results.size() == 4);
    for (const Json& cert : file.results)
        CHECK(parse_certificate(cert).status == CheckStatus::Verified);
}

TEST_CASE("verify: defaults to the canonical 29 instance") {
    const RunResult r = run("verify --output verify_default.json");
    CHECK(r.exit_code == 0);
    const CertificateFile file = parse_certificate_file(output_json("verify_default.json"));
    CHECK(parse_certificate(file.results.at(0)).params == ColoringParams::canonical29());
}

TEST_CASE("verify: d=3 fails divisibility with exit 1") {
    const RunResult r = run("verify --prime 29 --d 3 --l 4 --alpha-sq 1 --output verify_d3.json");
    CHECK(r.exit_code == 1);
    bool divisibility_refuted = false;
    const Json doc = output_json("verify_d3.json");
    for (const Json& cert_json : doc.at("results")) {
        const Certificate cert = parse_certificate(cert_json);
        if (cert.lemma_id == "divisibility_condition")
            divisibility_refuted = cert.status == CheckStatus::Refuted;
    }
    CHECK(divisibility_refuted);
}

TEST_CASE("verify: composite modulus is a usage error") {
    CHECK(run("verify --prime 30 --d 4 --l 4").exit_code == 2);
}

TEST_CASE("verify: general case adds the complement translate check") {
    const RunResult r =
        run("verify --params canonical47 --alpha-sq 5/4 --output verify47.json");
    CHECK(r.exit_code == 0);
    const CertificateFile file = parse_certificate_file(output_json("verify47.json"));
    CHECK(file.results.size() == 5);
}

TEST_CASE("verify: lemma selector runs a single check") {
    const RunResult r = run(
        "verify --params canonical47 --lemma translates-complement --output verify_sel.json");
    CHECK(r.exit_code == 0);
    const CertificateFile file = parse_certificate_file(output_json("verify_sel.json"));
    REQUIRE(file.results.size() == 1);
    const Certificate cert = parse_certificate(file.results.at(0));
    CHECK(cert.lemma_id == "blue_translates");
    CHECK(cert.notes == "complement of nonzero squares");
    CHECK(cert.status == CheckStatus::Verified);
}

TEST_CASE("bound reproduces both canonical constants") {
    const RunResult unit = run("bound --prime 29 --case unit --output bound29.json");
    CHECK(unit.exit_code == 0);
    CHECK(parse_bound_report(output_json("bound29.json").at("results").at(0)).m == 1177);

    const RunResult general = run("bound --prime 47 --case general --output bound47.json");
    CHECK(general.exit_code == 0);
    CHECK(parse_bound_report(output_json("bound47.json").at("results").at(0)).m == 8649);
}

TEST_CASE("witness: rational fixture 1/2 -> (48, 24)") {
    const RunResult r = run("witness --alpha-sq 1/2 --output witness_half.json");
    CHECK(r.exit_code == 0);
    const WitnessPair pair =
        parse_witness_pair(output_json("witness_half.json").at("results").at(0));
    CHECK(pair.case_tag == CaseTag::Rational1);
    CHECK(pair.alpha_red_sq.lo == 48);
    CHECK(pair.alpha_blue_sq == 24);
}

TEST_CASE("witness: undecided interval exits 1") {
    const RunResult r =
        run("witness --alpha-sq-interval 1:2 --max-search 50 --output witness_wide.json");
    CHECK(r.exit_code == 1);
    CHECK(output_json("witness_wide.json").at("results").at(0).at("status") == "undecided");
}

TEST_CASE("witness: uncovered ratio exits 1 with a note") {
    const RunResult r = run("witness --alpha-sq 1/47 --output witness_uncovered.json");
    CHECK(r.exit_code == 1);
    CHECK(output_json("witness_uncovered.json").at("results").at(0).at("status") ==
          "not_covered");
}

TEST_CASE("color: streams one token per point") {
    {
        std::ofstream pts("points.jsonl");
        pts << "[\"0/1\",\"0/1\"]\n";
        pts << "2/1,0/1\n";
        pts << "[\"5/3\",\"0/1\",\"0/1\"]\n";
    }
    const RunResult r = run("color --params canonical29 --points points.jsonl");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "Red\nRed\nBlue\n");
}

TEST_CASE("color: missing points file is an IO error") {
    CHECK(run("color --params canonical29 --points does_not_exist.jsonl").exit_code == 2);
}

TEST_CASE("simulate: small campaign runs clean") {
    const RunResult r = run(
        "simulate --params canonical29 --alpha-sq 1 --dims 2,3 --length 200 --trials 20 "
        "--seed 5 --output simulate.json");
    CHECK(r.exit_code == 0);
    const CampaignReport report =
        parse_campaign_report(output_json("simulate.json").at("results").at(0));
    CHECK(report.trials_run == 20);
    CHECK(report.red_l3_total == 0);
}

TEST_CASE("search: tiny sweep finds the canonical instance") {
    const RunResult r = run(
        "search --p-min 23 --p-max 31 --d-min 4 --d-max 6 --l-min 3 --l-max 6 "
        "--output search.json");
    CHECK(r.exit_code == 0);
    const Json results = output_json("search.json").at("results");
    REQUIRE(results.size() == 1);
    const SearchHit hit = parse_search_hit(results.at(0));
    CHECK(hit.params.p.value() == 29);
    CHECK(hit.bound.m == 1177);
}

TEST_CASE("APCOLOR_OUTPUT supplies the output path when the flag is absent") {
    const RunResult r = run("bound --prime 29 --case unit", "APCOLOR_OUTPUT=bound_env.json ");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.empty());
    CHECK(parse_bound_report(output_json("bound_env.json").at("results").at(0)).m == 1177);
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("verify --help").exit_code == 0);
}

TEST_CASE("points files tolerate CRLF line endings") {
    {
        std::ofstream pts("points_crlf.jsonl", std::ios::binary);
        pts << "2/1,0/1\r\n";
    }
    const RunResult r = run("color --params canonical29 --points points_crlf.jsonl");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "Red\n");
}

TEST_CASE("unknown flags are usage errors") {
    CHECK(run("verify --no-such-flag").exit_code == 2);
    CHECK(run("bound --prime 30").exit_code == 2);
}

TEST_CASE("certificate file output is stable across runs") {
    const RunResult a = run("verify --params canonical29 --alpha-sq 1 --output stable_a.json");
    const RunResult b = run("verify --params canonical29 --alpha-sq 1 --output stable_b.json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    Json ja = output_json("stable_a.json");
    Json jb = output_json("stable_b.json");
    // Timing is excluded from the determinism contract.
    ja.erase("timing_ms");
    jb.erase("timing_ms");
    CHECK(ja == jb);
}
