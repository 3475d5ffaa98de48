// apcolor command-line driver: verify / bound / search / witness / color /
// simulate, all emitting a JSON certificate file. Exit codes: 0 when every
// result verified, 1 when anything was refuted or undecided, 2 on usage or
// I/O errors.
#include "apcolor/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

namespace {

using namespace apcolor;

enum ExitCode { kOk = 0, kRefuted = 1, kUsage = 2 };

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    const std::string env = env_or("APCOLOR_THREADS", "");
    if (!env.empty()) return std::max(1, std::atoi(env.c_str()));
    return std::max(1u, std::thread::hardware_concurrency());
}

struct ParamFlags {
    std::string preset;
    std::int64_t prime = 0;
    std::int64_t d = 0;
    std::int64_t l = 0;
    std::string red_set;
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
    cmd->add_option("--params", flags.preset, "named preset: canonical29 or canonical47");
    cmd->add_option("--prime", flags.prime, "odd prime modulus p");
    cmd->add_option("--d", flags.d, "red-set step d");
    cmd->add_option("--l", flags.l, "red-set length l");
    cmd->add_option("--red-set", flags.red_set, "explicit red residues, e.g. 0,4,8,12");
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

ColoringParams resolve_params(const ParamFlags& flags) {
    if (!flags.preset.empty()) {
        if (flags.preset == "canonical29") return ColoringParams::canonical29();
        if (flags.preset == "canonical47") return ColoringParams::canonical47();
        throw std::invalid_argument("unknown preset: " + flags.preset);
    }
    if (flags.prime == 0) return ColoringParams::canonical29();
    PrimeModulus p(flags.prime);
    if (!flags.red_set.empty()) return ColoringParams::from_set(p, parse_int_list(flags.red_set));
    if (flags.d == 0 || flags.l == 0)
        throw std::invalid_argument("--prime needs either --d/--l or --red-set");
    return ColoringParams::from_generator(p, flags.d, flags.l);
}

class Emitter {
public:
    Emitter(std::string command, Json inputs, const std::string& output_flag,
            bool stdout_fallback = true)
        : start_(std::chrono::steady_clock::now()),
          output_path_(output_flag),
          stdout_fallback_(stdout_fallback) {
        file_.schema_version = kSchemaVersion;
        file_.tool_version = kToolVersion;
        file_.command = std::move(command);
        file_.inputs = std::move(inputs);
        file_.results = Json::array();
        if (output_path_.empty()) output_path_ = env_or("APCOLOR_OUTPUT", "");
    }

    void add_result(Json result) { file_.results.push_back(std::move(result)); }

    int finish(int exit_code) {
        file_.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start_)
                              .count();
        const std::string text = to_json(file_).dump(2);
        if (output_path_.empty()) {
            // The color subcommand owns stdout for its token stream.
            if (stdout_fallback_) std::cout << text << "\n";
        } else {
            std::ofstream out(output_path_);
            if (!out) throw std::runtime_error("cannot write output file: " + output_path_);
            out << text << "\n";
        }
        return exit_code;
    }

private:
    CertificateFile file_;
    std::chrono::steady_clock::time_point start_;
    std::string output_path_;
    bool stdout_fallback_ = true;
};

int run_verify(const ParamFlags& param_flags, const std::string& alpha_sq_text,
               const std::string& lemma, const std::string& dist_case,
               const std::string& output) {
    const ColoringParams params = resolve_params(param_flags);
    const Rational alpha_sq = parse_rational(alpha_sq_text);
    const KWindow window = k_window(alpha_sq, params.p);
    const bool general = dist_case == "general" || (dist_case == "auto" && alpha_sq != 1);

    Emitter emitter("verify",
                    Json{{"params", to_json(params)},
                         {"alpha_sq", to_json(alpha_sq)},
                         {"window", to_json(window)},
                         {"lemma", lemma},
                         {"case", general ? "general" : "unit"}},
                    output);

    std::vector<Certificate> certs;
    const bool all = lemma == "all";
    if (all || lemma == "range") certs.push_back(range_certificate(params, window));
    if ((all && params.generator && params.generator->d >= 2) || lemma == "divisibility")
        certs.push_back(divisibility_certificate(params, window));
    if (all || lemma == "red-l3") certs.push_back(check_red_l3(params, window));
    const ResidueSet sq = squares(params.p);
    if (all || lemma == "translates")
        certs.push_back(check_blue_translates(params, sq, "squares"));
    if ((all && general) || lemma == "translates-complement")
        certs.push_back(check_blue_translates(params, complement(without_zero(sq)),
                                              "complement of nonzero squares"));
    if (certs.empty()) throw std::invalid_argument("unknown lemma selector: " + lemma);

    bool refuted = false;
    for (const Certificate& cert : certs) {
        refuted = refuted || cert.status == CheckStatus::Refuted;
        emitter.add_result(to_json(cert));
    }
    return emitter.finish(refuted ? kRefuted : kOk);
}

int run_bound(std::int64_t prime, const std::string& dist_case, const std::string& output) {
    PrimeModulus p(prime);
    const DistanceCase c =
        dist_case == "general" ? DistanceCase::GeneralDistance : DistanceCase::UnitDistance;
    Emitter emitter("bound", Json{{"p", prime}, {"case", distance_case_name(c)}}, output);
    emitter.add_result(to_json(blue_bound(p, c)));
    return emitter.finish(kOk);
}

int run_search(const SearchSpace& space, int threads, const std::string& output) {
    Emitter emitter("search",
                    Json{{"p_min", space.p_min},
                         {"p_max", space.p_max},
                         {"d_min", space.d_min},
                         {"d_max", space.d_max},
                         {"l_min", space.l_min},
                         {"l_max", space.l_max},
                         {"alpha_sq", to_json(space.alpha_sq)}},
                    output);
    for (const SearchHit& hit : search_unit_params(space, resolve_threads(threads)))
        emitter.add_result(to_json(hit));
    return emitter.finish(kOk);
}

int run_witness(const std::string& alpha_sq_text, const std::string& interval_text,
                std::int64_t max_search, const std::string& output) {
    Json inputs;
    std::optional<WitnessPair> pair;
    std::string undecided_note;
    if (!interval_text.empty()) {
        const auto colon = interval_text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--alpha-sq-interval wants lo:hi");
        RationalInterval interval{parse_rational(interval_text.substr(0, colon)),
                                  parse_rational(interval_text.substr(colon + 1))};
        inputs = Json{{"alpha_sq_lo", to_json(interval.lo)},
                      {"alpha_sq_hi", to_json(interval.hi)},
                      {"max_search", max_search}};
        try {
            pair = make_witness(interval, max_search);
        } catch (const std::runtime_error& e) {
            undecided_note = e.what();
        }
    } else {
        const Rational alpha_sq = parse_rational(alpha_sq_text);
        inputs = Json{{"alpha_sq", to_json(alpha_sq)}};
        try {
            pair = make_witness(alpha_sq);
        } catch (const std::invalid_argument& e) {
            // "not covered" is a mathematical outcome, not a usage error.
            if (std::string_view(e.what()).find("not covered") == std::string_view::npos) throw;
            undecided_note = e.what();
        }
    }
    Emitter emitter("witness", inputs, output);
    if (pair) {
        emitter.add_result(to_json(*pair));
        return emitter.finish(kOk);
    }
    emitter.add_result(Json{{"status", undecided_note.find("not covered") != std::string::npos
                                           ? "not_covered"
                                           : "undecided"},
                            {"notes", undecided_note}});
    return emitter.finish(kRefuted);
}

int run_color(const ParamFlags& param_flags, const std::string& points_path,
              const std::string& output) {
    const ColoringParams params = resolve_params(param_flags);
    std::ifstream in(points_path);
    if (!in) throw std::runtime_error("cannot read points file: " + points_path);

    Emitter emitter("color", Json{{"params", to_json(params)}, {"points", points_path}},
                    output, /*stdout_fallback=*/false);
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        RationalVector point;
        if (line.front() == '[') {
            for (const Json& coord : Json::parse(line))
                point.push_back(parse_rational(coord.get<std::string>()));
        } else {
            std::stringstream ss(line);
            std::string item;
            while (std::getline(ss, item, ',')) point.push_back(parse_rational(item));
        }
        const Color color = color_point(point, params);
        std::cout << color_name(color) << "\n";
        emitter.add_result(Json{{"line", line_no}, {"color", color_name(color)}});
    }
    return emitter.finish(kOk);
}

int run_simulate(const ParamFlags& param_flags, const std::string& alpha_sq_text,
                 const std::string& dims_text, std::int64_t length, std::int64_t trials,
                 std::uint64_t seed, int threads, const std::string& output) {
    const ColoringParams params = resolve_params(param_flags);
    CampaignConfig config;
    config.alpha_sq = parse_rational(alpha_sq_text);
    for (std::int64_t d : parse_int_list(dims_text)) config.dims.push_back(static_cast<int>(d));
    config.length = length;
    config.trials = trials;
    config.master_seed = seed;
    config.threads = resolve_threads(threads);

    Emitter emitter("simulate",
                    Json{{"params", to_json(params)}, {"config", to_json(config)}}, output);
    const CampaignReport report = empirical_campaign(config, params);
    emitter.add_result(to_json(report));
    return emitter.finish(report.red_l3_total == 0 ? kOk : kRefuted);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical red/blue coloring toolkit: exhaustive lemma verification, "
                 "progression bounds, witness scalings, exact simulation"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the finite lemma checks");
    ParamFlags verify_params;
    add_param_flags(verify, verify_params);
    std::string verify_alpha = "1", verify_lemma = "all", verify_case = "auto",
                verify_output;
    verify->add_option("--alpha-sq", verify_alpha, "squared step of the red progression");
    verify->add_option("--lemma", verify_lemma,
                       "all|range|divisibility|red-l3|translates|translates-complement");
    verify->add_option("--case", verify_case, "unit|general|auto");
    verify->add_option("--output", verify_output, "certificate file path");

    // bound
    auto* bound = app.add_subcommand("bound", "blue progression length bound");
    std::int64_t bound_prime = 29;
    std::string bound_case = "unit", bound_output;
    bound->add_option("--prime", bound_prime, "odd prime modulus");
    bound->add_option("--case", bound_case, "unit|general");
    bound->add_option("--output", bound_output, "certificate file path");

    // search
    auto* search = app.add_subcommand("search", "sweep (p, d, l) colorings by bound m");
    SearchSpace space;
    space.p_min = 3;
    space.p_max = 97;
    space.d_min = 4;
    space.d_max = 10;
    space.l_min = 2;
    space.l_max = 10;
    std::string search_alpha = "1", search_output;
    int search_threads = 0;
    search->add_option("--p-min", space.p_min);
    search->add_option("--p-max", space.p_max);
    search->add_option("--d-min", space.d_min);
    search->add_option("--d-max", space.d_max);
    search->add_option("--l-min", space.l_min);
    search->add_option("--l-max", space.l_max);
    search->add_option("--p-cap", space.p_cap, "hard ceiling on p-max");
    search->add_option("--alpha-sq", search_alpha);
    search->add_option("--threads", search_threads, "0 = auto");
    search->add_option("--output", search_output, "certificate file path");

    // witness
    auto* witness = app.add_subcommand("witness", "scaled distance pair for a ratio alpha");
    std::string witness_alpha, witness_interval, witness_output;
    std::int64_t witness_max_search = 100000;
    witness->add_option("--alpha-sq", witness_alpha, "exact squared ratio, e.g. 1/2");
    witness->add_option("--alpha-sq-interval", witness_interval,
                        "certified enclosure lo:hi for an irrational square");
    witness->add_option("--max-search", witness_max_search);
    witness->add_option("--output", witness_output, "certificate file path");

    // color
    auto* color = app.add_subcommand("color", "color points from a JSONL file");
    ParamFlags color_params;
    add_param_flags(color, color_params);
    std::string color_points, color_output;
    color->add_option("--points", color_points, "JSON-lines file of rational vectors")
        ->required();
    color->add_option("--output", color_output, "certificate file path");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "seeded campaign over random progressions");
    ParamFlags simulate_params;
    add_param_flags(simulate, simulate_params);
    std::string simulate_alpha = "1", simulate_dims = "2,3,4", simulate_output;
    std::int64_t simulate_length = 1500, simulate_trials = 100;
    std::uint64_t simulate_seed = 1;
    int simulate_threads = 0;
    simulate->add_option("--alpha-sq", simulate_alpha);
    simulate->add_option("--dims", simulate_dims, "comma-separated dimensions");
    simulate->add_option("--length", simulate_length);
    simulate->add_option("--trials", simulate_trials);
    simulate->add_option("--seed", simulate_seed);
    simulate->add_option("--threads", simulate_threads, "0 = auto");
    simulate->add_option("--output", simulate_output, "certificate file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(verify_params, verify_alpha, verify_lemma, verify_case,
                              verify_output);
        if (bound->parsed()) return run_bound(bound_prime, bound_case, bound_output);
        if (search->parsed()) return run_search(space, search_threads, search_output);
        if (witness->parsed())
            return run_witness(witness_alpha, witness_interval, witness_max_search,
                               witness_output);
        if (color->parsed()) return run_color(color_params, color_points, color_output);
        if (simulate->parsed())
            return run_simulate(simulate_params, simulate_alpha, simulate_dims, simulate_length,
                                simulate_trials, simulate_seed, simulate_threads,
                                simulate_output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.what() == std::string_view("undecided") ||
                       std::string_view(e.what()).find("undecided") != std::string_view::npos
                   ? kRefuted
                   : kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
