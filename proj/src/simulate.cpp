#include "apcolor/simulate.hpp"

#include "apcolor/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace apcolor {

namespace {

/// Deterministic bounded draw; avoids uniform_int_distribution, whose
/// output is not pinned down by the standard across implementations.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(std::mt19937_64& rng, std::int64_t num_bound, std::int64_t den) {
    return Rational(draw(rng, -num_bound, num_bound), den);
}

/// Reflection through the hyperplane orthogonal to w: norm-preserving and
/// exact in rationals.
RationalVector reflect(const RationalVector& x, const std::vector<std::int64_t>& w) {
    Integer w_sq = 0;
    Rational dot = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        dot += x[i] * w[i];
        w_sq += Integer(w[i]) * w[i];
    }
    RationalVector out(x.size());
    const Rational scale = 2 * dot / Rational(w_sq);
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - scale * w[i];
    return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream) {
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ProgressionSpec ProgressionSpec::from_unit_direction(RationalVector start,
                                                     const RationalVector& dir,
                                                     const Rational& alpha,
                                                     std::int64_t length) {
    if (alpha <= 0) throw std::invalid_argument("step alpha must be positive");
    if (squared_norm(dir) != 1) throw std::invalid_argument("direction must have unit norm");
    ProgressionSpec spec;
    spec.start = std::move(start);
    spec.step.reserve(dir.size());
    for (const Rational& c : dir) spec.step.push_back(alpha * c);
    spec.alpha_sq = alpha * alpha;
    spec.length = length;
    return spec;
}

RationalVector unit_vector_from(const RationalVector& v) {
    const Rational s = squared_norm(v);
    RationalVector u(v.size() + 1);
    for (size_t i = 0; i < v.size(); ++i) u[i] = 2 * v[i] / (s + 1);
    u[v.size()] = (s - 1) / (s + 1);
    return u;
}

RationalVector rational_unit_vector(std::mt19937_64& rng, int dimension, std::int64_t bound) {
    if (dimension < 2) throw std::invalid_argument("unit vector needs dimension >= 2");
    const std::int64_t den = draw(rng, 1, bound);
    RationalVector v(static_cast<size_t>(dimension - 1));
    for (auto& c : v) c = random_rational(rng, bound, den);
    return unit_vector_from(v);
}

std::optional<std::vector<Integer>> sum_of_squares(const Integer& target, int n) {
    if (target < 0 || n < 1) return std::nullopt;
    if (target > Integer(1) << 50)
        throw std::invalid_argument("sum_of_squares: target too large");
    std::vector<Integer> acc;
    auto rec = [&](auto&& self, const Integer& rest, int slots) -> bool {
        if (slots == 1) {
            Integer r = sqrt(rest);
            if (r * r == rest) {
                acc.push_back(r);
                return true;
            }
            return false;
        }
        for (Integer c = sqrt(rest); c >= 0; --c) {
            // Feasibility floor: the remaining slots must be able to carry rest.
            if (c * c * slots < rest) break;
            acc.push_back(c);
            if (self(self, rest - c * c, slots - 1)) return true;
            acc.pop_back();
        }
        return false;
    };
    if (!rec(rec, target, n)) return std::nullopt;
    return acc;
}

RationalVector random_step_vector(std::mt19937_64& rng, int dimension, const Rational& alpha_sq,
                                  std::int64_t bound) {
    if (alpha_sq <= 0) throw std::invalid_argument("alpha_sq must be positive");
    if (dimension < 2) throw std::invalid_argument("step vector needs dimension >= 2");

    RationalVector step;
    Rational alpha;
    if (rational_sqrt(alpha_sq, &alpha)) {
        RationalVector u = rational_unit_vector(rng, dimension, bound);
        step.reserve(u.size());
        for (const Rational& c : u) step.push_back(alpha * c);
    } else {
        // Base solution with |w|^2 = alpha_sq: integer c with sum c_i^2 =
        // num*den placed over denominator den.
        const Integer num = numerator(alpha_sq), den = denominator(alpha_sq);
        auto decomposition = sum_of_squares(num * den, dimension);
        if (!decomposition)
            throw std::invalid_argument(
                "alpha_sq is not a sum of " + std::to_string(dimension) + " rational squares");
        step.reserve(decomposition->size());
        for (const Integer& c : *decomposition) step.emplace_back(Rational(c, den));
        // Randomize: signs, coordinate order, then two rational reflections.
        for (auto& c : step)
            if (rng() & 1) c = -c;
        for (size_t i = step.size(); i > 1; --i)
            std::swap(step[i - 1], step[static_cast<size_t>(rng() % i)]);
        for (int round = 0; round < 2; ++round) {
            std::vector<std::int64_t> w(step.size());
            bool nonzero = false;
            for (auto& c : w) {
                c = draw(rng, -8, 8);
                nonzero = nonzero || c != 0;
            }
            if (!nonzero) w[0] = 1;
            step = reflect(step, w);
        }
    }
    if (squared_norm(step) != alpha_sq)
        throw std::logic_error("step vector construction lost exactness");
    return step;
}

ScanReport scan_progression(const ProgressionSpec& spec, const ColoringParams& params) {
    if (spec.length < 2) throw std::invalid_argument("progression length must be >= 2");
    if (spec.start.size() != spec.step.size() || spec.step.empty())
        throw std::invalid_argument("progression start/step dimension mismatch");
    if (squared_norm(spec.step) != spec.alpha_sq)
        throw std::invalid_argument("progression step norm does not match alpha_sq");

    // Common-denominator view: x_i = (s + i*d) / D with integer vectors
    // s, d, so |x_i|^2 = A_i / D^2 with A_i integral.
    Integer common_den = 1;
    for (const Rational& c : spec.start) common_den = lcm(common_den, denominator(c));
    for (const Rational& c : spec.step) common_den = lcm(common_den, denominator(c));
    const size_t dim = spec.start.size();
    std::vector<Integer> s(dim), d(dim);
    for (size_t j = 0; j < dim; ++j) {
        s[j] = numerator(spec.start[j]) * (common_den / denominator(spec.start[j]));
        d[j] = numerator(spec.step[j]) * (common_den / denominator(spec.step[j]));
    }
    const Integer den_sq = common_den * common_den;
    const std::int64_t p = params.p.value();

    ScanReport report;
    Integer prev2 = 0, prev1 = 0;
    Integer two_alpha_sq_scaled = 0;
    for (size_t j = 0; j < dim; ++j) two_alpha_sq_scaled += d[j] * d[j];
    two_alpha_sq_scaled *= 2;

    std::int64_t red_run = 0, blue_run = 0;
    Integer coord, norm;
    for (std::int64_t i = 0; i < spec.length; ++i) {
        norm = 0;
        for (size_t j = 0; j < dim; ++j) {
            coord = s[j] + i * d[j];
            norm += coord * coord;
        }
        if (i >= 2 && norm - 2 * prev1 + prev2 != two_alpha_sq_scaled)
            throw std::logic_error("norm recurrence violated: non-exact arithmetic");
        prev2 = prev1;
        prev1 = norm;

        const std::int64_t residue = mod_reduce(norm / den_sq, p);
        const Color color = params.red_set.contains(residue) ? Color::Red : Color::Blue;
        if (report.runs.empty() || report.runs.back().color != color)
            report.runs.push_back(ColorRun{color, 1});
        else
            ++report.runs.back().count;

        if (color == Color::Red) {
            blue_run = 0;
            if (++red_run >= 3 && !report.red_l3_found) {
                report.red_l3_found = true;
                report.red_l3_index = i - 2;
            }
        } else {
            red_run = 0;
            report.max_blue_run = std::max(report.max_blue_run, ++blue_run);
        }
    }
    return report;
}

CampaignReport empirical_campaign(const CampaignConfig& config, const ColoringParams& params) {
    if (config.length > config.length_cap)
        throw std::invalid_argument("campaign length exceeds configured cap");
    if (config.trials > 0 && config.dims.empty())
        throw std::invalid_argument("campaign needs at least one dimension");
    if (config.trials > 0 && config.length < 2)
        throw std::invalid_argument("campaign length must be >= 2");

    if (config.trials > 0) {
        const KWindow window = k_window(config.alpha_sq, params.p);
        if (!check_divisibility(params, window))
            throw std::invalid_argument(
                "alpha_sq inadmissible for params: check_divisibility failed on the k-window");
        // Fail fast when some requested dimension cannot carry the step.
        for (int dim : config.dims) {
            std::mt19937_64 probe(derive_seed(config.master_seed, 0));
            random_step_vector(probe, dim, config.alpha_sq, config.coord_bound);
        }
    }

    CampaignReport report;
    report.config = config;
    report.trials_run = config.trials;

    auto run_trial = [&](std::int64_t trial) -> ScanReport {
        std::mt19937_64 rng(derive_seed(config.master_seed, static_cast<std::uint64_t>(trial)));
        const int dim = config.dims[static_cast<size_t>(trial) % config.dims.size()];
        ProgressionSpec spec;
        spec.alpha_sq = config.alpha_sq;
        spec.length = config.length;
        spec.step = random_step_vector(rng, dim, config.alpha_sq, config.coord_bound);
        const std::int64_t den = draw(rng, 1, config.coord_bound);
        spec.start.resize(static_cast<size_t>(dim));
        for (auto& c : spec.start) c = random_rational(rng, config.start_num_bound, den);
        return scan_progression(spec, params);
    };

    const int workers = std::max(1, std::min<int>(config.threads > 0 ? config.threads : 1,
                                                  static_cast<int>(std::max<std::int64_t>(
                                                      config.trials, 1))));
    std::vector<std::int64_t> per_trial_max(static_cast<size_t>(config.trials), 0);
    std::vector<char> per_trial_red(static_cast<size_t>(config.trials), 0);

    if (workers <= 1) {
        for (std::int64_t t = 0; t < config.trials; ++t) {
            ScanReport scan = run_trial(t);
            per_trial_max[static_cast<size_t>(t)] = scan.max_blue_run;
            per_trial_red[static_cast<size_t>(t)] = scan.red_l3_found ? 1 : 0;
        }
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (std::int64_t t = next.fetch_add(1); t < config.trials;
                     t = next.fetch_add(1)) {
                    ScanReport scan = run_trial(t);
                    per_trial_max[static_cast<size_t>(t)] = scan.max_blue_run;
                    per_trial_red[static_cast<size_t>(t)] = scan.red_l3_found ? 1 : 0;
                }
            });
        for (auto& t : pool) t.join();
    }

    for (std::int64_t t = 0; t < config.trials; ++t) {
        report.red_l3_total += per_trial_red[static_cast<size_t>(t)];
        const std::int64_t run = per_trial_max[static_cast<size_t>(t)];
        report.max_blue_run = std::max(report.max_blue_run, run);
        ++report.blue_run_histogram[run];
    }
    return report;
}

}  // namespace apcolor
