// End-to-end empirical validation: build genuine arithmetic progressions
// of exact rational points, color every point, and confirm the guarantees
// (no red 3-run, blue runs strictly below the bound). Trials are seeded
// per index so a campaign reproduces bit-for-bit regardless of thread
// count.
#pragma once

#include "apcolor/coloring.hpp"
#include "apcolor/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace apcolor {

/// A progression start + i * step, i in [0, length). The step vector is
/// stored explicitly (|step|^2 = alpha_sq exactly): for non-square
/// alpha_sq there is no rational unit direction to scale.
struct ProgressionSpec {
    RationalVector start;
    RationalVector step;
    Rational alpha_sq;
    std::int64_t length = 2;

    /// Classic form: unit direction scaled by a rational step alpha.
    static ProgressionSpec from_unit_direction(RationalVector start, const RationalVector& dir,
                                               const Rational& alpha, std::int64_t length);
};

/// Exact rational unit vector via inverse stereographic projection of v:
/// u = (2v, |v|^2 - 1) / (|v|^2 + 1). v has dimension n-1, u dimension n.
RationalVector unit_vector_from(const RationalVector& v);

/// unit_vector_from applied to a random rational v with a shared
/// denominator; entries bounded by `bound`.
RationalVector rational_unit_vector(std::mt19937_64& rng, int dimension,
                                    std::int64_t bound = 1000);

/// Random rational vector with |w|^2 = alpha_sq exactly. Uses alpha *
/// unit vector when alpha_sq is a rational square, otherwise an integer
/// sum-of-squares base solution randomized by signs, coordinate
/// permutation and rational reflections. Throws when alpha_sq is not a
/// sum of `dimension` rational squares.
RationalVector random_step_vector(std::mt19937_64& rng, int dimension, const Rational& alpha_sq,
                                  std::int64_t bound = 1000);

/// Sum of n integer squares decomposition, if one exists.
std::optional<std::vector<Integer>> sum_of_squares(const Integer& target, int n);

struct ColorRun {
    Color color = Color::Blue;
    std::int64_t count = 0;
    bool operator==(const ColorRun&) const = default;
};

struct ScanReport {
    bool red_l3_found = false;
    std::optional<std::int64_t> red_l3_index;  // start of the first red triple
    std::int64_t max_blue_run = 0;
    std::vector<ColorRun> runs;  // run-length-encoded color sequence
    bool operator==(const ScanReport&) const = default;
};

/// Colors every point of the progression. Checks the progression
/// invariants
/// exactly: |step|^2 = alpha_sq, and the norm recurrence
/// X_{i+2} - 2X_{i+1} + X_i = 2 alpha_sq on the observed norms.
ScanReport scan_progression(const ProgressionSpec& spec, const ColoringParams& params);

struct CampaignConfig {
    std::vector<int> dims;
    Rational alpha_sq = 1;
    std::int64_t length = 2;
    std::int64_t trials = 0;
    std::uint64_t master_seed = 0;
    std::int64_t coord_bound = 1000;      // shared-denominator bound for random rationals
    std::int64_t start_num_bound = 1000000;
    std::int64_t length_cap = 100000;
    int threads = 1;
    bool operator==(const CampaignConfig&) const = default;
};

struct CampaignReport {
    CampaignConfig config;
    std::int64_t trials_run = 0;
    std::int64_t red_l3_total = 0;
    std::int64_t max_blue_run = 0;
    std::map<std::int64_t, std::int64_t> blue_run_histogram;  // max_blue_run -> #trials
    bool operator==(const CampaignReport&) const = default;
};

/// Runs `trials` independent seeded scans. Errors if alpha_sq fails the
/// divisibility admissibility check for params, or is not realizable as
/// a step vector in one of the requested dimensions.
CampaignReport empirical_campaign(const CampaignConfig& config, const ColoringParams& params);

/// Stream seed for trial t of a campaign (splitmix64 of master ^ index).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream);

}  // namespace apcolor
