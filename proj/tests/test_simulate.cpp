#include "apcolor/simulate.hpp"

#include "apcolor/bounds.hpp"

#include <doctest.h>

#include <random>

using namespace apcolor;

namespace {

Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("unit_vector_from stereographic fixtures") {
    CHECK(unit_vector_from({rat(0)}) == RationalVector{rat(0), rat(-1)});
    CHECK(unit_vector_from({rat(1)}) == RationalVector{rat(1), rat(0)});
    CHECK(unit_vector_from({rat(1), rat(1)}) ==
          RationalVector{rat(2, 3), rat(2, 3), rat(1, 3)});
}

TEST_CASE("rational_unit_vector has exact unit norm in every dimension") {
    std::mt19937_64 rng(41);
    for (int dim = 2; dim <= 8; ++dim)
        for (int i = 0; i < 50; ++i) {
            const RationalVector u = rational_unit_vector(rng, dim);
            CHECK(u.size() == static_cast<size_t>(dim));
            CHECK(squared_norm(u) == 1);
        }
    CHECK_THROWS_AS(rational_unit_vector(rng, 1), std::invalid_argument);
}

TEST_CASE("sum_of_squares") {
    CHECK(sum_of_squares(3, 3).has_value());
    CHECK_FALSE(sum_of_squares(3, 2).has_value());
    CHECK_FALSE(sum_of_squares(7, 3).has_value());  // 7 = 4^0 (8*0+7)
    CHECK(sum_of_squares(7, 4).has_value());
    for (const Integer& target : {Integer(10), Integer(58), Integer(1234)}) {
        auto dec = sum_of_squares(target, 4);
        REQUIRE(dec.has_value());
        Integer sum = 0;
        for (const Integer& c : *dec) sum += c * c;
        CHECK(sum == target);
        CHECK(dec->size() == 4);
    }
}

TEST_CASE("random_step_vector is exact for rational and irrational steps") {
    std::mt19937_64 rng(43);
    for (const Rational& alpha_sq : {rat(1), rat(9, 4), rat(3), rat(5, 2)}) {
        for (int dim = 3; dim <= 6; ++dim) {
            const RationalVector step = random_step_vector(rng, dim, alpha_sq);
            CHECK(step.size() == static_cast<size_t>(dim));
            CHECK(squared_norm(step) == alpha_sq);
        }
    }
    // 3 is not a sum of two rational squares.
    CHECK_THROWS_AS(random_step_vector(rng, 2, rat(3)), std::invalid_argument);
}

TEST_CASE("scan_progression fixture: unit steps from the origin at p=29") {
    ProgressionSpec spec = ProgressionSpec::from_unit_direction(
        {rat(0), rat(0)}, {rat(1), rat(0)}, rat(1), 5);
    const ScanReport report = scan_progression(spec, ColoringParams::canonical29());
    // Norms 0,1,4,9,16: Red, Blue, Red, Blue, Blue.
    CHECK_FALSE(report.red_l3_found);
    CHECK(report.max_blue_run == 2);
    CHECK(report.runs == std::vector<ColorRun>{{Color::Red, 1},
                                               {Color::Blue, 1},
                                               {Color::Red, 1},
                                               {Color::Blue, 2}});
}

TEST_CASE("scan_progression fixture: symmetric pass through the origin") {
    ProgressionSpec spec = ProgressionSpec::from_unit_direction(
        {rat(-2), rat(0)}, {rat(1), rat(0)}, rat(1), 5);
    const ScanReport report = scan_progression(spec, ColoringParams::canonical29());
    // Norms 4,1,0,1,4: R,B,R,B,R.
    CHECK_FALSE(report.red_l3_found);
    CHECK(report.max_blue_run == 1);
    CHECK(report.runs.size() == 5);
}

TEST_CASE("scan_progression flags red triples with their start index") {
    // Red set {0,1,2} at p=5 colors norms 0,1,4,9,16 as R,R,B,B,R and
    // squared norms 0,1,2 would give a triple; use a line where three
    // consecutive integer norms are red.
    const ColoringParams params = ColoringParams::from_set(PrimeModulus(5), {0, 1, 4});
    ProgressionSpec spec = ProgressionSpec::from_unit_direction(
        {rat(0), rat(0)}, {rat(1), rat(0)}, rat(1), 4);
    // Norms 0,1,4,9: residues 0,1,4,4: R,R,R,R.
    const ScanReport report = scan_progression(spec, params);
    CHECK(report.red_l3_found);
    CHECK(report.red_l3_index == 0);
}

TEST_CASE("scan_progression validates the progression invariants") {
    ProgressionSpec spec;
    spec.start = {rat(0), rat(0)};
    spec.step = {rat(1), rat(1)};
    spec.alpha_sq = rat(1);  // |step|^2 is actually 2
    spec.length = 5;
    CHECK_THROWS_AS(scan_progression(spec, ColoringParams::canonical29()),
                    std::invalid_argument);
    spec.alpha_sq = rat(2);
    CHECK_NOTHROW(scan_progression(spec, ColoringParams::canonical29()));
    spec.length = 1;
    CHECK_THROWS_AS(scan_progression(spec, ColoringParams::canonical29()),
                    std::invalid_argument);
}

TEST_CASE("length-2 progressions never contain a red triple") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i) {
        ProgressionSpec spec;
        spec.alpha_sq = rat(1);
        spec.length = 2;
        spec.step = random_step_vector(rng, 3, rat(1));
        spec.start = {rat(static_cast<std::int64_t>(rng() % 100)), rat(0), rat(0)};
        CHECK_FALSE(scan_progression(spec, ColoringParams::canonical29()).red_l3_found);
    }
}

TEST_CASE("scan colors agree with the public point oracle") {
    // The scan uses a common-denominator integer path; color_point is the
    // independent per-point route.
    std::mt19937_64 rng(61);
    const ColoringParams params = ColoringParams::canonical29();
    for (int round = 0; round < 20; ++round) {
        ProgressionSpec spec;
        spec.alpha_sq = Rational(1);
        spec.length = 40;
        const int dim = 2 + static_cast<int>(rng() % 4);
        spec.step = random_step_vector(rng, dim, spec.alpha_sq);
        spec.start.resize(static_cast<size_t>(dim));
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 50);
        for (auto& c : spec.start)
            c = Rational(static_cast<std::int64_t>(rng() % 2001) - 1000, den);

        const ScanReport report = scan_progression(spec, params);
        std::vector<Color> expanded;
        for (const ColorRun& run : report.runs)
            expanded.insert(expanded.end(), static_cast<size_t>(run.count), run.color);
        REQUIRE(expanded.size() == static_cast<size_t>(spec.length));
        RationalVector point = spec.start;
        for (std::int64_t i = 0; i < spec.length; ++i) {
            CHECK(expanded[static_cast<size_t>(i)] == color_point(point, params));
            for (size_t j = 0; j < point.size(); ++j) point[j] += spec.step[j];
        }
    }
}

TEST_CASE("observed norms match the closed-form norm sequence") {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 20; ++round) {
        const int dim = 3 + static_cast<int>(rng() % 3);
        const Rational alpha_sq(1 + rng() % 20, 1 + rng() % 10);
        RationalVector step;
        try {
            step = random_step_vector(rng, dim, alpha_sq);
        } catch (const std::invalid_argument&) {
            continue;  // not a sum of dim squares
        }
        RationalVector start(static_cast<size_t>(dim));
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 50);
        for (auto& c : start)
            c = Rational(static_cast<std::int64_t>(rng() % 2001) - 1000, den);

        const std::int64_t length = 30;
        RationalVector x = start, next = start;
        for (size_t j = 0; j < next.size(); ++j) next[j] += step[j];
        const ProgressionNorms closed_form =
            progression_norms(squared_norm(x), squared_norm(next), alpha_sq, length);
        for (std::int64_t i = 0; i < length; ++i) {
            CHECK(squared_norm(x) == closed_form.values[static_cast<size_t>(i)]);
            for (size_t j = 0; j < x.size(); ++j) x[j] += step[j];
        }
    }
}

TEST_CASE("empirical_campaign basics") {
    CampaignConfig config;
    config.dims = {2, 3};
    config.alpha_sq = rat(1);
    config.length = 100;
    config.trials = 0;
    SUBCASE("zero trials give an empty report") {
        const CampaignReport report = empirical_campaign(config, ColoringParams::canonical29());
        CHECK(report.trials_run == 0);
        CHECK(report.red_l3_total == 0);
        CHECK(report.max_blue_run == 0);
        CHECK(report.blue_run_histogram.empty());
    }
    SUBCASE("inadmissible alpha_sq is rejected by name") {
        config.trials = 1;
        config.alpha_sq = rat(2);  // window {3,4,5} contains 4 = 0 mod 4
        CHECK_THROWS_WITH_AS(empirical_campaign(config, ColoringParams::canonical29()),
                             "alpha_sq inadmissible for params: check_divisibility failed on "
                             "the k-window",
                             std::invalid_argument);
    }
    SUBCASE("length cap is honored") {
        config.trials = 1;
        config.length = config.length_cap + 1;
        CHECK_THROWS_AS(empirical_campaign(config, ColoringParams::canonical29()),
                        std::invalid_argument);
    }
}

TEST_CASE("empirical_campaign is reproducible and schedule-independent") {
    CampaignConfig config;
    config.dims = {2, 3, 4};
    config.alpha_sq = rat(1);
    config.length = 300;
    config.trials = 60;
    config.master_seed = 12345;
    config.threads = 1;
    const ColoringParams params = ColoringParams::canonical29();
    const CampaignReport serial = empirical_campaign(config, params);
    const CampaignReport serial_again = empirical_campaign(config, params);
    CHECK(serial.red_l3_total == serial_again.red_l3_total);
    CHECK(serial.max_blue_run == serial_again.max_blue_run);
    CHECK(serial.blue_run_histogram == serial_again.blue_run_histogram);

    CampaignConfig threaded = config;
    threaded.threads = 4;
    const CampaignReport parallel = empirical_campaign(threaded, params);
    CHECK(serial.red_l3_total == parallel.red_l3_total);
    CHECK(serial.max_blue_run == parallel.max_blue_run);
    CHECK(serial.blue_run_histogram == parallel.blue_run_histogram);

    CampaignConfig other_seed = config;
    other_seed.master_seed = 54321;
    const CampaignReport other = empirical_campaign(other_seed, params);
    CHECK(other.blue_run_histogram != serial.blue_run_histogram);

    // Guarantee-level check on this small campaign.
    CHECK(serial.red_l3_total == 0);
    CHECK(serial.max_blue_run < 1177);
}

TEST_CASE("empirical_campaign with a non-square step at p=47") {
    CampaignConfig config;
    config.dims = {3, 4, 5};
    config.alpha_sq = rat(3, 2);  // window {2,3,4}, clear of multiples of 5
    config.length = 400;
    config.trials = 40;
    config.master_seed = 7;
    const CampaignReport report = empirical_campaign(config, ColoringParams::canonical47());
    CHECK(report.red_l3_total == 0);
    CHECK(report.trials_run == 40);
}

TEST_CASE("alpha_sq = 3 is inadmissible at p=47: its window contains a multiple of 5") {
    // The window for 2 alpha_sq = 6 is {5,6,7}; k = 5 admits red triples
    // such as (15, 5, 0), so the campaign gate must reject it.
    CampaignConfig config;
    config.dims = {3};
    config.alpha_sq = rat(3);
    config.length = 10;
    config.trials = 1;
    CHECK_THROWS_AS(empirical_campaign(config, ColoringParams::canonical47()),
                    std::invalid_argument);
}
