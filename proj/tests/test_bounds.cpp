#include "apcolor/bounds.hpp"

#include <doctest.h>

#include <random>

using namespace apcolor;

TEST_CASE("dirichlet_approx fixtures") {
    SUBCASE("exact small fraction") {
        const DirichletApprox a = dirichlet_approx(Rational(1, 3), 28);
        CHECK(a.a == 1);
        CHECK(a.d == 3);
        CHECK(a.error == 0);
        CHECK(a.error_bound == Rational(1, 29));
    }
    SUBCASE("zero") {
        const DirichletApprox a = dirichlet_approx(Rational(0), 28);
        CHECK(a.a == 0);
        CHECK(a.d == 1);
        CHECK(a.error == 0);
    }
    SUBCASE("near sqrt(2)") {
        // beta = 665857/470832, a convergent of sqrt(2); the first
        // admissible denominator for N = 28 is the convergent 12, a = 17.
        const Rational beta(665857, 470832);
        const DirichletApprox a = dirichlet_approx(beta, 28);
        CHECK(a.d == 12);
        CHECK(a.a == 17);
        Rational err = beta * a.d - Rational(a.a);
        if (err < 0) err = -err;
        CHECK(err <= Rational(1, 29));
        CHECK(err == a.error);
    }
    CHECK_THROWS_AS(dirichlet_approx(Rational(1), 0), std::invalid_argument);
}

TEST_CASE("dirichlet_approx always meets its bound") {
    std::mt19937_64 rng(5);
    for (std::int64_t n : {28LL, 47LL}) {
        for (int i = 0; i < 2000; ++i) {
            const Rational beta(static_cast<std::int64_t>(rng() % 2000001) - 1000000,
                                1 + static_cast<std::int64_t>(rng() % 1000000));
            const DirichletApprox a = dirichlet_approx(beta, n);
            CHECK(a.d >= 1);
            CHECK(a.d <= n);
            Rational err = beta * a.d - Rational(a.a);
            if (err < 0) err = -err;
            CHECK(err <= Rational(1, n + 1));
            // Minimality of d: no smaller denominator qualifies.
            for (std::int64_t d = 1; d < a.d; ++d) {
                const Rational target = beta * d;
                Rational best = target - Rational(rational_floor(target));
                if (1 - best < best) best = 1 - best;
                CHECK(best > Rational(1, n + 1));
            }
        }
    }
}

TEST_CASE("required_index_count") {
    CHECK(required_index_count(PrimeModulus(29), DistanceCase::UnitDistance) == 43);
    CHECK(required_index_count(PrimeModulus(47), DistanceCase::GeneralDistance) == 185);
    CHECK(required_index_count(PrimeModulus(47), DistanceCase::UnitDistance) == 70);
}

TEST_CASE("blue_bound") {
    const BoundReport unit29 = blue_bound(PrimeModulus(29), DistanceCase::UnitDistance);
    CHECK(unit29.m == 1177);
    CHECK(unit29.max_denominator == 28);
    CHECK(unit29.required_index_count == 43);
    CHECK(unit29.notes.empty());
    CHECK(unit29.m == unit29.max_denominator * (unit29.required_index_count - 1) + 1);

    const BoundReport general47 = blue_bound(PrimeModulus(47), DistanceCase::GeneralDistance);
    CHECK(general47.m == 8649);
    CHECK(general47.max_denominator == 47);
    CHECK(general47.notes.empty());

    const BoundReport unit47 = blue_bound(PrimeModulus(47), DistanceCase::UnitDistance);
    CHECK(unit47.m == 46 * 69 + 1);
    CHECK(unit47.m == 3175);
    CHECK(unit47.notes == "extrapolated");
}

TEST_CASE("progression_norms closed form and recurrence") {
    SUBCASE("unit steps through the origin line") {
        const ProgressionNorms norms = progression_norms(0, 1, 1, 3);
        CHECK(norms.values == std::vector<Rational>{0, 1, 4});
    }
    SUBCASE("symmetric pass through the origin") {
        const ProgressionNorms norms = progression_norms(4, 1, 1, 5);
        CHECK(norms.values == std::vector<Rational>{4, 1, 0, 1, 4});
    }
    SUBCASE("doubled squared step") {
        const ProgressionNorms norms = progression_norms(0, 2, 2, 3);
        CHECK(norms.values == std::vector<Rational>{0, 2, 8});
    }
    CHECK_THROWS_AS(progression_norms(0, 1, 1, 1), std::invalid_argument);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Rational x0(static_cast<std::int64_t>(rng() % 1001) - 500, 1 + rng() % 100);
        const Rational x1(static_cast<std::int64_t>(rng() % 1001) - 500, 1 + rng() % 100);
        const Rational alpha_sq(1 + rng() % 100, 1 + rng() % 100);
        const ProgressionNorms norms = progression_norms(x0, x1, alpha_sq, 40);
        CHECK(norms.values[0] == x0);
        CHECK(norms.values[1] == x1);
        for (size_t j = 0; j + 2 < norms.values.size(); ++j)
            CHECK(norms.values[j + 2] - 2 * norms.values[j + 1] + norms.values[j] ==
                  2 * alpha_sq);
    }
}

TEST_CASE("subsampling every d-th norm matches the shifted quadratic") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        const Rational x0(static_cast<std::int64_t>(rng() % 2001) - 1000, 1 + rng() % 100);
        const Rational x1(static_cast<std::int64_t>(rng() % 2001) - 1000, 1 + rng() % 100);
        const Rational alpha_sq(1 + rng() % 50, 1 + rng() % 50);
        const std::int64_t length = 200;
        const ProgressionNorms norms = progression_norms(x0, x1, alpha_sq, length);

        const DirichletApprox approx = dirichlet_approx(norms.beta, 28);
        const Rational eps = norms.beta - Rational(approx.a) / approx.d;
        for (std::int64_t j = 0; approx.d * j < length; ++j) {
            const Rational expected = alpha_sq * (approx.d * j) * (approx.d * j) +
                                      Rational(approx.a) * j + x0 + eps * approx.d * j;
            CHECK(norms.values[static_cast<size_t>(approx.d * j)] == expected);
        }
    }
}
