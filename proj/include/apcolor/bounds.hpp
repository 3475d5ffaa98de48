// Rational Dirichlet approximation and the arithmetic that turns a
// verified (p, red set) pair into the guaranteed blue progression length
// bound m: pick every d-th index of an m-progression, and the index count
// 1 + floor((m-1)/d) must still reach the required coverage count.
#pragma once

#include "apcolor/ffield.hpp"
#include "apcolor/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace apcolor {

enum class DistanceCase { UnitDistance, GeneralDistance };

struct DirichletApprox {
    Integer a;
    std::int64_t d = 1;
    std::int64_t n = 1;      // the denominator bound N
    Rational error;          // |d*beta - a|, exact
    Rational error_bound;    // 1/(N+1)
    bool operator==(const DirichletApprox&) const = default;
};

/// Smallest d in [1, N] with |d*beta - a| <= 1/(N+1) for a the nearest
/// integer to d*beta (existence is guaranteed for every beta).
DirichletApprox dirichlet_approx(const Rational& beta, std::int64_t n);

/// Indices needed for translate coverage after subsampling:
/// 3(p-1)/2 + 1 for the unit-distance case, 4(p-1) + 1 for the general
/// case. Equals 43 at p=29 (unit) and 185 at p=47 (general).
std::int64_t required_index_count(PrimeModulus p, DistanceCase c);

struct BoundReport {
    std::int64_t p = 0;
    DistanceCase distance_case = DistanceCase::UnitDistance;
    std::int64_t required_index_count = 0;
    std::int64_t max_denominator = 0;
    std::int64_t m = 0;  // blue progression length excluded
    std::string notes;
    bool operator==(const BoundReport&) const = default;
};

/// m = max_denominator * (required_index_count - 1) + 1, with
/// max_denominator = p-1 (unit) or p (general). Instances other than
/// (29, unit) and (47, general) carry an "extrapolated" note: the index
/// count formula is validated at those two instances and extended by the
/// same case arithmetic elsewhere.
BoundReport blue_bound(PrimeModulus p, DistanceCase c);

struct ProgressionNorms {
    Rational x0;
    Rational beta;       // X1 - X0 - alpha_sq
    Rational alpha_sq;
    std::vector<Rational> values;  // X_i = alpha_sq i^2 + beta i + X0
    bool operator==(const ProgressionNorms&) const = default;
};

/// Closed-form squared norms of a progression with squared step alpha_sq,
/// pinned by X0 and X1; satisfies X_{i+2} - 2 X_{i+1} + X_i = 2 alpha_sq
/// exactly. length must be >= 2.
ProgressionNorms progression_norms(const Rational& x0, const Rational& x1,
                                   const Rational& alpha_sq, std::int64_t length);

const char* distance_case_name(DistanceCase c);

}  // namespace apcolor
