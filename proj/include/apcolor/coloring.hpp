// The spherical red/blue coloring: a point's color depends only on
// floor(|x|^2) mod p, tested against a red residue set. Everything is
// exact rational; a floating-point floor would mis-color points whose
// squared norm sits at an integer boundary.
#pragma once

#include "apcolor/ffield.hpp"
#include "apcolor/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace apcolor {

enum class Color { Red, Blue };

using RationalVector = std::vector<Rational>;

/// Generator of an arithmetic-progression red set {0, d, 2d, ..., (l-1)d}.
struct RedSetGenerator {
    std::int64_t d = 0;
    std::int64_t l = 0;
    bool operator==(const RedSetGenerator&) const = default;
};

struct ColoringParams {
    PrimeModulus p;
    ResidueSet red_set;
    // Present when red_set is the reduction of {0, d, ..., (l-1)d} mod p.
    std::optional<RedSetGenerator> generator;

    static ColoringParams from_generator(PrimeModulus p, std::int64_t d, std::int64_t l);
    static ColoringParams from_set(PrimeModulus p, std::vector<std::int64_t> members);
    static ColoringParams canonical29();  // p=29, red {0,4,8,12}
    static ColoringParams canonical47();  // p=47, red {0,5,10,15,20}

    bool operator==(const ColoringParams&) const = default;
};

/// Red iff floor(q) mod p lies in the red set. q must be >= 0.
Color color_of_norm(const Rational& q, const ColoringParams& params);

/// color_of_norm applied to |x|^2.
Color color_point(const RationalVector& x, const ColoringParams& params);

Rational squared_norm(const RationalVector& x);

/// For x, y, z forming an exact 3-term progression (x - 2y + z = 0 and
/// |x-y|^2 = |y-z|^2), returns |x|^2 - 2|y|^2 + |z|^2, which equals
/// 2|x-y|^2. Throws "not a 3-term progression" otherwise.
Rational norm_identity_check(const RationalVector& x, const RationalVector& y,
                             const RationalVector& z);

const char* color_name(Color c);

}  // namespace apcolor
