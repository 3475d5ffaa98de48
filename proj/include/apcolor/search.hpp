// Parameter-space search over colorings (p, d, l) minimizing the blue
// bound m, and the witness constructors that map an admissible squared
// ratio alpha_sq to a scaled distance pair (alpha_red^2, alpha_blue^2)
// for the fixed p=47 coloring:
//
//   - alpha_red^2 must land in a band [47N+1, 47N+3/2] so the red-side
//     window reduces into {1,2,3,4} mod 47;
//   - alpha_blue^2 must decompose as b + eps2 with 47 not dividing b and
//     0 <= eps2 <= 1/c, c = 7*47^4*48;
//   - alpha_blue^2 / alpha_red^2 equals the requested ratio exactly
//     (as an enclosure in the interval-certified case).
#pragma once

#include "apcolor/bounds.hpp"
#include "apcolor/coloring.hpp"
#include "apcolor/verifier.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace apcolor {

// c = 7 * 47^4 * 48, the small-case constant.
inline const Integer kSmallCaseC = Integer(7) * 4879681 * 48;

struct SearchSpace {
    std::int64_t p_min = 3, p_max = 3;
    std::int64_t d_min = 1, d_max = 1;
    std::int64_t l_min = 1, l_max = 1;
    Rational alpha_sq = 1;
    std::int64_t p_cap = 200;  // hard ceiling on p_max
};

struct SearchHit {
    ColoringParams params;
    BoundReport bound;
    bool operator==(const SearchHit&) const = default;
};

/// Every (p, d, l) in the space passing check_range, check_divisibility,
/// check_red_l3 and check_blue_translates(squares(p)), each with its
/// unit-distance bound report, sorted by (m, p, d, l). Deterministic and
/// independent of the thread count.
std::vector<SearchHit> search_unit_params(const SearchSpace& space, int threads = 1);

enum class CaseTag { Large, Small, Rational1, Rational2, Irrational };

/// A certified enclosure lo <= value <= hi of a (possibly irrational)
/// number; exact when lo == hi.
struct RationalInterval {
    Rational lo, hi;
    bool operator==(const RationalInterval&) const = default;
};

struct WitnessPair {
    RationalInterval alpha_red_sq;  // exact (lo == hi) except in the irrational case
    Rational alpha_blue_sq;
    Integer b;       // integer part of the blue decomposition
    Rational eps2;   // alpha_blue_sq - b, in [0, 1/c]
    CaseTag case_tag = CaseTag::Large;
    std::string notes;
    bool operator==(const WitnessPair&) const = default;
};

/// Dispatch order Large, Small, Rational1, Rational2. Throws
/// "not covered" for ratios outside every case (47 | q with 47 not
/// dividing p and the magnitude cases inapplicable). Interval inputs
/// always classify as Irrational.
CaseTag classify_alpha(const Rational& alpha_sq);
CaseTag classify_alpha(const RationalInterval& alpha_sq);

/// alpha_sq >= 2: smallest integer n in [alpha_sq, 3/2 alpha_sq] with
/// n >= 3 and 47 not dividing n; blue = n, red = n / alpha_sq in [1, 3/2].
WitnessPair witness_large(const Rational& alpha_sq);

/// alpha_sq <= 1/(2c): smallest integer n in
/// [1/alpha_sq, (1 + 1/c)/alpha_sq] with n >= 2(c+1) and 47 not dividing
/// n; red = n, blue = n * alpha_sq in [1, 1 + 1/c]. When n is not 1 mod
/// 47 the red band cannot hold and the pair carries a warning note.
WitnessPair witness_small(const Rational& alpha_sq);

/// alpha_sq = p/q in lowest terms. Case 1 (47 divides neither p nor q):
/// red = q * inv47(q mod 47), blue = p * inv47(q mod 47). Case 2 (47
/// divides p): with g the inverse of q mod 47p, red = (p+1) g q / p and
/// blue = (p+1) g.
WitnessPair witness_rational(const Integer& p_num, const Integer& q_den);

/// Scans blue candidates n = 48, 95, ... (n = 1 mod 47) until some
/// q = 1 mod 47 satisfies q < n/alpha_sq < q + 1/2 decidably under the
/// input enclosure. Throws "undecided" when the scan exhausts max_search
/// candidates or the enclosure is too wide, and "use rational case" for
/// a degenerate (exact) enclosure.
WitnessPair witness_irrational(const RationalInterval& alpha_sq, std::int64_t max_search);

/// classify_alpha + the matching constructor.
WitnessPair make_witness(const Rational& alpha_sq);
WitnessPair make_witness(const RationalInterval& alpha_sq, std::int64_t max_search);

const char* case_tag_name(CaseTag tag);

}  // namespace apcolor
