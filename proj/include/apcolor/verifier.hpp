// Exhaustive, certificate-producing verification of the finite lemmas
// behind the coloring: the red 3-progression exclusion, blue translate
// coverage, and the two parameter admissibility conditions.
//
// A KWindow is the set of integers that floor(|x|^2) - 2 floor(|y|^2) +
// floor(|z|^2) can take along a 3-progression of squared step alpha_sq:
// exactly the integers within distance < 2 of 2*alpha_sq. Checks work on
// its reduction mod p; the raw integers are kept for reporting and for
// the window invariant.
#pragma once

#include "apcolor/coloring.hpp"
#include "apcolor/ffield.hpp"
#include "apcolor/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace apcolor {

enum class CheckStatus { Verified, Refuted };

struct Counterexample {
    // Named assignment, e.g. {X:4, Y:0, Z:0, k:4} or {c:7}.
    std::map<std::string, std::int64_t> assignment;
    bool operator==(const Counterexample&) const = default;
};

struct Certificate {
    std::string lemma_id;
    ColoringParams params;
    CheckStatus status = CheckStatus::Verified;
    std::optional<Counterexample> counterexample;
    std::uint64_t enumeration_size = 0;
    std::string notes;
    bool operator==(const Certificate&) const = default;
};

struct KWindow {
    std::int64_t p = 0;
    std::vector<Integer> raw;                // integers with |k - 2 alpha_sq| < 2
    std::vector<std::int64_t> residues;      // raw reduced mod p, sorted, deduped

    static KWindow from_residues(PrimeModulus p, std::vector<std::int64_t> ks);
    bool operator==(const KWindow&) const = default;
};

/// { k in Z : |k - 2 alpha_sq| < 2 } together with its reduction mod p.
/// alpha_sq must be positive.
KWindow k_window(const Rational& alpha_sq, PrimeModulus p);

/// Transfer condition licensing the mod-p triple enumeration: with
/// S = (l-1)d for generated red sets (canonical spread otherwise),
/// requires p > 2S + max(residues) and p > 2S - min(residues), so every
/// reachable value of X - 2Y + Z meets each window class at most once,
/// at its canonical representative.
bool check_range(const ColoringParams& params, const KWindow& window);

/// Fast sufficient condition: no window residue is 0 mod d. Requires a
/// generated red set with d >= 2.
bool check_divisibility(const ColoringParams& params, const KWindow& window);

/// Verified iff no (X, Y, Z) in red_set^3 and k in the window residues
/// solve X - 2Y + Z = k (mod p). Throws "range condition violated" when
/// check_range fails. Scans the full |R|^3 * |W| domain; a refutation
/// reports the solution minimizing (k, Z, Y, X).
Certificate check_red_l3(const ColoringParams& params, const KWindow& window);

/// Verified iff every translate test_set + c meets the red set; a
/// refutation reports the smallest failing c. test_set_label is echoed
/// into the certificate notes.
Certificate check_blue_translates(const ColoringParams& params, const ResidueSet& test_set,
                                  const std::string& test_set_label = "");

/// check_range / check_divisibility wrapped as certificates (for CLI and
/// report output).
Certificate range_certificate(const ColoringParams& params, const KWindow& window);
Certificate divisibility_certificate(const ColoringParams& params, const KWindow& window);

}  // namespace apcolor
