// Exact modular arithmetic over Z/pZ for odd primes p: quadratic residue
// sets, inverses, and run/gap structure of residue sets under additive
// stepping (including wrap-around, i.e. progressions live in F_p, not in
// an integer interval).
#pragma once

#include "apcolor/rational.hpp"

#include <cstdint>
#include <vector>

namespace apcolor {

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::int64_t n);

/// An odd prime modulus. Construction fails for anything else.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p);
    std::int64_t value() const { return p_; }
    bool operator==(const PrimeModulus& other) const = default;

private:
    std::int64_t p_;
};

/// A subset of [0, p), kept sorted and duplicate-free.
struct ResidueSet {
    PrimeModulus modulus;
    std::vector<std::int64_t> members;

    ResidueSet(PrimeModulus p, std::vector<std::int64_t> elems);
    bool contains(std::int64_t r) const;
    std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
    bool operator==(const ResidueSet&) const = default;
};

/// {x^2 mod p : x in [0, p)}, zero included; cardinality (p+1)/2.
ResidueSet squares(PrimeModulus p);

/// F_p \ set.
ResidueSet complement(const ResidueSet& set);

/// set \ {0}.
ResidueSet without_zero(const ResidueSet& set);

/// {u*r mod p : r in set} for a unit u.
ResidueSet scale_set(const ResidueSet& set, std::int64_t unit);

/// The unique b in [1, p) with a*b = 1 (mod p). Throws "zero has no
/// inverse" when a = 0 (mod p).
std::int64_t inverse(std::int64_t a, PrimeModulus p);

/// Euler-criterion membership test for squares(p); true for a = 0.
bool is_qr(std::int64_t a, PrimeModulus p);

/// Maximum L such that some c has {c, c+step, ..., c+(L-1)step} (mod p)
/// contained in set; p when set is all of F_p. step must be nonzero mod p.
std::int64_t max_ap_in_set(const ResidueSet& set, std::int64_t step);

}  // namespace apcolor
