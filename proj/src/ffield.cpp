#include "apcolor/ffield.hpp"

#include <algorithm>
#include <stdexcept>

namespace apcolor {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128(a) * b) % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Enumerating residue sets is only meaningful for moduli we can hold in
// memory; primality itself works for the whole 64-bit range.
constexpr std::int64_t kEnumerationCap = 1'000'000;

void require_enumerable(std::int64_t p) {
    if (p > kEnumerationCap)
        throw std::invalid_argument("residue enumeration too large for modulus " + std::to_string(p));
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = static_cast<u64>(n - 1);
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is a deterministic witness family for all n < 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, static_cast<u64>(n));
        if (x == 1 || x == static_cast<u64>(n - 1)) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, static_cast<u64>(n));
            if (x == static_cast<u64>(n - 1)) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("composite modulus: " + std::to_string(p));
}

ResidueSet::ResidueSet(PrimeModulus p, std::vector<std::int64_t> elems)
    : modulus(p), members(std::move(elems)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::int64_t m : members)
        if (m < 0 || m >= modulus.value())
            throw std::invalid_argument("residue out of range: " + std::to_string(m));
}

bool ResidueSet::contains(std::int64_t r) const {
    return std::binary_search(members.begin(), members.end(), r);
}

ResidueSet squares(PrimeModulus p) {
    const std::int64_t n = p.value();
    require_enumerable(n);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (std::int64_t x = 0; x <= n / 2; ++x)
        seen[static_cast<size_t>(mulmod(static_cast<u64>(x), static_cast<u64>(x),
                                        static_cast<u64>(n)))] = true;
    std::vector<std::int64_t> out;
    out.reserve(static_cast<size_t>((n + 1) / 2));
    for (std::int64_t r = 0; r < n; ++r)
        if (seen[static_cast<size_t>(r)]) out.push_back(r);
    return ResidueSet(p, std::move(out));
}

ResidueSet complement(const ResidueSet& set) {
    const std::int64_t n = set.modulus.value();
    require_enumerable(n);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<size_t>(n - set.size()));
    auto it = set.members.begin();
    for (std::int64_t r = 0; r < n; ++r) {
        if (it != set.members.end() && *it == r)
            ++it;
        else
            out.push_back(r);
    }
    return ResidueSet(set.modulus, std::move(out));
}

ResidueSet without_zero(const ResidueSet& set) {
    std::vector<std::int64_t> out;
    out.reserve(set.members.size());
    for (std::int64_t r : set.members)
        if (r != 0) out.push_back(r);
    return ResidueSet(set.modulus, std::move(out));
}

ResidueSet scale_set(const ResidueSet& set, std::int64_t unit) {
    const std::int64_t p = set.modulus.value();
    std::int64_t u = ((unit % p) + p) % p;
    if (u == 0) throw std::invalid_argument("scale_set: unit is zero mod p");
    std::vector<std::int64_t> out;
    out.reserve(set.members.size());
    for (std::int64_t r : set.members)
        out.push_back(static_cast<std::int64_t>(
            mulmod(static_cast<u64>(u), static_cast<u64>(r), static_cast<u64>(p))));
    return ResidueSet(set.modulus, std::move(out));
}

std::int64_t inverse(std::int64_t a, PrimeModulus p) {
    const std::int64_t n = p.value();
    std::int64_t r = ((a % n) + n) % n;
    if (r == 0) throw std::invalid_argument("zero has no inverse");
    return static_cast<std::int64_t>(
        powmod(static_cast<u64>(r), static_cast<u64>(n - 2), static_cast<u64>(n)));
}

bool is_qr(std::int64_t a, PrimeModulus p) {
    const std::int64_t n = p.value();
    std::int64_t r = ((a % n) + n) % n;
    if (r == 0) return true;
    return powmod(static_cast<u64>(r), static_cast<u64>((n - 1) / 2), static_cast<u64>(n)) == 1;
}

std::int64_t max_ap_in_set(const ResidueSet& set, std::int64_t step) {
    const std::int64_t p = set.modulus.value();
    require_enumerable(p);
    std::int64_t s = ((step % p) + p) % p;
    if (s == 0) throw std::invalid_argument("max_ap_in_set: step is zero mod p");
    if (set.size() == p) return p;
    if (set.size() == 0) return 0;

    std::vector<bool> in(static_cast<size_t>(p), false);
    for (std::int64_t m : set.members) in[static_cast<size_t>(m)] = true;

    // Stepping by a unit visits every residue in one p-cycle; a progression
    // inside the set is a run of members along that cycle, wrap included.
    std::int64_t best = 0, run = 0;
    std::int64_t r = 0;
    for (std::int64_t t = 0; t < 2 * p; ++t) {
        if (in[static_cast<size_t>(r)]) {
            ++run;
            if (run > best) best = run;
            if (best >= p) return p;
        } else {
            run = 0;
        }
        r += s;
        if (r >= p) r -= p;
    }
    return std::min(best, p);
}

}  // namespace apcolor
