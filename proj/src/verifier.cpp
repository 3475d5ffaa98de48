#include "apcolor/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace apcolor {

namespace {

// Spread used by the range condition: the unreduced spread (l-1)d for
// generated sets (that is what the integer-transfer argument bounds, wrap
// or no wrap), the canonical spread for arbitrary sets.
Integer range_spread(const ColoringParams& params) {
    if (params.generator)
        return Integer(params.generator->l - 1) * params.generator->d;
    return Integer(params.red_set.members.back() - params.red_set.members.front());
}

std::string window_note(const KWindow& window) {
    std::ostringstream os;
    os << "window={";
    for (size_t i = 0; i < window.residues.size(); ++i)
        os << (i ? "," : "") << window.residues[i];
    os << "}";
    return os.str();
}

}  // namespace

KWindow KWindow::from_residues(PrimeModulus p, std::vector<std::int64_t> ks) {
    if (ks.empty()) throw std::invalid_argument("empty window");
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    KWindow w;
    w.p = p.value();
    for (std::int64_t k : ks) {
        if (k < 0 || k >= w.p) throw std::invalid_argument("window residue out of range");
        w.raw.emplace_back(k);
    }
    w.residues = std::move(ks);
    return w;
}

KWindow k_window(const Rational& alpha_sq, PrimeModulus p) {
    if (alpha_sq <= 0) throw std::invalid_argument("alpha_sq must be positive");
    const Rational center = 2 * alpha_sq;
    // Open interval (center - 2, center + 2).
    Rational lo = center - 2, hi = center + 2;
    Integer k_min = rational_floor(lo) + 1;  // smallest integer strictly above lo
    Integer k_max = rational_ceil(hi) - 1;   // largest integer strictly below hi
    KWindow w;
    w.p = p.value();
    for (Integer k = k_min; k <= k_max; ++k) {
        w.raw.push_back(k);
        w.residues.push_back(mod_reduce(k, w.p));
    }
    std::sort(w.residues.begin(), w.residues.end());
    w.residues.erase(std::unique(w.residues.begin(), w.residues.end()), w.residues.end());
    return w;
}

bool check_range(const ColoringParams& params, const KWindow& window) {
    if (params.p.value() != window.p)
        throw std::invalid_argument("window modulus does not match params");
    const Integer two_s = 2 * range_spread(params);
    const Integer p = params.p.value();
    const Integer k_max = window.residues.back();
    const Integer k_min = window.residues.front();
    return p > two_s + k_max && p > two_s - k_min;
}

bool check_divisibility(const ColoringParams& params, const KWindow& window) {
    if (!params.generator || params.generator->d < 2)
        throw std::invalid_argument("divisibility check requires a generated red set with d >= 2");
    const std::int64_t d = params.generator->d;
    for (std::int64_t k : window.residues)
        if (k % d == 0) return false;
    return true;
}

Certificate check_red_l3(const ColoringParams& params, const KWindow& window) {
    if (!check_range(params, window))
        throw std::invalid_argument("range condition violated");
    const std::int64_t p = params.p.value();
    const auto& red = params.red_set.members;

    // Full scan, no early exit: the enumeration size is part of the
    // certificate, and the first solution in (k, Z, Y, X) order is the
    // canonical counterexample.
    std::optional<Counterexample> counterexample;
    for (std::int64_t k : window.residues) {
        for (std::int64_t z : red)
            for (std::int64_t y : red)
                for (std::int64_t x : red) {
                    std::int64_t v = ((x - 2 * y + z) % p + p) % p;
                    if (v == k && !counterexample)
                        counterexample =
                            Counterexample{{{"X", x}, {"Y", y}, {"Z", z}, {"k", k}}};
                }
    }
    const std::uint64_t domain = static_cast<std::uint64_t>(red.size()) * red.size() *
                                 red.size() * window.residues.size();
    return Certificate{"red_l3", params,
                       counterexample ? CheckStatus::Refuted : CheckStatus::Verified,
                       counterexample, domain, window_note(window)};
}

Certificate check_blue_translates(const ColoringParams& params, const ResidueSet& test_set,
                                  const std::string& test_set_label) {
    if (test_set.modulus.value() != params.p.value())
        throw std::invalid_argument("test set modulus does not match params");
    if (test_set.size() == 0) throw std::invalid_argument("test set must be nonempty");
    const std::int64_t p = params.p.value();

    std::optional<Counterexample> counterexample;
    for (std::int64_t c = 0; c < p; ++c) {
        bool hits_red = false;
        for (std::int64_t t : test_set.members) {
            std::int64_t shifted = t + c;
            if (shifted >= p) shifted -= p;
            if (params.red_set.contains(shifted)) {
                hits_red = true;
                break;
            }
        }
        if (!hits_red && !counterexample) counterexample = Counterexample{{{"c", c}}};
    }
    return Certificate{"blue_translates", params,
                       counterexample ? CheckStatus::Refuted : CheckStatus::Verified,
                       counterexample, static_cast<std::uint64_t>(p), test_set_label};
}

Certificate range_certificate(const ColoringParams& params, const KWindow& window) {
    std::optional<Counterexample> counterexample;
    if (!check_range(params, window))
        counterexample = Counterexample{
            {{"p", params.p.value()}, {"k_max", window.residues.back()}}};
    return Certificate{"range_condition", params,
                       counterexample ? CheckStatus::Refuted : CheckStatus::Verified,
                       counterexample, 1, window_note(window)};
}

Certificate divisibility_certificate(const ColoringParams& params, const KWindow& window) {
    std::optional<Counterexample> counterexample;
    if (!check_divisibility(params, window)) {
        const std::int64_t d = params.generator->d;
        for (std::int64_t k : window.residues)
            if (k % d == 0) {
                counterexample = Counterexample{{{"k", k}, {"d", d}}};
                break;
            }
    }
    return Certificate{"divisibility_condition", params,
                       counterexample ? CheckStatus::Refuted : CheckStatus::Verified,
                       counterexample, static_cast<std::uint64_t>(window.residues.size()),
                       window_note(window)};
}

}  // namespace apcolor
