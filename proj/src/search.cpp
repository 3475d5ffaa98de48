#include "apcolor/search.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <stdexcept>
#include <thread>

namespace apcolor {

namespace {

Integer egcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    Integer x1, y1;
    Integer g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

/// Inverse of a modulo m (m > 1), as an integer in [0, m).
Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer x, y;
    Integer g = egcd(((a % m) + m) % m, m, x, y);
    if (g != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return ((x % m) + m) % m;
}

void set_blue_decomposition(WitnessPair& w) {
    w.b = rational_floor(w.alpha_blue_sq);
    w.eps2 = w.alpha_blue_sq - Rational(w.b);
}

/// Postconditions every constructor must satisfy; the red band check is
/// skipped when the small case could not reach a band-admissible integer.
void validate_pair(const WitnessPair& w, bool check_band = true) {
    if (w.b <= 0 || w.b % 47 == 0)
        throw std::logic_error("witness: blue integer part divisible by 47");
    if (w.eps2 < 0 || w.eps2 > Rational(Integer(1), kSmallCaseC))
        throw std::logic_error("witness: blue error term out of range");
    if (!check_band) return;
    const Rational red_lo = w.alpha_red_sq.lo;
    const Rational red_hi = w.alpha_red_sq.hi;
    const Integer n47 = floor_div(rational_floor(red_lo) - 1, 47);
    if (n47 < 0 || red_lo < 47 * Rational(n47) + 1 || red_hi > 47 * Rational(n47) + Rational(3, 2))
        throw std::logic_error("witness: red square outside scale band");
}

}  // namespace

std::vector<SearchHit> search_unit_params(const SearchSpace& space, int threads) {
    std::vector<std::int64_t> primes;
    const std::int64_t p_hi = std::min(space.p_max, space.p_cap);
    for (std::int64_t p = std::max<std::int64_t>(space.p_min, 3); p <= p_hi; ++p)
        if (p % 2 == 1 && is_prime(p)) primes.push_back(p);

    auto scan_prime = [&space](std::int64_t p_val, std::vector<SearchHit>& out) {
        PrimeModulus p(p_val);
        const KWindow window = k_window(space.alpha_sq, p);
        const ResidueSet sq = squares(p);
        for (std::int64_t d = space.d_min; d <= space.d_max; ++d) {
            if (d < 2) continue;  // divisibility condition needs d >= 2
            for (std::int64_t l = space.l_min; l <= space.l_max; ++l) {
                std::optional<ColoringParams> params;
                try {
                    params = ColoringParams::from_generator(p, d, l);
                } catch (const std::invalid_argument&) {
                    continue;  // red set collided mod p
                }
                if (!check_range(*params, window)) continue;
                if (!check_divisibility(*params, window)) continue;
                if (check_red_l3(*params, window).status != CheckStatus::Verified) continue;
                if (check_blue_translates(*params, sq, "squares").status != CheckStatus::Verified)
                    continue;
                out.push_back(SearchHit{*params, blue_bound(p, DistanceCase::UnitDistance)});
            }
        }
    };

    std::vector<std::vector<SearchHit>> per_prime(primes.size());
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(primes.size())));
    if (workers <= 1) {
        for (size_t i = 0; i < primes.size(); ++i) scan_prime(primes[i], per_prime[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1))
                    scan_prime(primes[i], per_prime[i]);
            });
        for (auto& t : pool) t.join();
    }

    std::vector<SearchHit> hits;
    for (auto& chunk : per_prime)
        for (auto& hit : chunk) hits.push_back(std::move(hit));
    std::stable_sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        auto key = [](const SearchHit& h) {
            return std::tuple(h.bound.m, h.params.p.value(), h.params.generator->d,
                              h.params.generator->l);
        };
        return key(a) < key(b);
    });
    return hits;
}

CaseTag classify_alpha(const Rational& alpha_sq) {
    if (alpha_sq <= 0) throw std::invalid_argument("alpha_sq must be positive");
    if (alpha_sq >= 2) return CaseTag::Large;
    if (alpha_sq <= Rational(Integer(1), 2 * kSmallCaseC)) return CaseTag::Small;
    // alpha_sq is stored reduced, so 47 divides at most one of p, q.
    if (numerator(alpha_sq) % 47 == 0) return CaseTag::Rational2;
    if (denominator(alpha_sq) % 47 != 0) return CaseTag::Rational1;
    throw std::invalid_argument(
        "not covered by the ratio cases: alpha_sq = p/q with 47 | q, 47 does not divide p, "
        "and neither magnitude case applies");
}

CaseTag classify_alpha(const RationalInterval& alpha_sq) {
    if (alpha_sq.lo > alpha_sq.hi) throw std::invalid_argument("empty interval");
    if (alpha_sq.lo <= 0) throw std::invalid_argument("alpha_sq must be positive");
    return CaseTag::Irrational;
}

WitnessPair witness_large(const Rational& alpha_sq) {
    if (alpha_sq < 2) throw std::invalid_argument("witness_large requires alpha_sq >= 2");
    const Rational upper = Rational(3, 2) * alpha_sq;
    Integer n = rational_ceil(alpha_sq);
    if (n < 3) n = 3;
    while (Rational(n) <= upper && n % 47 == 0) ++n;
    if (Rational(n) > upper)
        throw std::logic_error("witness_large: covering interval missed an admissible integer");
    WitnessPair w;
    w.case_tag = CaseTag::Large;
    w.alpha_blue_sq = Rational(n);
    w.alpha_red_sq = {Rational(n) / alpha_sq, Rational(n) / alpha_sq};
    set_blue_decomposition(w);
    validate_pair(w);
    return w;
}

WitnessPair witness_small(const Rational& alpha_sq) {
    const Rational c(kSmallCaseC);
    if (alpha_sq <= 0) throw std::invalid_argument("alpha_sq must be positive");
    if (alpha_sq > 1 / (2 * c))
        throw std::invalid_argument("use another case: alpha_sq exceeds the small-case threshold");
    const Rational inv = 1 / alpha_sq;
    const Rational upper = (1 + 1 / c) * inv;
    Integer n = rational_ceil(inv);
    const Integer floor_n = 2 * (kSmallCaseC + 1);
    if (n < floor_n) n = floor_n;
    while (Rational(n) <= upper && n % 47 == 0) ++n;
    if (Rational(n) > upper)
        throw std::logic_error("witness_small: covering interval missed an admissible integer");
    WitnessPair w;
    w.case_tag = CaseTag::Small;
    w.alpha_red_sq = {Rational(n), Rational(n)};
    w.alpha_blue_sq = Rational(n) * alpha_sq;
    set_blue_decomposition(w);
    w.notes = "small case: threshold 1/(2c), c = 7*47^4*48";
    const bool in_band = n % 47 == 1;
    if (!in_band)
        w.notes += "; warning: alpha_red_sq = " + Integer(n % 47).str() +
                   " mod 47, outside the scale band [47N+1, 47N+3/2]";
    validate_pair(w, in_band);
    return w;
}

WitnessPair witness_rational(const Integer& p_num, const Integer& q_den) {
    if (p_num <= 0 || q_den <= 0)
        throw std::invalid_argument("alpha_sq components must be positive");
    if (gcd(p_num, q_den) != 1)
        throw std::invalid_argument("alpha_sq components must be coprime");

    WitnessPair w;
    if (p_num % 47 != 0 && q_den % 47 != 0) {
        // Case 1: clear the denominator with the inverse of q mod 47, which
        // puts red = q * inv at 1 mod 47.
        const Integer r = q_den % 47;
        const Integer r_inv = mod_inverse(r, 47);
        w.case_tag = CaseTag::Rational1;
        w.alpha_red_sq = {Rational(q_den * r_inv), Rational(q_den * r_inv)};
        w.alpha_blue_sq = Rational(p_num * r_inv);
    } else if (p_num % 47 == 0) {
        // Case 2: g q = 1 (mod 47p) makes red = (p+1) g q / p equal
        // 1 + 1/p + 47N(p+1), inside a band since 1/p <= 1/2.
        const Integer modulus = 47 * p_num;
        const Integer g = mod_inverse(q_den, modulus);
        w.case_tag = CaseTag::Rational2;
        w.alpha_red_sq = {Rational((p_num + 1) * g * q_den, p_num),
                          Rational((p_num + 1) * g * q_den, p_num)};
        w.alpha_blue_sq = Rational((p_num + 1) * g);
    } else {
        throw std::invalid_argument(
            "not covered by the ratio cases: 47 divides the denominator only");
    }
    set_blue_decomposition(w);
    validate_pair(w);
    return w;
}

WitnessPair witness_irrational(const RationalInterval& alpha_sq, std::int64_t max_search) {
    if (alpha_sq.lo > alpha_sq.hi || alpha_sq.lo <= 0)
        throw std::invalid_argument("invalid alpha_sq enclosure");
    if (alpha_sq.lo == alpha_sq.hi)
        throw std::invalid_argument("use rational case: enclosure is exact");
    for (std::int64_t step = 0; step < max_search; ++step) {
        const Integer n = 48 + 47 * Integer(step);  // n = 1 mod 47
        // Enclosure of n / alpha_sq.
        const Rational lo = Rational(n) / alpha_sq.hi;
        const Rational hi = Rational(n) / alpha_sq.lo;
        const Integer q = rational_floor(lo);
        if (q % 47 != 1) continue;
        // Certify q < n/alpha_sq < q + 1/2 for the whole enclosure.
        if (lo > Rational(q) && hi < Rational(q) + Rational(1, 2)) {
            WitnessPair w;
            w.case_tag = CaseTag::Irrational;
            w.alpha_red_sq = {lo, hi};
            w.alpha_blue_sq = Rational(n);
            set_blue_decomposition(w);
            validate_pair(w);
            return w;
        }
    }
    throw std::runtime_error(
        "undecided: refine the alpha_sq enclosure or raise max_search");
}

WitnessPair make_witness(const Rational& alpha_sq) {
    switch (classify_alpha(alpha_sq)) {
        case CaseTag::Large:
            return witness_large(alpha_sq);
        case CaseTag::Small:
            return witness_small(alpha_sq);
        case CaseTag::Rational1:
        case CaseTag::Rational2:
            return witness_rational(numerator(alpha_sq), denominator(alpha_sq));
        default:
            throw std::logic_error("unexpected tag for exact ratio");
    }
}

WitnessPair make_witness(const RationalInterval& alpha_sq, std::int64_t max_search) {
    classify_alpha(alpha_sq);
    return witness_irrational(alpha_sq, max_search);
}

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Large: return "large";
        case CaseTag::Small: return "small";
        case CaseTag::Rational1: return "rational1";
        case CaseTag::Rational2: return "rational2";
        case CaseTag::Irrational: return "irrational";
    }
    return "unknown";
}

}  // namespace apcolor
