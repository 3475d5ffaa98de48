#include "apcolor/bounds.hpp"

#include <stdexcept>

namespace apcolor {

DirichletApprox dirichlet_approx(const Rational& beta, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("denominator bound must be >= 1");
    const Rational bound = Rational(1, n + 1);
    for (std::int64_t d = 1; d <= n; ++d) {
        const Rational target = beta * d;
        const Integer lo = rational_floor(target);
        // Candidate nearest integers; ties resolve to the smaller a.
        for (int offset = 0; offset <= 1; ++offset) {
            const Integer a = lo + offset;
            Rational err = target - Rational(a);
            if (err < 0) err = -err;
            if (err <= bound)
                return DirichletApprox{a, d, n, err, bound};
        }
    }
    // Unreachable: d = denominator(beta) mod-reduced always qualifies for
    // rational beta when it is <= n, and the three-distance argument covers
    // the rest; kept as a hard error rather than silent nonsense.
    throw std::logic_error("dirichlet_approx: no admissible pair found");
}

std::int64_t required_index_count(PrimeModulus p, DistanceCase c) {
    const std::int64_t v = p.value();
    if (v > 1'000'000'000)
        throw std::invalid_argument("bound arithmetic limited to p <= 1e9");
    switch (c) {
        case DistanceCase::UnitDistance:
            return 3 * ((v - 1) / 2) + 1;
        case DistanceCase::GeneralDistance:
            return 4 * (v - 1) + 1;
    }
    throw std::logic_error("unknown distance case");
}

BoundReport blue_bound(PrimeModulus p, DistanceCase c) {
    BoundReport report;
    report.p = p.value();
    report.distance_case = c;
    report.required_index_count = required_index_count(p, c);
    report.max_denominator =
        c == DistanceCase::UnitDistance ? p.value() - 1 : p.value();
    report.m = report.max_denominator * (report.required_index_count - 1) + 1;
    const bool pinned_instance =
        (c == DistanceCase::UnitDistance && p.value() == 29) ||
        (c == DistanceCase::GeneralDistance && p.value() == 47);
    if (!pinned_instance) report.notes = "extrapolated";
    return report;
}

ProgressionNorms progression_norms(const Rational& x0, const Rational& x1,
                                   const Rational& alpha_sq, std::int64_t length) {
    if (length < 2) throw std::invalid_argument("progression length must be >= 2");
    ProgressionNorms out;
    out.x0 = x0;
    out.alpha_sq = alpha_sq;
    out.beta = x1 - x0 - alpha_sq;
    out.values.reserve(static_cast<size_t>(length));
    for (std::int64_t i = 0; i < length; ++i)
        out.values.push_back(alpha_sq * i * i + out.beta * i + x0);
    return out;
}

const char* distance_case_name(DistanceCase c) {
    return c == DistanceCase::UnitDistance ? "unit" : "general";
}

}  // namespace apcolor
