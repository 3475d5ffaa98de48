#include "apcolor/coloring.hpp"

#include <set>
#include <stdexcept>

namespace apcolor {

ColoringParams ColoringParams::from_generator(PrimeModulus p, std::int64_t d, std::int64_t l) {
    if (d < 1) throw std::invalid_argument("red-set step d must be >= 1");
    if (l < 1) throw std::invalid_argument("red-set length l must be >= 1");
    const std::int64_t n = p.value();
    std::set<std::int64_t> elems;
    for (std::int64_t i = 0; i < l; ++i)
        elems.insert(static_cast<std::int64_t>(
            (static_cast<unsigned __int128>(i % n) * static_cast<unsigned __int128>(d % n)) %
            static_cast<unsigned __int128>(n)));
    if (static_cast<std::int64_t>(elems.size()) != l)
        throw std::invalid_argument("red set members collide mod p");
    return ColoringParams{p, ResidueSet(p, {elems.begin(), elems.end()}),
                          RedSetGenerator{d, l}};
}

ColoringParams ColoringParams::from_set(PrimeModulus p, std::vector<std::int64_t> members) {
    if (members.empty()) throw std::invalid_argument("red set must be nonempty");
    ResidueSet set(p, members);
    if (set.size() != static_cast<std::int64_t>(members.size()))
        throw std::invalid_argument("red set members collide");
    return ColoringParams{p, std::move(set), std::nullopt};
}

ColoringParams ColoringParams::canonical29() {
    return from_generator(PrimeModulus(29), 4, 4);
}

ColoringParams ColoringParams::canonical47() {
    return from_generator(PrimeModulus(47), 5, 5);
}

Color color_of_norm(const Rational& q, const ColoringParams& params) {
    if (q < 0) throw std::invalid_argument("not a squared norm");
    std::int64_t residue = mod_reduce(rational_floor(q), params.p.value());
    return params.red_set.contains(residue) ? Color::Red : Color::Blue;
}

Rational squared_norm(const RationalVector& x) {
    Rational s = 0;
    for (const Rational& c : x) s += c * c;
    return s;
}

Color color_point(const RationalVector& x, const ColoringParams& params) {
    return color_of_norm(squared_norm(x), params);
}

Rational norm_identity_check(const RationalVector& x, const RationalVector& y,
                             const RationalVector& z) {
    if (x.size() != y.size() || y.size() != z.size())
        throw std::invalid_argument("not a 3-term progression: dimension mismatch");
    RationalVector xy(x.size()), yz(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] - 2 * y[i] + z[i] != 0)
            throw std::invalid_argument("not a 3-term progression: x - 2y + z != 0");
        xy[i] = x[i] - y[i];
        yz[i] = y[i] - z[i];
    }
    if (squared_norm(xy) != squared_norm(yz))
        throw std::invalid_argument("not a 3-term progression: unequal steps");
    return squared_norm(x) - 2 * squared_norm(y) + squared_norm(z);
}

const char* color_name(Color c) { return c == Color::Red ? "Red" : "Blue"; }

}  // namespace apcolor
