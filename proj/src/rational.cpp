#include "apcolor/rational.hpp"

#include <stdexcept>

namespace apcolor {

Integer floor_div(const Integer& num, const Integer& den) {
    if (den <= 0) throw std::invalid_argument("floor_div: denominator must be positive");
    Integer q = num / den;  // truncates toward zero
    if (num % den != 0 && num < 0) --q;
    return q;
}

Integer rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

Integer rational_ceil(const Rational& q) {
    return -floor_div(-numerator(q), denominator(q));
}

std::int64_t mod_reduce(const Integer& v, std::int64_t p) {
    if (p <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) throw std::invalid_argument("malformed integer");
    Integer v{std::string(s)};
    return neg ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        Integer whole = parse_integer(text.substr(0, dot));
        if (!is_digits(frac)) throw std::invalid_argument("malformed decimal");
        Integer scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer frac_num{std::string(frac)};
        bool neg = text[0] == '-';
        Integer num = whole * scale + (neg ? -frac_num : frac_num);
        return Rational(num, scale);
    }
    return Rational(parse_integer(text));
}

std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

bool rational_sqrt(const Rational& q, Rational* root) {
    if (q < 0) return false;
    Integer num = numerator(q), den = denominator(q);
    Integer rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

}  // namespace apcolor
