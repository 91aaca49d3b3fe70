#include "perfcrd/fraction.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace perfcrd {

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("fraction: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num < 0) throw std::invalid_argument("fraction: negative value");
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

namespace {

std::int64_t parse_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) throw std::invalid_argument("fraction: empty number in '" + s + "'");
    std::int64_t v = 0;
    for (std::size_t k = from; k < to; ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("fraction: bad character in '" + s + "'");
        v = v * 10 + (s[k] - '0');
        if (v < 0) throw std::invalid_argument("fraction: overflow in '" + s + "'");
    }
    return v;
}

}  // namespace

Fraction Fraction::parse(const std::string& text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    if (a == b) throw std::invalid_argument("fraction: empty string");

    const auto slash = text.find('/', a);
    if (slash != std::string::npos && slash < b) {
        const std::int64_t n = parse_digits(text, a, slash);
        const std::int64_t d = parse_digits(text, slash + 1, b);
        return Fraction(n, d);
    }
    const auto dot = text.find('.', a);
    if (dot != std::string::npos && dot < b) {
        const std::int64_t whole = (dot == a) ? 0 : parse_digits(text, a, dot);
        const std::size_t frac_digits = b - dot - 1;
        if (frac_digits == 0) return Fraction(whole, 1);
        if (frac_digits > 15) throw std::invalid_argument("fraction: too many decimals in '" + text + "'");
        const std::int64_t frac = parse_digits(text, dot + 1, b);
        std::int64_t scale = 1;
        for (std::size_t k = 0; k < frac_digits; ++k) scale *= 10;
        return Fraction(whole * scale + frac, scale);
    }
    return Fraction(parse_digits(text, a, b), 1);
}

std::string Fraction::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::int64_t ceil_mul(const Fraction& f, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("ceil_mul: negative multiplier");
    const __int128 prod = static_cast<__int128>(f.num) * m;
    const __int128 q = (prod + f.den - 1) / f.den;
    return static_cast<std::int64_t>(q);
}

}  // namespace perfcrd
