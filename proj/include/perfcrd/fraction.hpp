#pragma once
#include <cstdint>
#include <string>

namespace perfcrd {

// Non-negative rational, normalized (gcd 1, den > 0). Thresholds are kept
// exact so ceiling arithmetic never suffers floating-point misfires at
// boundaries like T=2/3 with M=3.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d);

    // Accepts "a/b", decimal ("0.25"), or integer ("1") forms.
    static Fraction parse(const std::string& text);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
};

// ceil(f * m) in exact integer arithmetic, f >= 0, m >= 0.
std::int64_t ceil_mul(const Fraction& f, std::int64_t m);

}  // namespace perfcrd
