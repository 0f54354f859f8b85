#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace addcomb {

// Exact rational with 64-bit components. Densities and density-increment
// thresholds are compared through this type so that cutoffs like 5/4*alpha
// never depend on floating-point rounding.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Always "p/q", including q = 1, so serialized reports are uniform.
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        // Cross-cancel before multiplying to keep components small.
        std::int64_t an = a.num, bd = b.den;
        std::int64_t g1 = std::gcd(an < 0 ? -an : an, bd);
        std::int64_t bn = b.num, ad = a.den;
        std::int64_t g2 = std::gcd(bn < 0 ? -bn : bn, ad);
        return Rational((an / g1) * (bn / g2), (ad / g2) * (bd / g1));
    }
};

}  // namespace addcomb
