#pragma once

#include <numeric>

#include "perind/errors.hpp"

namespace perind {

// Exact value in Q/Z, kept reduced with 0 <= num < den.
struct QZ {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const QZ&, const QZ&) = default;
};

inline QZ qz(long long num, long long den) {
    if (den <= 0) throw MalformedInput("qz: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return QZ{num / g, den / g};
}

inline QZ operator+(QZ a, QZ b) { return qz(a.num * b.den + b.num * a.den, a.den * b.den); }

inline QZ operator*(long long k, QZ a) {
    long long n = (k % a.den) * a.num;
    return qz(n, a.den);
}

inline bool is_zero(QZ a) { return a.num == 0; }

}  // namespace perind
