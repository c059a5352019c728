#pragma once

#include <cstdint>
#include <numeric>

namespace bcp {

/// Non-negative rational with positive denominator, kept reduced.
/// Used for thresholds like alpha*w_i and max{r,3}*w_i; all comparisons
/// against integer weights go through cross-multiplication so the code
/// never touches floating point.
struct Frac {
    long long num = 0;
    long long den = 1;

    constexpr Frac() = default;
    constexpr Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Frac operator*(long long x) const { return Frac(num * x, den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator-(long long x) const { return Frac(num - x * den, den); }

    /// Smallest integer >= this fraction.
    long long ceil() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }
    /// Largest integer <= this fraction.
    long long floor() const { return num >= 0 ? num / den : -(((-num) + den - 1) / den); }
};

inline __int128 cross_l(const Frac& a, const Frac& b) { return (__int128)a.num * b.den; }
inline __int128 cross_r(const Frac& a, const Frac& b) { return (__int128)b.num * a.den; }

inline bool operator<(const Frac& a, const Frac& b) { return cross_l(a, b) < cross_r(a, b); }
inline bool operator>(const Frac& a, const Frac& b) { return b < a; }
inline bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
inline bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }
inline bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

inline bool operator<(long long x, const Frac& f) { return (__int128)x * f.den < f.num; }
inline bool operator<(const Frac& f, long long x) { return f.num < (__int128)x * f.den; }
inline bool operator>=(long long x, const Frac& f) { return !(x < f); }
inline bool operator>=(const Frac& f, long long x) { return !(f < x); }
inline bool operator<=(long long x, const Frac& f) { return !(f < x); }
inline bool operator<=(const Frac& f, long long x) { return !(x < f); }
inline bool operator>(long long x, const Frac& f) { return f < x; }
inline bool operator>(const Frac& f, long long x) { return x < f; }

inline Frac frac_max(const Frac& a, const Frac& b) { return a < b ? b : a; }

} // namespace bcp
