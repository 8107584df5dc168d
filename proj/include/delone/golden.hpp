#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace delone {

/// Element a + b*phi of the golden integer ring Z[phi], phi = (1+sqrt 5)/2.
///
/// All point coordinates of one-dimensional Delone sets live here so that
/// patch equality, cluster matching and cylinder tests are exact. Comparisons
/// are decided by integer arithmetic only: 2(a + b*phi) = (2a+b) + b*sqrt5,
/// and the sign of A + B*sqrt5 reduces to comparing A^2 against 5B^2.
/// Coefficients must stay below 2^61 in absolute value; the sign test is then
/// free of overflow in 128-bit arithmetic.
struct Golden {
    long long a = 0;
    long long b = 0;

    constexpr Golden() = default;
    constexpr Golden(long long a_, long long b_) : a(a_), b(b_) {}
    static constexpr Golden integer(long long n) { return {n, 0}; }
    static constexpr Golden phi() { return {0, 1}; }

    friend constexpr Golden operator+(Golden x, Golden y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr Golden operator-(Golden x, Golden y) { return {x.a - y.a, x.b - y.b}; }
    constexpr Golden operator-() const { return {-a, -b}; }

    // phi^2 = phi + 1
    friend constexpr Golden operator*(Golden x, Golden y) {
        return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend constexpr Golden operator*(long long n, Golden x) { return {n * x.a, n * x.b}; }

    /// Galois conjugate: phi -> 1 - phi = -1/phi.
    constexpr Golden star() const { return {a + b, -b}; }

    friend constexpr bool operator==(Golden x, Golden y) { return x.a == y.a && x.b == y.b; }
    friend constexpr bool operator!=(Golden x, Golden y) { return !(x == y); }

    double value() const;
    std::string str() const;
};

/// Exact sign of a + b*phi: -1, 0 or +1.
int sign(Golden x);

inline bool operator<(Golden x, Golden y) { return sign(x - y) < 0; }
inline bool operator>(Golden x, Golden y) { return sign(x - y) > 0; }
inline bool operator<=(Golden x, Golden y) { return sign(x - y) <= 0; }
inline bool operator>=(Golden x, Golden y) { return sign(x - y) >= 0; }

/// Total order usable as a map key (lexicographic on (a,b), not numeric).
struct GoldenLexLess {
    bool operator()(Golden x, Golden y) const {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

/// Quotient q/den with q in Z[phi] and den a positive integer. Used for exact
/// thresholds (ball radii, window endpoints) that are not ring elements.
struct GoldenFrac {
    Golden num;
    long long den = 1;

    constexpr GoldenFrac() = default;
    constexpr GoldenFrac(Golden n, long long d) : num(n), den(d) {}
    static constexpr GoldenFrac of(Golden g) { return {g, 1}; }
    static constexpr GoldenFrac integer(long long n) { return {{n, 0}, 1}; }

    double value() const;

    friend GoldenFrac operator+(GoldenFrac x, GoldenFrac y) {
        return {y.den * x.num + x.den * y.num, x.den * y.den};
    }
    friend GoldenFrac operator-(GoldenFrac x, GoldenFrac y) {
        return {y.den * x.num - x.den * y.num, x.den * y.den};
    }
    friend GoldenFrac operator-(GoldenFrac x, Golden y) { return x - GoldenFrac::of(y); }
    friend GoldenFrac operator-(Golden x, GoldenFrac y) { return GoldenFrac::of(x) - y; }
    GoldenFrac operator-() const { return {-num, den}; }
};

int sign(GoldenFrac x);

inline bool operator<(GoldenFrac x, GoldenFrac y) { return sign(x - y) < 0; }
inline bool operator<=(GoldenFrac x, GoldenFrac y) { return sign(x - y) <= 0; }

// Mixed comparisons Golden vs GoldenFrac, exact.
inline bool operator<(Golden x, GoldenFrac y) { return sign(GoldenFrac::of(x) - y) < 0; }
inline bool operator<=(Golden x, GoldenFrac y) { return sign(GoldenFrac::of(x) - y) <= 0; }
inline bool operator<(GoldenFrac x, Golden y) { return sign(x - GoldenFrac::of(y)) < 0; }
inline bool operator<=(GoldenFrac x, Golden y) { return sign(x - GoldenFrac::of(y)) <= 0; }

/// Largest integer n with n <= x.
long long floor_int(Golden x);
long long floor_int(GoldenFrac x);

/// Nearest dyadic approximation p/2^20 of a double, as an exact threshold.
/// Radii entered as doubles are quantized through this; all spec-level radii
/// (2.5, 0.75, 0.4, ...) are dyadic and survive exactly.
GoldenFrac frac_of_double(double x);

/// Parse "1", "-2", "phi", "2+3phi", "1-phi", "phi/2", "(1+phi)/2".
Golden parse_golden(const std::string& s);
GoldenFrac parse_golden_frac(const std::string& s);

struct GoldenHash {
    size_t operator()(Golden g) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        h ^= (uint64_t)g.a + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= (uint64_t)g.b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return (size_t)h;
    }
};

} // namespace delone
