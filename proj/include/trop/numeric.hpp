// Exact scalar and 2d primitives used everywhere: GMP integers/rationals,
// integer and rational 2-vectors and 2x2 matrices, small linear solves.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int floor_rat(const Rat& q) {
    Int z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return z;
}

/// Fractional part in [0,1).
inline Rat frac_rat(const Rat& q) { return q - Rat(floor_rat(q)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Canonical "num/den" string, denominator always written (e.g. "5/1").
inline std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        Int num(slash == std::string::npos ? s : s.substr(0, slash));
        Int den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

// ---------------------------------------------------------------------------
// 2d integer vectors (lattice vectors: slopes, windings, class columns)

struct V2i {
    Int x{0}, y{0};

    V2i() = default;
    V2i(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}
    V2i(long x_, long y_) : x(x_), y(y_) {}

    V2i operator+(const V2i& o) const { return {x + o.x, y + o.y}; }
    V2i operator-(const V2i& o) const { return {x - o.x, y - o.y}; }
    V2i operator-() const { return {-x, -y}; }
    V2i operator*(const Int& k) const { return {x * k, y * k}; }
    bool operator==(const V2i& o) const { return x == o.x && y == o.y; }
    bool operator!=(const V2i& o) const { return !(*this == o); }
    bool operator<(const V2i& o) const { return x != o.x ? x < o.x : y < o.y; }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline Int cross(const V2i& a, const V2i& b) { return a.x * b.y - a.y * b.x; }

/// gcd of the coordinates; 0 for the zero vector.
inline Int content(const V2i& v) { return int_gcd(v.x, v.y); }

inline bool is_primitive(const V2i& v) { return content(v) == 1; }

// 2d rational vectors (positions, displacements)

struct V2q {
    Rat x{0}, y{0};

    V2q() = default;
    V2q(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit V2q(const V2i& v) : x(Rat(v.x)), y(Rat(v.y)) {}

    V2q operator+(const V2q& o) const { return {x + o.x, y + o.y}; }
    V2q operator-(const V2q& o) const { return {x - o.x, y - o.y}; }
    V2q operator-() const { return {-x, -y}; }
    V2q operator*(const Rat& k) const { return {x * k, y * k}; }
    bool operator==(const V2q& o) const { return x == o.x && y == o.y; }
    bool operator!=(const V2q& o) const { return !(*this == o); }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline Rat cross(const V2q& a, const V2q& b) { return a.x * b.y - a.y * b.x; }

// ---------------------------------------------------------------------------
// 2x2 matrices

struct M2i {
    // row-major: [[a,b],[c,d]]
    Int a{0}, b{0}, c{0}, d{0};

    M2i() = default;
    M2i(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    M2i(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {}

    static M2i identity() { return {1, 0, 0, 1}; }

    Int det() const { return a * d - b * c; }
    M2i transpose() const { return {a, c, b, d}; }
    M2i operator+(const M2i& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    M2i operator-(const M2i& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    M2i operator*(const Int& k) const { return {a * k, b * k, c * k, d * k}; }
    bool operator==(const M2i& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const M2i& o) const { return !(*this == o); }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    V2i col(int j) const { return j == 0 ? V2i{a, c} : V2i{b, d}; }
    V2i apply(const V2i& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

/// Rank-one update u * w^T, the holonomy contribution of one edge.
inline M2i outer(const V2i& u, const V2i& w) {
    return {u.x * w.x, u.x * w.y, u.y * w.x, u.y * w.y};
}

struct M2q {
    Rat a{0}, b{0}, c{0}, d{0};

    M2q() = default;
    M2q(Rat a_, Rat b_, Rat c_, Rat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    explicit M2q(const M2i& m) : a(Rat(m.a)), b(Rat(m.b)), c(Rat(m.c)), d(Rat(m.d)) {}

    Rat det() const { return a * d - b * c; }
    M2q transpose() const { return {a, c, b, d}; }
    bool is_symmetric() const { return b == c; }
    bool operator==(const M2q& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

    V2q apply(const V2q& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    V2q apply(const V2i& v) const { return apply(V2q(v)); }

    M2q inverse() const {
        Rat dt = det();
        if (dt == 0) throw std::domain_error("singular 2x2 matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    M2q operator*(const M2q& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

inline M2q operator*(const M2q& m, const M2i& n) { return m * M2q(n); }
inline M2q operator*(const M2i& m, const M2q& n) { return M2q(m) * n; }

/// Solve [col0 | col1] * (x, y)^T = rhs over the rationals.
/// Returns nullopt when the columns are linearly dependent.
inline std::optional<V2q> solve2x2(const V2q& col0, const V2q& col1, const V2q& rhs) {
    Rat dt = cross(col0, col1);
    if (dt == 0) return std::nullopt;
    Rat x = cross(rhs, col1) / dt;
    Rat y = cross(col0, rhs) / dt;
    return V2q{x, y};
}

inline std::optional<V2q> solve2x2(const V2i& col0, const V2i& col1, const V2q& rhs) {
    return solve2x2(V2q(col0), V2q(col1), rhs);
}

// ---------------------------------------------------------------------------
// Deterministic RNG (SplitMix64): identical streams on every platform.

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi] inclusive.
    long next_range(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace trop
