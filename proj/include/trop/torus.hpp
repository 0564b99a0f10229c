// Tropical tori N_R/Lambda with rational period matrix, curve classes,
// the realizability criterion, and fundamental-domain reduction.
#pragma once

#include <stdexcept>
#include <vector>

#include "intmatrix.hpp"
#include "numeric.hpp"

namespace trop {

/// A point of the torus in Lambda-coordinates, both entries in [0,1).
struct TorusPoint {
    Rat x{0}, y{0};

    TorusPoint() = default;
    TorusPoint(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {
        if (x < 0 || x >= 1 || y < 0 || y >= 1)
            throw std::domain_error("torus point coordinates must lie in [0,1)");
    }

    bool operator==(const TorusPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const TorusPoint& o) const { return !(*this == o); }
    bool operator<(const TorusPoint& o) const { return x != o.x ? x < o.x : y < o.y; }

    V2q as_vec() const { return {x, y}; }
};

/// The quotient N_R / Lambda. `period` is the matrix S of the inclusion
/// Lambda -> N_R; its columns are the Lambda-basis written in N-coordinates.
class TropicalTorus {
  public:
    explicit TropicalTorus(M2q period) : s_(std::move(period)) {
        if (s_.det() == 0) throw std::domain_error("period matrix must be invertible");
        s_inv_ = s_.inverse();
    }

    const M2q& period() const { return s_; }
    const M2q& period_inverse() const { return s_inv_; }

    /// N-coordinates of a Lambda-coordinate vector.
    V2q to_n(const V2q& lambda_coords) const { return s_.apply(lambda_coords); }
    V2q to_n(const V2i& lambda_coords) const { return s_.apply(V2q(lambda_coords)); }

    /// Lambda-coordinates of an N-coordinate vector.
    V2q to_lambda(const V2q& n_coords) const { return s_inv_.apply(n_coords); }

    bool operator==(const TropicalTorus& o) const { return s_ == o.s_; }

  private:
    M2q s_;
    M2q s_inv_;
};

/// An H_{1,1} class, an integer matrix of a map Lambda^* -> N.
struct CurveClass {
    M2i m;

    CurveClass() = default;
    explicit CurveClass(M2i mm) : m(std::move(mm)) {}
    CurveClass(long a, long b, long c, long d) : m(a, b, c, d) {}

    bool operator==(const CurveClass& o) const { return m == o.m; }
    bool operator!=(const CurveClass& o) const { return !(*this == o); }
    bool is_zero() const { return m.is_zero(); }
};

/// A class is realizable by a curve iff C S^T is symmetric.
inline bool is_realizable(const CurveClass& c, const TropicalTorus& t) {
    return (M2q(c.m) * t.period().transpose()).is_symmetric();
}

/// delta(C): the largest integer dividing the class. Zero class is an error.
inline Int class_integral_length(const CurveClass& c) {
    if (c.is_zero()) throw std::domain_error("integral length of the zero class");
    return int_gcd(int_gcd(c.m.a, c.m.b), int_gcd(c.m.c, c.m.d));
}

/// Rank of the integer solution lattice {C : C S^T symmetric}. The symmetry
/// condition is a single rational linear functional on the four entries of C,
/// so over a rational period matrix the rank is 4 minus the rank of that
/// functional (3 whenever S != 0).
inline int realizable_lattice_rank(const TropicalTorus& t) {
    const M2q& s = t.period();
    // (C S^T)_{12} - (C S^T)_{21} = c11 s21 + c12 s22 - c21 s11 - c22 s12
    Rat coeff[4] = {s.c, s.d, -s.a, -s.b};
    Int lcm = 1;
    for (const Rat& q : coeff) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        lcm = l;
    }
    IntMatrix row(1, 4);
    for (int j = 0; j < 4; ++j) {
        Rat scaled = coeff[j] * Rat(lcm);
        row(0, j) = scaled.get_num();
    }
    return 4 - int_rank(row);
}

/// Write p (N-coordinates) as S * (coords + winding) with coords in [0,1)^2.
inline std::pair<TorusPoint, V2i> reduce_to_fundamental(const V2q& p, const TropicalTorus& t) {
    V2q lam = t.to_lambda(p);
    Int wx = floor_rat(lam.x), wy = floor_rat(lam.y);
    TorusPoint tp(lam.x - Rat(wx), lam.y - Rat(wy));
    return {tp, V2i{wx, wy}};
}

/// Deterministic pseudo-random point configuration: coordinates are
/// num / 1048573 with num drawn from a seeded SplitMix64 stream.
inline std::vector<TorusPoint> sample_generic_points(const TropicalTorus&, int g,
                                                     std::uint64_t seed) {
    if (g < 1) throw std::domain_error("need at least one point");
    static constexpr std::uint64_t kPrime = 1048573;  // prime close to 2^20
    SplitMix64 rng(seed);
    std::vector<TorusPoint> pts;
    pts.reserve(g);
    for (int i = 0; i < g; ++i) {
        Rat x(static_cast<unsigned long>(rng.next_below(kPrime)),
              static_cast<unsigned long>(kPrime));
        Rat y(static_cast<unsigned long>(rng.next_below(kPrime)),
              static_cast<unsigned long>(kPrime));
        x.canonicalize();
        y.canonicalize();
        pts.emplace_back(x, y);
    }
    return pts;
}

}  // namespace trop
