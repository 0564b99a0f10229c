// Divisor sums, ordered compositions, and the weight-2 Eisenstein coefficient
// series used by the closed-form invariants.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "numeric.hpp"

namespace trop {

/// Sum of the positive divisors of n.
inline Int sigma1(long n) {
    if (n <= 0) throw std::domain_error("sigma1: argument must be positive");
    Int s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += d;
        if (d != n / d) s += n / d;
    }
    return s;
}

inline std::vector<long> divisors_of(long n) {
    std::vector<long> ds;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

/// All ordered tuples of positive integers of the given length summing to n,
/// in lexicographic order. Empty when n < parts.
inline std::vector<std::vector<long>> compositions(long n, long parts) {
    std::vector<std::vector<long>> out;
    if (parts < 1 || n < parts) return out;
    std::vector<long> cur(parts);
    std::function<void(long, long)> rec = [&](long idx, long remaining) {
        if (idx == parts - 1) {
            cur[idx] = remaining;
            out.push_back(cur);
            return;
        }
        long max_here = remaining - (parts - 1 - idx);
        for (long v = 1; v <= max_here; ++v) {
            cur[idx] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, n);
    return out;
}

/// Coefficients [y^0..y^nmax] of D G_2(y) = sum_{m>=1} m sigma1(m) y^m.
inline std::vector<Int> dg2_coefficients(long nmax) {
    std::vector<Int> c(static_cast<std::size_t>(nmax) + 1, Int(0));
    for (long m = 1; m <= nmax; ++m) c[m] = Int(m) * sigma1(m);
    return c;
}

/// Truncated power-series product, keeping degrees <= nmax.
inline std::vector<Int> series_mul(const std::vector<Int>& a, const std::vector<Int>& b,
                                   long nmax) {
    std::vector<Int> r(static_cast<std::size_t>(nmax) + 1, Int(0));
    for (long i = 0; i <= nmax && i < static_cast<long>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; i + j <= nmax && j < static_cast<long>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

inline std::vector<Int> series_pow(const std::vector<Int>& a, long e, long nmax) {
    std::vector<Int> r(static_cast<std::size_t>(nmax) + 1, Int(0));
    r[0] = 1;
    for (long i = 0; i < e; ++i) r = series_mul(r, a, nmax);
    return r;
}

}  // namespace trop
