// Dense integer matrices with the exact normal-form machinery the lattice
// computations need: Smith normal form, maximal-minor gcd, exact rank.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "numeric.hpp"

namespace trop {

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Int(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("ragged matrix rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SnfResult {
    std::vector<Int> divisors;  // nonzero elementary divisors, d_i | d_{i+1}
    int rank = 0;

    Int divisor_product() const {
        Int p = 1;
        for (const Int& d : divisors) p *= d;
        return p;
    }
};

/// Smith normal form by unimodular row/column moves. Pivots on the smallest
/// nonzero entry of the working submatrix to limit coefficient growth.
inline SnfResult smith_normal_form(IntMatrix m) {
    const int R = m.rows(), C = m.cols();
    SnfResult res;
    int k = 0;
    while (k < R && k < C) {
        // locate smallest nonzero |entry| in the submatrix
        int pi = -1, pj = -1;
        for (int i = k; i < R; ++i)
            for (int j = k; j < C; ++j) {
                if (m(i, j) == 0) continue;
                if (pi < 0 || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // submatrix is zero
        if (pi != k)
            for (int j = 0; j < C; ++j) swap(m(k, j), m(pi, j));
        if (pj != k)
            for (int i = 0; i < R; ++i) swap(m(i, k), m(i, pj));

        bool stable = false;
        while (!stable) {
            stable = true;
            // clear column k
            for (int i = k + 1; i < R; ++i) {
                if (m(i, k) == 0) continue;
                Int q = m(i, k) / m(k, k);  // truncated division keeps remainders small
                if (q != 0)
                    for (int j = k; j < C; ++j) m(i, j) -= q * m(k, j);
                if (m(i, k) != 0) {
                    for (int j = k; j < C; ++j) swap(m(k, j), m(i, j));
                    stable = false;
                }
            }
            if (!stable) continue;
            // clear row k
            for (int j = k + 1; j < C; ++j) {
                if (m(k, j) == 0) continue;
                Int q = m(k, j) / m(k, k);
                if (q != 0)
                    for (int i = k; i < R; ++i) m(i, j) -= q * m(i, k);
                if (m(k, j) != 0) {
                    for (int i = k; i < R; ++i) swap(m(i, k), m(i, j));
                    stable = false;
                }
            }
            if (!stable) continue;
            // enforce d_k | (everything below-right)
            for (int i = k + 1; i < R && stable; ++i)
                for (int j = k + 1; j < C && stable; ++j)
                    if (m(i, j) % m(k, k) != 0) {
                        for (int jj = k; jj < C; ++jj) m(k, jj) += m(i, jj);
                        stable = false;
                    }
        }
        res.divisors.push_back(abs(m(k, k)));
        ++k;
    }
    res.rank = static_cast<int>(res.divisors.size());
    return res;
}

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
inline Int bareiss_det(IntMatrix m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Exact rank (== rank over Q).
inline int int_rank(IntMatrix m) {
    const int R = m.rows(), C = m.cols();
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int p = -1;
        for (int i = rank; i < R; ++i)
            if (m(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != rank)
            for (int j = 0; j < C; ++j) swap(m(rank, j), m(p, j));
        for (int i = rank + 1; i < R; ++i) {
            if (m(i, col) == 0) continue;
            Int g = int_gcd(m(i, col), m(rank, col));
            Int fi = m(rank, col) / g, fr = m(i, col) / g;
            for (int j = col; j < C; ++j) m(i, j) = m(i, j) * fi - m(rank, j) * fr;
        }
        ++rank;
    }
    return rank;
}

/// gcd of all maximal (cols x cols after orienting rows >= cols) minors,
/// by direct enumeration. 0 when every maximal minor vanishes.
inline Int maximal_minor_gcd(const IntMatrix& m_in) {
    IntMatrix m = m_in.rows() >= m_in.cols() ? m_in : m_in.transpose();
    const int R = m.rows(), C = m.cols();
    if (C == 0) return 1;
    std::vector<int> pick(C);
    for (int i = 0; i < C; ++i) pick[i] = i;
    Int g = 0;
    while (true) {
        IntMatrix sub(C, C);
        for (int i = 0; i < C; ++i)
            for (int j = 0; j < C; ++j) sub(i, j) = m(pick[i], j);
        g = int_gcd(g, bareiss_det(std::move(sub)));
        if (g == 1) return g;
        // next combination
        int i = C - 1;
        while (i >= 0 && pick[i] == R - C + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < C; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

}  // namespace trop
