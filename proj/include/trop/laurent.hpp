// Symmetric Laurent polynomials in q^{1/2} with integer coefficients.
// Exponents are stored doubled, so q^{3/2} lives at key 3 and q^{-1} at key -2;
// every operation is then plain integer arithmetic.
#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "numeric.hpp"

namespace trop {

class Laurent {
  public:
    Laurent() = default;

    static Laurent zero() { return Laurent(); }

    static Laurent constant(Int v) {
        Laurent p;
        p.set(0, std::move(v));
        return p;
    }

    /// Monomial coeff * q^{half/2}.
    static Laurent monomial(Int coeff, int half) {
        Laurent p;
        p.set(half, std::move(coeff));
        return p;
    }

    const std::map<int, Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }

    Int coeff(int half) const {
        auto it = c_.find(half);
        return it == c_.end() ? Int(0) : it->second;
    }

    void set(int half, Int v) {
        if (v == 0)
            c_.erase(half);
        else
            c_[half] = std::move(v);
    }

    void add(int half, const Int& v) {
        auto it = c_.find(half);
        if (it == c_.end()) {
            if (v != 0) c_[half] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (const auto& [e, v] : o.c_) r.add(e, v);
        return r;
    }

    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_) r.add(e1 + e2, v1 * v2);
        return r;
    }

    Laurent operator*(const Int& k) const {
        Laurent r;
        if (k == 0) return r;
        for (const auto& [e, v] : c_) r.c_[e] = v * k;
        return r;
    }

    /// Sum of coefficients, i.e. specialization at q = 1.
    Int eval_one() const {
        Int s = 0;
        for (const auto& [e, v] : c_) s += v;
        return s;
    }

    /// q -> q^m. Requires m >= 1.
    Laurent substitute(long m) const {
        if (m < 1) throw std::domain_error("substitute: exponent factor must be >= 1");
        Laurent r;
        for (const auto& [e, v] : c_) r.c_[e * static_cast<int>(m)] = v;
        return r;
    }

    bool symmetric() const {
        for (const auto& [e, v] : c_)
            if (coeff(-e) != v) return false;
        return true;
    }

    Laurent pow(unsigned long n) const {
        Laurent r = constant(1);
        for (unsigned long i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

    /// Human-readable form, highest exponent first: "q^3 + 2*q^2 + ... + q^-3".
    std::string pretty() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            Int v = it->second;
            if (first) {
                if (v < 0) os << "-";
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            first = false;
            Int av = abs(v);
            int e = it->first;
            if (e == 0) {
                os << av.get_str();
            } else {
                if (av != 1) os << av.get_str() << "*";
                os << "q";
                if (e != 2) {
                    os << "^";
                    if (e % 2 == 0)
                        os << e / 2;
                    else
                        os << e << "/2";
                }
            }
        }
        return os.str();
    }

  private:
    std::map<int, Int> c_;  // doubled exponent -> nonzero coefficient
};

/// Quantum integer [a]_q = q^{(a-1)/2} + q^{(a-3)/2} + ... + q^{-(a-1)/2}.
inline Laurent quantum_integer(long a) {
    if (a <= 0) throw std::domain_error("quantum_integer: argument must be positive");
    Laurent p;
    for (long k = 0; k < a; ++k) p.set(static_cast<int>(2 * k - (a - 1)), 1);
    return p;
}

}  // namespace trop
