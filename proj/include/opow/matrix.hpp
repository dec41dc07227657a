#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "opow/errors.hpp"
#include "opow/tolerances.hpp"

namespace opow {

using Complex = std::complex<double>;

// Dense square complex matrix, the universal operand of the library.
// Entries are stored row-major; dimension is fixed at construction (n >= 1).
class CMatrix {
  public:
    explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(check_dim(n)) * n) {}

    CMatrix(int n, std::vector<Complex> entries) : n_(check_dim(n)), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(n_) * n_)
            throw DimensionMismatch("entry count does not match dimension");
    }

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix zero(int n) { return CMatrix(n); }

    int dim() const { return n_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    CMatrix& operator+=(const CMatrix& o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    CMatrix& operator-=(const CMatrix& o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    CMatrix& operator*=(Complex c) {
        for (auto& x : a_) x *= c;
        return *this;
    }

    bool all_finite() const {
        for (const auto& x : a_)
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
        return true;
    }

    void require_same_dim(const CMatrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch();
    }

  private:
    static int check_dim(int n) {
        if (n < 1) throw DimensionMismatch("dimension must be >= 1");
        return n;
    }

    int n_;
    std::vector<Complex> a_;
};

inline CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
inline CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
inline CMatrix operator*(Complex c, CMatrix a) { return a *= c; }
inline CMatrix operator*(CMatrix a, Complex c) { return a *= c; }

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    a.require_same_dim(b);
    const int n = a.dim();
    CMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;  // skip is value-based, deterministic
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// Conjugate transpose.
inline CMatrix adjoint(const CMatrix& a) {
    const int n = a.dim();
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

inline double max_abs_entry(const CMatrix& a) {
    double m = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

// (A + A*)/2; projects onto the self-adjoint part.
inline CMatrix hermitian_part(const CMatrix& a) {
    const int n = a.dim();
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return r;
}

// ||A - A*||_F <= herm * max(1, ||A||_F)
inline bool is_hermitian(const CMatrix& a, const Tolerances& tol = {}) {
    return frobenius_norm(a - adjoint(a)) <= tol.herm * std::max(1.0, frobenius_norm(a));
}

// ||AB - BA||_F <= commute * max(1, ||A||_F ||B||_F)
inline bool commutes(const CMatrix& a, const CMatrix& b, const Tolerances& tol = {}) {
    a.require_same_dim(b);
    const double scale = std::max(1.0, frobenius_norm(a) * frobenius_norm(b));
    return frobenius_norm(a * b - b * a) <= tol.commute * scale;
}

// Commutator residual normalized the same way commutes() thresholds it.
inline double commutator_residual(const CMatrix& a, const CMatrix& b) {
    a.require_same_dim(b);
    const double scale = std::max(1.0, frobenius_norm(a) * frobenius_norm(b));
    return frobenius_norm(a * b - b * a) / scale;
}

// Hermiticity residual normalized the same way is_hermitian() thresholds it.
inline double hermiticity_residual(const CMatrix& a) {
    return frobenius_norm(a - adjoint(a)) / std::max(1.0, frobenius_norm(a));
}

}  // namespace opow
