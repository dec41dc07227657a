#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "opow/eigen.hpp"

namespace opow {

// A real scalar function applied eigenvalue-wise through the spectral
// decomposition, together with its interval of validity.
struct FnOnSpectrum {
    std::function<double(double)> fn;
    std::string name = "f";
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    bool contains(double x) const {
        if (lo_open ? x <= lo : x < lo) return false;
        if (hi_open ? x >= hi : x > hi) return false;
        return true;
    }
};

inline FnOnSpectrum fn_identity() { return {[](double x) { return x; }, "id"}; }
inline FnOnSpectrum fn_exp() { return {[](double x) { return std::exp(x); }, "exp"}; }
inline FnOnSpectrum fn_log() { return {[](double x) { return std::log(x); }, "log", 0.0, std::numeric_limits<double>::infinity(), true, false}; }
inline FnOnSpectrum fn_sqrt() { return {[](double x) { return std::sqrt(x); }, "sqrt", 0.0}; }
inline FnOnSpectrum fn_reciprocal() { return {[](double x) { return 1.0 / x; }, "reciprocal", 0.0, std::numeric_limits<double>::infinity(), true, false}; }
inline FnOnSpectrum fn_power(double alpha) {
    return {[alpha](double x) { return std::pow(x, alpha); }, "power", 0.0,
            std::numeric_limits<double>::infinity(), true, false};
}

// f(H) = V diag(f(lambda_i)) V* for Hermitian H.
inline CMatrix apply_spectral(const FnOnSpectrum& f, const CMatrix& h, const Tolerances& tol = {}) {
    if (!is_hermitian(h, tol)) throw NotHermitian();
    const auto d = hermitian_eigendecompose(h, tol);
    for (double lam : d.eigenvalues)
        if (!f.contains(lam))
            throw SpectrumOutsideDomain("eigenvalue outside domain of " + f.name);
    const int n = h.dim();
    CMatrix w = d.eigenvectors;
    for (int j = 0; j < n; ++j) {
        const double flam = f.fn(d.eigenvalues[j]);
        for (int i = 0; i < n; ++i) w(i, j) *= flam;
    }
    return w * adjoint(d.eigenvectors);
}

// e^A for arbitrary complex square A by scaling and squaring: halve until
// ||A||_F/2^s <= 1/2, Taylor-sum, then square s times.  Needed because
// B log A is in general not normal, so no spectral route exists.
inline CMatrix exp_general(const CMatrix& a, const Tolerances& tol = {}) {
    const int n = a.dim();
    const double nrm = frobenius_norm(a);
    if (!std::isfinite(nrm)) throw NoConvergence("non-finite input to exp");

    int s = 0;
    for (double r = nrm; r > 0.5; r *= 0.5) ++s;
    const CMatrix x = a * Complex(std::ldexp(1.0, -s), 0.0);

    CMatrix sum = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    constexpr int kMaxTerms = 200;
    int k = 1;
    for (; k <= kMaxTerms; ++k) {
        term = term * x * Complex(1.0 / k, 0.0);
        sum += term;
        if (frobenius_norm(term) < tol.series * frobenius_norm(sum)) break;
    }
    if (k > kMaxTerms) throw NoConvergence("exp series did not settle");

    for (int i = 0; i < s; ++i) sum = sum * sum;
    if (!sum.all_finite()) throw NoConvergence("exp overflowed");
    return sum;
}

// e^H for Hermitian H through the eigendecomposition.
inline CMatrix exp_spectral(const CMatrix& h, const Tolerances& tol = {}) {
    return apply_spectral(fn_exp(), h, tol);
}

// Mercator series log A = sum (-1)^{n-1} (A-I)^n / n, valid for ||A-I|| < 1.
// Refused beyond 0.95: the geometric tail still closes in ~700 terms at
// r = 0.95, after that convergence is impractically slow.
inline CMatrix log_series(const CMatrix& a, const Tolerances& tol = {}) {
    const int n = a.dim();
    const CMatrix d = a - CMatrix::identity(n);
    if (operator_norm(d, tol) > 0.95) throw OutOfConvergenceRegion();

    CMatrix sum(n);
    CMatrix power = d;
    constexpr int kMaxTerms = 5000;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const CMatrix term = power * Complex((k % 2 ? 1.0 : -1.0) / k, 0.0);
        sum += term;
        if (frobenius_norm(term) < tol.series * std::max(1.0, frobenius_norm(sum))) return sum;
        power = power * d;
    }
    throw NoConvergence("log series did not settle");
}

// log A through the spectral decomposition; defined for positive definite A
// only, and always Hermitian.
inline CMatrix log_spectral(const CMatrix& a, const Tolerances& tol = {}) {
    if (!is_hermitian(a, tol)) throw NotPositiveDefinite();
    const auto d = hermitian_eigendecompose(a, tol);
    if (d.eigenvalues.front() <= tol.psd * std::max(1.0, frobenius_norm(a)))
        throw NotPositiveDefinite();
    const int n = a.dim();
    CMatrix w = d.eigenvectors;
    for (int j = 0; j < n; ++j) {
        const double lg = std::log(d.eigenvalues[j]);
        for (int i = 0; i < n; ++i) w(i, j) *= lg;
    }
    return w * adjoint(d.eigenvectors);
}

}  // namespace opow
