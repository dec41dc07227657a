#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <vector>

#include "opow/matrix.hpp"

namespace opow {

// Eigenvalues (ascending) and an orthonormal eigenbasis of a Hermitian matrix.
// Columns of `eigenvectors` pair with `eigenvalues` index-wise, so
// V diag(lambda) V* reconstructs the source matrix.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;
};

namespace detail {

inline double off_diagonal_norm(const CMatrix& m) {
    double s = 0.0;
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic Jacobi with complex (Hermitian) plane rotations.  Deterministic:
// pivots are visited in fixed row-major order, so a given input always
// produces the same decomposition bit for bit.
inline SpectralDecomposition hermitian_eigendecompose(const CMatrix& a, const Tolerances& tol = {}) {
    if (!is_hermitian(a, tol)) throw NotHermitian();

    const int n = a.dim();
    CMatrix m = hermitian_part(a);  // exact conjugate symmetry for the sweep updates
    CMatrix v = CMatrix::identity(n);
    const double anorm = frobenius_norm(m);

    // Sweep until the off-diagonal mass reaches the rounding floor; the
    // looser tol.recon bound below only decides the failure case.
    const double target = 50.0 * DBL_EPSILON * anorm;

    double off = detail::off_diagonal_norm(m);
    for (int sweep = 0; sweep < tol.max_sweeps && off > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = m(p, q);
                const double beta = std::abs(apq);
                if (beta == 0.0) continue;

                // Unitary 2x2 that annihilates m(p,q): a real Jacobi rotation
                // composed with the phase of the pivot.
                const double phi = std::arg(apq);
                const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * beta);
                const double den = std::abs(tau) + std::sqrt(1.0 + tau * tau);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / den;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex eip = std::polar(1.0, phi);
                const Complex eim = std::conj(eip);

                // columns p,q <- (M V2), rows p,q <- (V2* M)
                for (int r = 0; r < n; ++r) {
                    const Complex mp = m(r, p), mq = m(r, q);
                    m(r, p) = c * mp - s * eim * mq;
                    m(r, q) = s * mp + c * eim * mq;
                }
                for (int r = 0; r < n; ++r) {
                    const Complex mp = m(p, r), mq = m(q, r);
                    m(p, r) = c * mp - s * eip * mq;
                    m(q, r) = s * mp + c * eip * mq;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();

                for (int r = 0; r < n; ++r) {
                    const Complex vp = v(r, p), vq = v(r, q);
                    v(r, p) = c * vp - s * eim * vq;
                    v(r, q) = s * vp + c * eim * vq;
                }
            }
        }
        off = detail::off_diagonal_norm(m);
    }

    if (off > tol.recon * anorm) throw NoConvergence("jacobi sweeps exhausted");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });

    SpectralDecomposition d{std::vector<double>(n), CMatrix(n)};
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[k] = m(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) d.eigenvectors(r, k) = v(r, order[k]);
    }
    return d;
}

// Largest singular value: sqrt of the top eigenvalue of A*A.  For Hermitian
// inputs this equals max |lambda_i|.
inline double operator_norm(const CMatrix& a, const Tolerances& tol = {}) {
    const auto d = hermitian_eigendecompose(adjoint(a) * a, tol);
    return std::sqrt(std::max(0.0, d.eigenvalues.back()));
}

// Loewner order: A <= B iff B - A has no eigenvalue below -psd * max(1, ||B-A||_F).
inline bool loewner_leq(const CMatrix& a, const CMatrix& b, const Tolerances& tol = {}) {
    a.require_same_dim(b);
    if (!is_hermitian(a, tol) || !is_hermitian(b, tol)) throw NotHermitian();
    const CMatrix d = b - a;
    const auto dec = hermitian_eigendecompose(d, tol);
    return dec.eigenvalues.front() >= -tol.psd * std::max(1.0, frobenius_norm(d));
}

// Hermitian with strictly positive spectrum: min eigenvalue must clear
// psd * max(1, ||A||_F), which encodes "0 not in sigma(A)".
inline bool is_positive_definite(const CMatrix& a, const Tolerances& tol = {}) {
    if (!is_hermitian(a, tol)) return false;
    const auto d = hermitian_eigendecompose(a, tol);
    return d.eigenvalues.front() > tol.psd * std::max(1.0, frobenius_norm(a));
}

}  // namespace opow
