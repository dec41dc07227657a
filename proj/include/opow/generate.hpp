#pragma once

#include <stdexcept>
#include <vector>

#include "opow/eigen.hpp"
#include "opow/rng.hpp"

namespace opow {

enum class MatrixKind { hermitian, positive_definite, commuting_family, skew_adjoint, general };

// Seeded recipe for one random matrix instance (or a commuting family).
struct MatrixGenSpec {
    int dim = 2;  // [2, 8]
    std::uint64_t seed = 0;
    MatrixKind kind = MatrixKind::hermitian;
    int family_size = 1;  // commuting_family only
    double spectrum_lo = -1.0;
    double spectrum_hi = 1.0;

    void validate() const {
        if (dim < 2 || dim > 8) throw std::invalid_argument("gen: dim must be in [2, 8]");
        if (!(spectrum_lo < spectrum_hi)) throw std::invalid_argument("gen: spectrum_lo must be < spectrum_hi");
        if (kind == MatrixKind::positive_definite && !(spectrum_lo > 0))
            throw std::invalid_argument("gen: positive_definite needs spectrum_lo > 0");
        if (kind == MatrixKind::commuting_family && family_size < 1)
            throw std::invalid_argument("gen: family_size must be >= 1");
    }
};

// iid standard-normal complex entries
inline CMatrix random_general(SplitMix64& rng, int n) {
    CMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.cnormal();
    return g;
}

inline CMatrix random_hermitian(SplitMix64& rng, int n) {
    return hermitian_part(random_general(rng, n));
}

// Modified Gram-Schmidt orthonormalization of a random complex matrix.
// Near-dependent columns are redrawn, so the result is always unitary.
inline CMatrix random_unitary(SplitMix64& rng, int n) {
    CMatrix v = random_general(rng, n);
    for (int j = 0; j < n; ++j) {
        for (;;) {
            for (int k = 0; k < j; ++k) {
                Complex dot = 0.0;
                for (int r = 0; r < n; ++r) dot += std::conj(v(r, k)) * v(r, j);
                for (int r = 0; r < n; ++r) v(r, j) -= dot * v(r, k);
            }
            double nrm = 0.0;
            for (int r = 0; r < n; ++r) nrm += std::norm(v(r, j));
            nrm = std::sqrt(nrm);
            if (nrm > 1e-6) {
                for (int r = 0; r < n; ++r) v(r, j) /= nrm;
                break;
            }
            for (int r = 0; r < n; ++r) v(r, j) = rng.cnormal();
        }
    }
    return v;
}

// V diag(values) V* for a real spectrum: Hermitian with prescribed eigenvalues.
inline CMatrix matrix_from_spectrum(const CMatrix& v, const std::vector<double>& lam) {
    const int n = v.dim();
    CMatrix w = v;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w(i, j) *= lam[j];
    return w * adjoint(v);
}

// V diag(values) V* for a complex spectrum: a normal matrix commuting with
// everything else built on the same basis.
inline CMatrix matrix_from_complex_spectrum(const CMatrix& v, const std::vector<Complex>& lam) {
    const int n = v.dim();
    CMatrix w = v;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w(i, j) *= lam[j];
    return w * adjoint(v);
}

inline std::vector<double> uniform_spectrum(SplitMix64& rng, int n, double lo, double hi) {
    std::vector<double> lam(n);
    for (auto& x : lam) x = rng.uniform(lo, hi);
    return lam;
}

// Deterministic sampler for each MatrixKind.  Always returns family_size
// matrices for commuting_family and exactly one otherwise.
inline std::vector<CMatrix> gen(const MatrixGenSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    const int n = spec.dim;
    switch (spec.kind) {
        case MatrixKind::hermitian:
            return {random_hermitian(rng, n)};
        case MatrixKind::skew_adjoint: {
            const CMatrix g = random_general(rng, n);
            return {Complex(0.5, 0.0) * (g - adjoint(g))};
        }
        case MatrixKind::general:
            return {random_general(rng, n)};
        case MatrixKind::positive_definite: {
            const CMatrix v = random_unitary(rng, n);
            return {matrix_from_spectrum(v, uniform_spectrum(rng, n, spec.spectrum_lo, spec.spectrum_hi))};
        }
        case MatrixKind::commuting_family: {
            const CMatrix v = random_unitary(rng, n);
            std::vector<CMatrix> fam;
            fam.reserve(spec.family_size);
            for (int k = 0; k < spec.family_size; ++k)
                fam.push_back(matrix_from_spectrum(v, uniform_spectrum(rng, n, spec.spectrum_lo, spec.spectrum_hi)));
            return fam;
        }
    }
    throw std::invalid_argument("gen: unknown kind");
}

inline CMatrix gen_one(const MatrixGenSpec& spec) { return gen(spec)[0]; }

}  // namespace opow
