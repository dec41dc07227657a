#pragma once

#include <stdexcept>

namespace opow {

// Every numerical threshold used by the library, in one place.
// Relative tolerances are always applied as  tol * max(1, scale)  so the
// zero matrix never produces a vacuous threshold.
struct Tolerances {
    double herm = 1e-10;     // Hermiticity residual bound, relative
    double psd = 1e-9;       // eigenvalue negativity allowance, scaled
    double commute = 1e-9;   // relative commutator bound
    double recon = 1e-10;    // eigendecomposition reconstruction residual
    double series = 1e-16;   // series truncation threshold
    int max_sweeps = 64;     // Jacobi sweep cap

    void validate() const {
        if (!(herm > 0 && psd > 0 && commute > 0 && recon > 0 && series > 0))
            throw std::invalid_argument("tolerances must be positive");
        if (max_sweeps < 1)
            throw std::invalid_argument("max_sweeps must be >= 1");
    }
};

}  // namespace opow
