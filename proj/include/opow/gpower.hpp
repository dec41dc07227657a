#pragma once

#include <cmath>

#include "opow/matfun.hpp"

namespace opow {

// Relative residual at which two matrices are accepted as "the same" by the
// generalized-power checks (is_root, log_gpow contract).
inline constexpr double kGPowMatchTol = 1e-8;

// A^B together with the diagnostics every caller ends up wanting: the inner
// product B log A, the norm bound e^{||B log A||}, and whether AB = BA held
// at tolerance.  Carrying them here keeps downstream checks consistent.
struct GPowResult {
    CMatrix value;     // A^B = e^{B log A}
    CMatrix b_log_a;   // B log A (in this order; the reverse is a different operator)
    double norm_bound; // e^{||B log A||}, an upper bound for ||A^B||
    bool commuting;    // commutes(A, B) at tolerance
};

// Generalized power A^B = e^{B log A}; A must be positive definite, B is
// arbitrary.  The factor order B * log A is essential: for non-commuting
// inputs e^{(log A) B} is a different matrix.
inline GPowResult gpow(const CMatrix& a, const CMatrix& b, const Tolerances& tol = {}) {
    a.require_same_dim(b);
    const CMatrix log_a = log_spectral(a, tol);  // rejects non-PD inputs
    CMatrix bla = b * log_a;
    CMatrix value = exp_general(bla, tol);
    const double bound = std::exp(operator_norm(bla, tol));
    const bool comm = commutes(a, b, tol);
    return GPowResult{std::move(value), std::move(bla), bound, comm};
}

// Whether A is a root of order B of T, i.e. A^B = T at tolerance.
inline bool is_root(const CMatrix& a, const CMatrix& b, const CMatrix& t,
                    const Tolerances& tol = {}) {
    t.require_same_dim(a);
    const GPowResult g = gpow(a, b, tol);
    return frobenius_norm(g.value - t) <= kGPowMatchTol * std::max(1.0, frobenius_norm(t));
}

// log(A^B), defined when AB = BA and B log A is Hermitian (then A^B is
// positive definite and the result equals B log A).
inline CMatrix log_gpow(const CMatrix& a, const CMatrix& b, const Tolerances& tol = {}) {
    const GPowResult g = gpow(a, b, tol);
    if (!g.commuting) throw NotCommuting();
    if (!is_hermitian(g.b_log_a, tol)) throw NotHermitian("B log A is not hermitian");
    // A^B is provably positive definite here; a NotPositiveDefinite from this
    // call would signal an internal inconsistency.
    return log_spectral(g.value, tol);
}

struct NormCheck {
    bool bound_holds;    // ||A^B|| <= e^{||B log A||} (always expected)
    bool equality_holds; // ||A^B|| = e^{||B log A||}; meaningful when AB=BA, B >= 0
    double lhs;          // ||A^B||
    double rhs;          // e^{||B log A||}
};

// Evaluates both sides of the norm bound.  equality_holds is reported
// unconditionally; deciding whether the equality hypotheses (commutation,
// B positive) were satisfied is the caller's business.
inline NormCheck norm_equality_check(const CMatrix& a, const CMatrix& b,
                                     const Tolerances& tol = {}) {
    const GPowResult g = gpow(a, b, tol);
    const double lhs = operator_norm(g.value, tol);
    const double rhs = g.norm_bound;
    return NormCheck{lhs <= rhs * (1.0 + kGPowMatchTol),
                     std::abs(lhs - rhs) <= kGPowMatchTol * rhs, lhs, rhs};
}

}  // namespace opow
