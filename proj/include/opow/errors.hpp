#pragma once

#include <stdexcept>
#include <string>

namespace opow {

// Base class for all library failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text (matrix files) could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

// A documented operation precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

struct DimensionMismatch : PreconditionError {
    DimensionMismatch() : PreconditionError("dimension mismatch") {}
    explicit DimensionMismatch(const std::string& what) : PreconditionError(what) {}
};

struct NotHermitian : PreconditionError {
    NotHermitian() : PreconditionError("not hermitian") {}
    explicit NotHermitian(const std::string& what) : PreconditionError(what) {}
};

struct NotPositiveDefinite : PreconditionError {
    NotPositiveDefinite() : PreconditionError("not positive definite") {}
    explicit NotPositiveDefinite(const std::string& what) : PreconditionError(what) {}
};

struct NotCommuting : PreconditionError {
    NotCommuting() : PreconditionError("not commuting") {}
    explicit NotCommuting(const std::string& what) : PreconditionError(what) {}
};

struct OutOfConvergenceRegion : PreconditionError {
    OutOfConvergenceRegion() : PreconditionError("outside series convergence region") {}
    explicit OutOfConvergenceRegion(const std::string& what) : PreconditionError(what) {}
};

struct SpectrumOutsideDomain : PreconditionError {
    SpectrumOutsideDomain() : PreconditionError("spectrum outside function domain") {}
    explicit SpectrumOutsideDomain(const std::string& what) : PreconditionError(what) {}
};

// An iteration failed to converge (or a result left the finite range).
struct NoConvergence : Error {
    NoConvergence() : Error("no convergence") {}
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

}  // namespace opow
