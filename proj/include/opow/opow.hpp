#pragma once

// Generalized operator powers A^B = e^{B log A} for positive definite A,
// with the matrix-function layer, randomized theorem verifiers, and matrix
// file I/O behind them.

#include "opow/errors.hpp"
#include "opow/tolerances.hpp"
#include "opow/matrix.hpp"
#include "opow/eigen.hpp"
#include "opow/matfun.hpp"
#include "opow/gpower.hpp"
#include "opow/rng.hpp"
#include "opow/generate.hpp"
#include "opow/verify.hpp"
#include "opow/matrix_io.hpp"
