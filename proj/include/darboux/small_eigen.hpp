#pragma once

#include <vector>

#include "darboux/homog.hpp"

namespace darboux {

struct EigenPair {
  Complex value;
  CVec4 vector;     // unit 2-norm
  double residual;  // ||C v - value v||
};

/// Eigen-decomposition of a 4x4 complex matrix: Householder reduction to
/// Hessenberg form, then single-shift complex QR with Wilkinson shifts and
/// deflation. Eigenvectors come from back substitution on the Schur form.
///
/// Every returned pair satisfies residual <= tol * ||C||_F. Throws
/// NumericalError if the QR sweep has not converged after max_iter iterations
/// or a residual cannot be brought under the bound.
std::vector<EigenPair> eig_small(const CMat4& C, double tol = 1e-12, int max_iter = 400);

}  // namespace darboux
