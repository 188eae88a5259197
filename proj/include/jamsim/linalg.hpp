// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace jamsim {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Complex = std::complex<double>;

// Largest absolute entry of M - M^H, normalized by max(1, largest |entry|).
double hermitian_asymmetry(const CMat& m);

// Symmetrizes away round-off drift after matrix products.
inline CMat hermitize(const CMat& m) { return 0.5 * (m + m.adjoint()); }

// Solves M x = rhs for Hermitian positive definite M via Cholesky.
// A jitter floor of 1e-12 * trace/N is added once (with a warning to stderr)
// if the factorization reports non-positive-definiteness; failure after that
// throws, which in this codebase signals a sigma^2 = 0 misconfiguration.
CMat solve_hpd(const CMat& m, const CMat& rhs);

// Moore-Penrose pseudoinverse via SVD. Singular values below
// rel_cutoff * sigma_max are treated as zero; rel_cutoff <= 0 selects the
// numerical-rank rule max(rows, cols) * eps.
CMat pseudo_inverse(const CMat& m, double rel_cutoff = -1.0);

// Eigenvalues of a Hermitian matrix, ascending.
RVec hermitian_eigenvalues(const CMat& m);

// Count of singular values above tol_rel * sigma_max.
int numerical_rank(const CMat& m, double tol_rel = 1e-9);

// Order-stable summation: recursive pairwise reduction so parallel per-item
// evaluation followed by this sum is reproducible to round-off.
double pairwise_sum(std::span<const double> values);

}  // namespace jamsim
