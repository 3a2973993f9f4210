#pragma once

#include "gframe/types.hpp"

namespace gframe {

/// Largest singular value; 0 for empty or zero matrices.
double spectral_norm(const Matrix& m);

/// Singular values in descending order.
RealVector singular_values(const Matrix& m);

/// Number of singular values strictly above `rel_tol * sigma_max`.
std::size_t numerical_rank(const Matrix& m, double rel_tol);

Matrix hermitian_part(const Matrix& m);

/// Square root of a Hermitian positive semidefinite matrix via eigendecomposition.
/// Eigenvalues in [-1e-12 * max(1, lambda_max), 0) are clamped to zero; anything
/// more negative throws NotPositiveSemidefinite.
Matrix psd_sqrt(const Matrix& m);

/// Moore-Penrose pseudo-inverse. Singular values at or below
/// max(rows, cols) * eps * sigma_max are treated as zero.
Matrix pseudo_inverse(const Matrix& m);

/// ||m - I||_2 for square m.
double identity_defect(const Matrix& m);

}  // namespace gframe
