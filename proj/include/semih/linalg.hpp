#pragma once

#include "semih/types.hpp"

namespace semih {

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
struct HermEig {
  RVector values;
  CMatrix vectors; // unitary, column k pairs with values[k]
};

/// Hermitian eigendecomposition. The input is symmetrized as (M + M*)/2;
/// asymmetry beyond 1e-8 |M| is rejected rather than repaired. Eigenvector
/// phases are canonicalized (largest component real positive) so repeated
/// runs produce identical bases.
HermEig herm_eig(const CMatrix& m);

/// Moore-Penrose pseudoinverse. Singular values below rank_rel * sigma_max
/// are treated as exact zeros; the zero matrix maps to the zero matrix.
CMatrix pinv(const CMatrix& m, const ToleranceConfig& cfg);

/// PSD square root via the eigendecomposition. Eigenvalues in
/// [-psd_slack |M|, 0) are clamped to zero; anything lower is an error.
CMatrix sqrt_psd(const CMatrix& m, const ToleranceConfig& cfg);

/// Numerical rank: number of singular values above rank_rel * sigma_max.
Eigen::Index rank_of(const CMatrix& m, const ToleranceConfig& cfg);

/// Singular values, descending (Jacobi SVD; fine at the target sizes).
RVector singular_values(const CMatrix& m);

/// Spectral norm |M|_2 (largest singular value; 0 for empty matrices).
double norm2(const CMatrix& m);

/// Smallest singular value (0 for empty matrices).
double smallest_sv(const CMatrix& m);

/// Smallest singular value above the rank cutoff; 0 when M is (numerically)
/// the zero matrix.
double smallest_nonzero_sv(const CMatrix& m, const ToleranceConfig& cfg);

/// Eigenvalues of a general square matrix, sorted by (re, im).
CVector eigenvalues_sorted(const CMatrix& m);

} // namespace semih
