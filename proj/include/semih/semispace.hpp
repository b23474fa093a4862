#pragma once

#include "semih/linalg.hpp"
#include "semih/types.hpp"

#include <memory>

namespace semih {

/// Operator-class membership relative to a fixed weight A. The chain
/// in_BA => in_BA_half => in_BA_upper always holds; at finite dimension
/// in_BA_upper is identically true and in_BA coincides with in_BA_half
/// (the range of A equals the range of A^{1/2}).
struct MembershipClass {
  bool in_BA_upper = true;
  bool in_BA_half = false;
  bool in_BA = false;
};

/// The semi-Hilbertian structure induced by a PSD weight A: its
/// eigenbasis, rank, square root, pseudoinverses and range projector,
/// all computed once at construction.
///
/// U's first r columns span R(A) and pair with the positive eigenvalues
/// sigma (descending); the trailing columns span N(A).
struct SemiSpace {
  Eigen::Index n = 0;
  CMatrix A;
  Eigen::Index r = 0;
  CMatrix U;
  RVector sigma;      // positive eigenvalues, descending, length r
  CMatrix A_half;     // A^{1/2}
  CMatrix A_dag;      // Moore-Penrose inverse of A
  CMatrix A_half_dag; // Moore-Penrose inverse of A^{1/2}
  CMatrix P;          // orthogonal projector onto R(A)
  ToleranceConfig cfg;

  double norm_A() const { return sigma.size() ? sigma(0) : 0.0; }

  /// U* x, i.e. coordinates of x in the eigenbasis of A.
  CVector to_eigenbasis(const CVector& x) const { return U.adjoint() * x; }

  /// U* M U.
  CMatrix conjugate_to_eigenbasis(const CMatrix& m) const {
    return U.adjoint() * m * U;
  }

  /// U [B 0; 0 0] U* for an r x r block B acting on R(A).
  CMatrix embed_on_range(const CMatrix& block) const;
};

using SemiSpacePtr = std::shared_ptr<const SemiSpace>;

/// Validates A (Hermitian, PSD within slack, nonzero, condition number on
/// its range below 1e8) and builds the derived structure.
SemiSpacePtr build_space(const CMatrix& A, const ToleranceConfig& cfg = {});

/// Builds the structure from a known eigenbasis instead of re-decomposing:
/// A = U diag(evals) U* with U unitary and evals >= 0 in any order. Used by
/// the tensor-product construction, where the Kronecker eigenbasis is exact.
SemiSpacePtr build_space_from_eigenbasis(const CMatrix& U, const RVector& evals,
                                         const ToleranceConfig& cfg = {});

/// Semi-inner product <x, y>_A = <Ax, y>, conjugate-linear in y.
Complex a_inner(const SemiSpace& sp, const CVector& x, const CVector& y);

/// Seminorm |x|_A = <x, x>_A^{1/2}.
double a_seminorm(const SemiSpace& sp, const CVector& x);

/// x / |x|_A. Vectors in N(A) (|x|_A < rank_rel |x|) cannot be
/// A-normalized and are rejected.
CVector a_normalize(const SemiSpace& sp, const CVector& x);

/// Range inclusion R(X) within R(Y), decided by the projector residual
/// |(I - Y Y+) X| <= set_match (1 + |X|).
bool range_included(const CMatrix& X, const CMatrix& Y, const ToleranceConfig& cfg);

/// Decides which adjoint classes T belongs to relative to sp.
MembershipClass membership(const SemiSpace& sp, const CMatrix& T);

/// Douglas reduced solution D of E1 X = E2: the unique solution with
/// R(D) inside the closure of R(E1*). Requires R(E2) within R(E1).
CMatrix reduced_solution(const CMatrix& E1, const CMatrix& E2, const ToleranceConfig& cfg);

} // namespace semih
