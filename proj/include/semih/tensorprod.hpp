#pragma once

#include "semih/spectra.hpp"

#include <string>

namespace semih {

/// Standard Kronecker product: entry (i,j) of X scales the (i,j) block
/// copy of Y, row-major block convention.
CMatrix kron(const CMatrix& X, const CMatrix& Y);

/// Two factor operators together with the product structure over
/// A1 (x) A2. The product space reuses kron(U1, U2) as its eigenbasis, so
/// the compression of T1 (x) T2 is exactly a permutation conjugate of
/// kron(M1, M2).
struct TensorInstance {
  SemiSpacePtr sp1, sp2, spK;
  SemiOperator op1, op2, opK;
};

TensorInstance tensor_instance(const SemiOperator& op1, const SemiOperator& op2);

struct TensorCheck {
  bool pass = true;
  double worst = 0.0; // largest distance observed
  double tol = 0.0;
  std::string detail;
};

/// Every product lambda1 * lambda2 of factor approximate-spectrum values
/// lies in the approximate spectrum of the product operator.
TensorCheck check_product_inclusion(const TensorInstance& ti);

/// sigma_{A1 (x) A2}(T1 (x) I) within sigma_{A1}(T1) (and symmetrically);
/// when the two factor weights coincide, full set equality for both.
TensorCheck check_factor_inclusions(const TensorInstance& ti);

} // namespace semih
