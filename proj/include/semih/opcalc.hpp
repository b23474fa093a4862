#pragma once

#include "semih/semispace.hpp"

#include <optional>
#include <vector>

namespace semih {

/// A bounded operator T paired with the semi-Hilbertian structure it acts
/// on. Membership and the r x r compression are computed at construction;
/// the object is immutable afterwards.
///
/// The compression M = Sigma^{1/2} (U* T U)_11 Sigma^{-1/2} represents T on
/// R(A) in A's eigenbasis. It realizes the operators the calculus derives
/// from T: T~ and T_c are unitarily equivalent to M, and T_a = M*.
class SemiOperator {
public:
  SemiOperator(SemiSpacePtr space, CMatrix T);

  const SemiSpace& space() const { return *space_; }
  SemiSpacePtr space_ptr() const { return space_; }
  const CMatrix& T() const { return T_; }
  const MembershipClass& cls() const { return cls_; }

  /// T in the eigenbasis of A, U* T U.
  const CMatrix& T_eigenbasis() const { return T_eig_; }

  bool has_compression() const { return M_.has_value(); }

  /// The r x r compression; requires membership in B_{A^{1/2}}.
  const CMatrix& M() const;

  /// Derived operator over the same space.
  SemiOperator derived(CMatrix T) const { return SemiOperator(space_, std::move(T)); }

private:
  SemiSpacePtr space_;
  CMatrix T_;
  MembershipClass cls_;
  CMatrix T_eig_;
  std::optional<CMatrix> M_;
};

/// The compression M (alias of op.M() with the class check spelled out).
CMatrix compress(const SemiOperator& op);

/// A-adjoint T# = A+ T* A. Requires T in B_A.
CMatrix sharp(const SemiOperator& op);

/// Diamond adjoint: the reduced solution of A^{1/2} X = T* A^{1/2},
/// i.e. (A^{1/2})+ T* A^{1/2}. Requires T in B_{A^{1/2}}.
CMatrix diamond(const SemiOperator& op);

/// A-operator norm |T|_A = |M|_2.
double a_norm(const SemiOperator& op);

/// (T#)#, which equals P T P.
CMatrix double_sharp(const SemiOperator& op);

/// Full-size embedding of T_a = M* (acting on R(A), zero on N(A)).
CMatrix embed_Ta(const SemiOperator& op);

/// Full-size embedding of T_c = M (acting on R(A), zero on N(A)).
CMatrix embed_Tc(const SemiOperator& op);

/// One monomial coeff * x^xpow * y^ypow of a polynomial q(x, y).
struct Monomial {
  Complex coeff;
  int xpow = 0;
  int ypow = 0;
};

using Poly2 = std::vector<Monomial>;

/// q(T, T#) = sum_k a_k T^{r_k} (T#)^{s_k}, with T-powers on the left as
/// in the defining expression. Negative exponents are rejected.
CMatrix poly_in_T_Tsharp(const SemiOperator& op, const Poly2& q);

/// q evaluated at (X, Y) for square matrices of equal size; the monomial
/// with xpow = ypow = 0 contributes coeff * I.
CMatrix poly_eval(const Poly2& q, const CMatrix& X, const CMatrix& Y);

} // namespace semih
