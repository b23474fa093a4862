#include "semih/opcalc.hpp"

namespace semih {

namespace {

CMatrix matrix_power(const CMatrix& m, int p) {
  CMatrix acc = CMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < p; ++i) acc = acc * m;
  return acc;
}

} // namespace

SemiOperator::SemiOperator(SemiSpacePtr space, CMatrix T)
    : space_(std::move(space)), T_(std::move(T)) {
  if (!space_) throw ValidationError("SemiOperator: null space");
  require_square(T_, "SemiOperator");
  if (T_.rows() != space_->n) throw ValidationError("SemiOperator: dimension mismatch");
  if (!all_finite(T_)) throw ValidationError("SemiOperator: non-finite entries");
  cls_ = membership(*space_, T_);
  T_eig_ = space_->conjugate_to_eigenbasis(T_);
  if (cls_.in_BA_half) {
    const Eigen::Index r = space_->r;
    const RVector half = space_->sigma.cwiseSqrt();
    CMatrix m = T_eig_.topLeftCorner(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < r; ++j) m(i, j) *= half(i) / half(j);
    M_ = std::move(m);
  }
}

const CMatrix& SemiOperator::M() const {
  if (!M_)
    throw ClassError("operator is not in B_{A^{1/2}}: no compression exists");
  return *M_;
}

CMatrix compress(const SemiOperator& op) {
  return op.M();
}

CMatrix sharp(const SemiOperator& op) {
  if (!op.cls().in_BA)
    throw ClassError("sharp: operator is not in B_A");
  const SemiSpace& sp = op.space();
  return sp.A_dag * op.T().adjoint() * sp.A;
}

CMatrix diamond(const SemiOperator& op) {
  if (!op.cls().in_BA_half)
    throw ClassError("diamond: operator is not in B_{A^{1/2}}");
  const SemiSpace& sp = op.space();
  return reduced_solution(sp.A_half, op.T().adjoint() * sp.A_half, sp.cfg);
}

double a_norm(const SemiOperator& op) {
  return norm2(op.M());
}

CMatrix double_sharp(const SemiOperator& op) {
  return sharp(op.derived(sharp(op)));
}

CMatrix embed_Ta(const SemiOperator& op) {
  return op.space().embed_on_range(op.M().adjoint());
}

CMatrix embed_Tc(const SemiOperator& op) {
  return op.space().embed_on_range(op.M());
}

CMatrix poly_in_T_Tsharp(const SemiOperator& op, const Poly2& q) {
  if (!op.cls().in_BA)
    throw ClassError("poly_in_T_Tsharp: operator is not in B_A");
  return poly_eval(q, op.T(), sharp(op));
}

CMatrix poly_eval(const Poly2& q, const CMatrix& X, const CMatrix& Y) {
  require_square(X, "poly_eval");
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw ValidationError("poly_eval: operand size mismatch");
  CMatrix acc = CMatrix::Zero(X.rows(), X.cols());
  for (const Monomial& m : q) {
    if (m.xpow < 0 || m.ypow < 0)
      throw ValidationError("poly_eval: negative exponent");
    acc += m.coeff * (matrix_power(X, m.xpow) * matrix_power(Y, m.ypow));
  }
  return acc;
}

} // namespace semih
