#include "semih/tensorprod.hpp"

#include <algorithm>

namespace semih {

CMatrix kron(const CMatrix& X, const CMatrix& Y) {
  CMatrix out(X.rows() * Y.rows(), X.cols() * Y.cols());
  for (Eigen::Index i = 0; i < X.rows(); ++i)
    for (Eigen::Index j = 0; j < X.cols(); ++j)
      out.block(i * Y.rows(), j * Y.cols(), Y.rows(), Y.cols()) = X(i, j) * Y;
  return out;
}

TensorInstance tensor_instance(const SemiOperator& op1, const SemiOperator& op2) {
  if (!op1.cls().in_BA_half || !op2.cls().in_BA_half)
    throw ClassError("tensor_instance: both factors must be in B_{A^{1/2}}");
  const SemiSpace& s1 = op1.space();
  const SemiSpace& s2 = op2.space();

  // Eigenpairs of A1 (x) A2 are exactly the products of the factor pairs.
  RVector ev1 = RVector::Zero(s1.n);
  ev1.head(s1.r) = s1.sigma;
  RVector ev2 = RVector::Zero(s2.n);
  ev2.head(s2.r) = s2.sigma;
  RVector evK(s1.n * s2.n);
  for (Eigen::Index i = 0; i < s1.n; ++i)
    for (Eigen::Index j = 0; j < s2.n; ++j) evK(i * s2.n + j) = ev1(i) * ev2(j);

  ToleranceConfig cfg = s1.cfg;
  SemiSpacePtr spK = build_space_from_eigenbasis(kron(s1.U, s2.U), evK, cfg);
  if (spK->r != s1.r * s2.r)
    throw ConditioningError("tensor_instance: product rank mismatch");
  SemiOperator opK(spK, kron(op1.T(), op2.T()));
  if (!opK.cls().in_BA_half)
    throw ConditioningError("tensor_instance: product operator left B_{A^{1/2}}");
  return TensorInstance{op1.space_ptr(), op2.space_ptr(), spK, op1, op2, opK};
}

TensorCheck check_product_inclusion(const TensorInstance& ti) {
  const SpectrumSet s1 = a_approx_spectrum(ti.op1);
  const SpectrumSet s2 = a_approx_spectrum(ti.op2);
  const SpectrumSet sK = a_approx_spectrum(ti.opK);
  TensorCheck chk;
  chk.tol = sK.tol;
  chk.detail = "pairwise products against the product-operator spectrum";
  for (const Complex& l1 : s1.values)
    for (const Complex& l2 : s2.values)
      chk.worst = std::max(chk.worst, min_distance(l1 * l2, sK.values));
  chk.pass = chk.worst <= chk.tol;
  return chk;
}

TensorCheck check_factor_inclusions(const TensorInstance& ti) {
  const SemiSpace& s1 = ti.op1.space();
  const SemiSpace& s2 = ti.op2.space();
  const CMatrix I1 = CMatrix::Identity(s1.n, s1.n);
  const CMatrix I2 = CMatrix::Identity(s2.n, s2.n);

  const SemiOperator left(ti.spK, kron(ti.op1.T(), I2));
  const SemiOperator right(ti.spK, kron(I1, ti.op2.T()));
  const SpectrumSet specL = a_spectrum(left);
  const SpectrumSet specR = a_spectrum(right);
  const SpectrumSet spec1 = a_spectrum(ti.op1);
  const SpectrumSet spec2 = a_spectrum(ti.op2);

  TensorCheck chk;
  chk.tol = std::max(specL.tol, specR.tol);
  chk.detail = "factor spectra against embedded factor operators";
  for (const Complex& z : specL.values)
    chk.worst = std::max(chk.worst, min_distance(z, spec1.values));
  for (const Complex& z : specR.values)
    chk.worst = std::max(chk.worst, min_distance(z, spec2.values));

  const bool same_weight =
      s1.n == s2.n && norm2(s1.A - s2.A) <= chk.tol;
  if (same_weight) {
    // Set equality (multiplicities differ by the factor rank).
    for (const Complex& z : spec1.values)
      chk.worst = std::max(chk.worst, min_distance(z, specL.values));
    for (const Complex& z : spec2.values)
      chk.worst = std::max(chk.worst, min_distance(z, specR.values));
    chk.detail += ", with set equality for identical weights";
  }
  chk.pass = chk.worst <= chk.tol;
  return chk;
}

} // namespace semih
