#include "semih/classify.hpp"

#include <Eigen/Eigenvalues>

namespace semih {

std::pair<bool, double> is_a_selfadjoint(const SemiOperator& op) {
  if (!op.cls().in_BA) throw ClassError("is_a_selfadjoint: operator is not in B_A");
  const SemiSpace& sp = op.space();
  const double scale = 1.0 + sp.norm_A() * norm2(op.T());
  const double residual =
      norm2(op.T().adjoint() * sp.A - sp.A * op.T()) / scale;
  return {residual <= sp.cfg.set_match, residual};
}

std::pair<bool, double> is_a_normal(const SemiOperator& op) {
  if (!op.cls().in_BA) throw ClassError("is_a_normal: operator is not in B_A");
  const CMatrix& M = op.M();
  const double nm = norm2(M);
  const double residual =
      norm2(M.adjoint() * M - M * M.adjoint()) / (1.0 + nm * nm);
  return {residual <= op.space().cfg.set_match, residual};
}

std::pair<bool, double> is_a_hyponormal(const SemiOperator& op) {
  if (!op.cls().in_BA) throw ClassError("is_a_hyponormal: operator is not in B_A");
  const CMatrix& M = op.M();
  const double nm = norm2(M);
  const CMatrix C = M.adjoint() * M - M * M.adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (C + C.adjoint()));
  if (es.info() != Eigen::Success)
    throw ConditioningError("is_a_hyponormal: eigensolver did not converge");
  const double lam_min = es.eigenvalues()(0);
  const double residual = std::max(0.0, -lam_min) / (1.0 + nm * nm);
  return {residual <= op.space().cfg.set_match, residual};
}

std::pair<bool, std::optional<AInverseResult>> is_a_invertible(const SemiOperator& op) {
  if (!is_a_invertible_value(op)) return {false, std::nullopt};
  AInverseResult witness = a_invert(op);
  if (op.cls().in_BA) {
    // The A-adjoint is then A-invertible with inverse (S0)#.
    const SemiSpace& sp = op.space();
    const CMatrix Tsharp = sharp(op);
    const CMatrix Ssharp = sharp(op.derived(witness.S));
    const double scale = 1.0 + sp.norm_A() * norm2(Tsharp) * norm2(Ssharp);
    if (norm2(sp.A * Tsharp * Ssharp - sp.A) > 1e-8 * scale ||
        norm2(sp.A * Ssharp * Tsharp - sp.A) > 1e-8 * scale)
      throw ConditioningError("is_a_invertible: sharp-inverse verification failed");
  }
  return {true, std::move(witness)};
}

ClassReport classify_operator(const SemiOperator& op) {
  ClassReport rep;
  std::tie(rep.a_selfadjoint, rep.selfadjoint_residual) = is_a_selfadjoint(op);
  std::tie(rep.a_normal, rep.normal_residual) = is_a_normal(op);
  std::tie(rep.a_hyponormal, rep.hyponormal_residual) = is_a_hyponormal(op);
  rep.invertible_sigma_min = smallest_sv(op.M());
  rep.a_invertible = is_a_invertible_value(op);

  const CMatrix Tsharp = sharp(op);
  const CMatrix comm = Tsharp * op.T() - op.T() * Tsharp;
  const double scale = 1.0 + norm2(op.T()) * norm2(Tsharp);
  rep.commutation_residual = norm2(comm) / scale;
  rep.a_normal_commutation = rep.commutation_residual <= op.space().cfg.set_match;
  return rep;
}

} // namespace semih
