#include "semih/semispace.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace semih {

namespace {

constexpr double kMaxRangeCondition = 1e8;

SemiSpacePtr assemble(const CMatrix& A_sym, CMatrix U, RVector evals,
                      const ToleranceConfig& cfg) {
  const Eigen::Index n = A_sym.rows();
  const double lam_max = evals.size() ? evals.maxCoeff() : 0.0;
  const double slack = cfg.psd_slack * std::abs(lam_max);
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < -slack)
      throw ValidationError("build_space: A is not positive semidefinite");
    if (evals(i) < 0.0) evals(i) = 0.0;
  }

  // Descending order, positive block first.
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return evals(a) > evals(b); });

  CMatrix Us(n, n);
  RVector ls(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Us.col(i) = U.col(order[static_cast<size_t>(i)]);
    ls(i) = evals(order[static_cast<size_t>(i)]);
  }

  const double cutoff = cfg.rank_rel * lam_max;
  Eigen::Index r = 0;
  while (r < n && ls(r) > cutoff) ++r;
  if (r == 0) throw ValidationError("build_space: A must be a non-zero operator");
  if (ls(0) / ls(r - 1) > kMaxRangeCondition)
    throw ConditioningError("build_space: condition number of A on its range exceeds 1e8");

  auto sp = std::make_shared<SemiSpace>();
  sp->n = n;
  sp->A = A_sym;
  sp->r = r;
  sp->U = std::move(Us);
  sp->sigma = ls.head(r);
  sp->cfg = cfg;

  RVector half = RVector::Zero(n), dag = RVector::Zero(n), half_dag = RVector::Zero(n),
          proj = RVector::Zero(n);
  for (Eigen::Index i = 0; i < r; ++i) {
    half(i) = std::sqrt(ls(i));
    dag(i) = 1.0 / ls(i);
    half_dag(i) = 1.0 / half(i);
    proj(i) = 1.0;
  }
  const CMatrix& Uc = sp->U;
  sp->A_half = Uc * half.asDiagonal() * Uc.adjoint();
  sp->A_dag = Uc * dag.asDiagonal() * Uc.adjoint();
  sp->A_half_dag = Uc * half_dag.asDiagonal() * Uc.adjoint();
  sp->P = Uc * proj.asDiagonal() * Uc.adjoint();
  return sp;
}

} // namespace

CMatrix SemiSpace::embed_on_range(const CMatrix& block) const {
  if (block.rows() != r || block.cols() != r)
    throw ValidationError("embed_on_range: block must be r x r");
  CMatrix full = CMatrix::Zero(n, n);
  full.topLeftCorner(r, r) = block;
  return U * full * U.adjoint();
}

SemiSpacePtr build_space(const CMatrix& A, const ToleranceConfig& cfg) {
  cfg.validate();
  require_square(A, "build_space");
  if (A.size() == 0) throw ValidationError("build_space: empty matrix");
  if (!all_finite(A)) throw ValidationError("build_space: non-finite entries");
  const HermEig eig = herm_eig(A); // rejects non-Hermitian input
  const CMatrix A_sym = 0.5 * (A + A.adjoint());
  return assemble(A_sym, eig.vectors, eig.values, cfg);
}

SemiSpacePtr build_space_from_eigenbasis(const CMatrix& U, const RVector& evals,
                                         const ToleranceConfig& cfg) {
  cfg.validate();
  require_square(U, "build_space_from_eigenbasis");
  if (U.rows() != evals.size())
    throw ValidationError("build_space_from_eigenbasis: eigenvalue count mismatch");
  CMatrix A = U * evals.asDiagonal().toDenseMatrix().cast<Complex>() * U.adjoint();
  A = 0.5 * (A + A.adjoint());
  return assemble(A, U, evals, cfg);
}

Complex a_inner(const SemiSpace& sp, const CVector& x, const CVector& y) {
  if (x.size() != sp.n || y.size() != sp.n)
    throw ValidationError("a_inner: dimension mismatch");
  return (y.adjoint() * (sp.A * x))(0);
}

double a_seminorm(const SemiSpace& sp, const CVector& x) {
  if (x.size() != sp.n) throw ValidationError("a_seminorm: dimension mismatch");
  // |x|_A = |A^{1/2} x|; computed through the eigenbasis for non-negativity.
  const CVector c = sp.to_eigenbasis(x).head(sp.r);
  double s = 0.0;
  for (Eigen::Index i = 0; i < sp.r; ++i) s += sp.sigma(i) * std::norm(c(i));
  return std::sqrt(s);
}

CVector a_normalize(const SemiSpace& sp, const CVector& x) {
  const double na = a_seminorm(sp, x);
  if (na < sp.cfg.rank_rel * x.norm() || na == 0.0)
    throw ValidationError("a_normalize: vector lies in N(A)");
  return x / na;
}

bool range_included(const CMatrix& X, const CMatrix& Y, const ToleranceConfig& cfg) {
  if (X.rows() != Y.rows())
    throw ValidationError("range_included: row dimension mismatch");
  const CMatrix residual = X - Y * (pinv(Y, cfg) * X);
  return norm2(residual) <= cfg.set_match * (1.0 + norm2(X));
}

MembershipClass membership(const SemiSpace& sp, const CMatrix& T) {
  require_square(T, "membership");
  if (T.rows() != sp.n) throw ValidationError("membership: dimension mismatch");
  MembershipClass cls;
  cls.in_BA_upper = true; // automatic at finite dimension: R(A^{1/2}) = R(A)
  cls.in_BA_half = range_included(T.adjoint() * sp.A_half, sp.A_half, sp.cfg);
  cls.in_BA = range_included(T.adjoint() * sp.A, sp.A, sp.cfg);
  return cls;
}

CMatrix reduced_solution(const CMatrix& E1, const CMatrix& E2, const ToleranceConfig& cfg) {
  if (E1.rows() != E2.rows())
    throw ValidationError("reduced_solution: row dimension mismatch");
  if (!range_included(E2, E1, cfg))
    throw ValidationError("reduced_solution: R(E2) is not contained in R(E1), no solution");
  return pinv(E1, cfg) * E2;
}

} // namespace semih
