#include "semih/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace semih {

namespace {

double spectrum_tol_for(const SemiOperator& op) {
  return op.space().cfg.spectrum_tol(op.space().norm_A(), norm2(op.T()));
}

std::vector<Complex> eig_values(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw ConditioningError("eigendecomposition did not converge");
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

} // namespace

std::vector<Complex> SpectrumSet::sorted() const {
  std::vector<Complex> v = values;
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

bool sets_match(const SpectrumSet& a, const SpectrumSet& b, double radius) {
  if (a.values.size() != b.values.size()) return false;
  std::vector<bool> used(b.values.size(), false);
  for (const Complex& z : a.values) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t pick = b.values.size();
    for (std::size_t j = 0; j < b.values.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - b.values[j]);
      if (d < best) {
        best = d;
        pick = j;
      }
    }
    if (pick == b.values.size() || best > radius) return false;
    used[pick] = true;
  }
  return true;
}

bool set_included(const SpectrumSet& sub, const SpectrumSet& super, double radius) {
  for (const Complex& z : sub.values)
    if (min_distance(z, super.values) > radius) return false;
  return true;
}

double min_distance(const Complex& z, const std::vector<Complex>& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& w : set) best = std::min(best, std::abs(z - w));
  return best;
}

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  double h = 0.0;
  for (const Complex& z : a) h = std::max(h, min_distance(z, b));
  for (const Complex& z : b) h = std::max(h, min_distance(z, a));
  return h;
}

SpectrumSet a_spectrum(const SemiOperator& op, SpectrumMethod method) {
  const CMatrix& M = op.M();
  SpectrumSet out;
  out.values = eig_values(M);
  out.tol = spectrum_tol_for(op);
  if (method == SpectrumMethod::definitional) {
    // Each candidate must defeat the canonical A-inverse construction:
    // lambda - M singular within the singularity threshold.
    const double tol = op.space().cfg.singular_tol(norm2(M));
    for (const Complex& lam : out.values) {
      const CMatrix shifted = lam * CMatrix::Identity(M.rows(), M.cols()) - M;
      if (smallest_sv(shifted) > tol)
        throw ConditioningError(
            "a_spectrum: compressed and definitional methods disagree");
    }
  }
  return out;
}

SpectrumSet a_point_spectrum(const SemiOperator& op) {
  const CMatrix& M = op.M();
  const SemiSpace& sp = op.space();
  Eigen::ComplexEigenSolver<CMatrix> es(M, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw ConditioningError("a_point_spectrum: eigensolver did not converge");

  const double check_tol = sp.cfg.singular_tol(norm2(M));
  const CMatrix U_r = sp.U.leftCols(sp.r);
  SpectrumSet out;
  out.tol = spectrum_tol_for(op);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const Complex lam = es.eigenvalues()(k);
    // Lift the M-eigenvector to an exact A-eigenvector of T.
    const CVector x = sp.A_half_dag * (U_r * es.eigenvectors().col(k));
    const double na = a_seminorm(sp, x);
    const CVector defect = sp.A_half * (lam * x - op.T() * x);
    if (na < 0.5 || defect.norm() > check_tol)
      throw ConditioningError("a_point_spectrum: eigenvector lift failed to verify");
    out.values.push_back(lam);
  }
  return out;
}

double approx_residual(const SemiOperator& op, const Complex& lambda) {
  const CMatrix& M = op.M();
  return smallest_sv(M - lambda * CMatrix::Identity(M.rows(), M.cols()));
}

SpectrumSet a_approx_spectrum(const SemiOperator& op) {
  SpectrumSet out = a_spectrum(op, SpectrumMethod::compressed);
  const double norm_m = norm2(op.M());
  const double tol = op.space().cfg.singular_tol(norm_m);
  for (const Complex& lam : out.values)
    if (approx_residual(op, lam) > tol)
      throw ConditioningError("a_approx_spectrum: residual check failed at a spectral point");
  // Away from the spectrum: a ring strictly outside the numerical range of
  // M, where sigma_min(M - lambda) >= dist(lambda, W(M)) > 0 holds exactly.
  const double ring = norm_m + 0.5 * (1.0 + norm_m);
  for (int k = 0; k < 8; ++k) {
    const double th = 2.0 * std::numbers::pi * k / 8.0;
    const Complex lam(ring * std::cos(th), ring * std::sin(th));
    if (approx_residual(op, lam) <= tol)
      throw ConditioningError("a_approx_spectrum: residual vanished away from the spectrum");
  }
  return out;
}

bool point_membership_general(const SemiSpace& sp, const CMatrix& T, const Complex& lambda) {
  require_square(T, "point_membership_general");
  if (T.rows() != sp.n) throw ValidationError("point_membership_general: dimension mismatch");
  const CMatrix K =
      sp.A_half * (lambda * CMatrix::Identity(sp.n, sp.n) - T);
  // N(K) escapes N(A) iff stacking A^{1/2} under K strictly raises the
  // rank. Both ranks are decided at the stacked matrix's scale; K alone
  // may be the (numerical) zero matrix, whose own relative cutoff would
  // promote noise to rank.
  CMatrix stacked(2 * sp.n, sp.n);
  stacked.topRows(sp.n) = K;
  stacked.bottomRows(sp.n) = sp.A_half;
  const RVector sv_stacked = singular_values(stacked);
  const double cutoff =
      sp.cfg.rank_rel * (sv_stacked.size() ? sv_stacked(0) : 0.0);
  auto rank_above = [cutoff](const RVector& sv) {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++r;
    return r;
  };
  return rank_above(sv_stacked) > rank_above(singular_values(K));
}

bool is_a_invertible_value(const SemiOperator& op) {
  const CMatrix& M = op.M();
  return smallest_sv(M) > op.space().cfg.singular_tol(norm2(M));
}

AInverseResult a_invert(const SemiOperator& op) {
  const CMatrix& M = op.M();
  const SemiSpace& sp = op.space();
  if (!is_a_invertible_value(op))
    throw ValidationError("a_invert: operator is not A-invertible (0 in sigma_A)");

  const CMatrix Minv = M.fullPivLu().inverse();
  const RVector half = sp.sigma.cwiseSqrt();
  CMatrix block = Minv;
  for (Eigen::Index i = 0; i < sp.r; ++i)
    for (Eigen::Index j = 0; j < sp.r; ++j) block(i, j) *= half(j) / half(i);
  AInverseResult res;
  res.S = sp.embed_on_range(block);
  res.a_norm_S = norm2(Minv);

  const double scale =
      1.0 + sp.norm_A() * norm2(op.T()) * norm2(res.S);
  const CMatrix ATS = sp.A * op.T() * res.S;
  const CMatrix AST = sp.A * res.S * op.T();
  if (norm2(ATS - sp.A) > 1e-8 * scale || norm2(AST - sp.A) > 1e-8 * scale)
    throw ConditioningError("a_invert: canonical inverse failed verification");
  return res;
}

double gamma_A(const SemiOperator& op) {
  if (!op.cls().in_BA) throw ClassError("gamma_A: operator is not in B_A");
  return smallest_nonzero_sv(diamond(op), op.space().cfg);
}

double spectral_radius_A(const SemiOperator& op) {
  double rho = 0.0;
  for (const Complex& lam : eig_values(op.M())) rho = std::max(rho, std::abs(lam));
  return rho;
}

namespace {

SpectralMapResult map_from_block(const SemiOperator& op, const CMatrix& fM) {
  const SemiSpace& sp = op.space();
  const RVector half = sp.sigma.cwiseSqrt();
  CMatrix block = fM;
  for (Eigen::Index i = 0; i < sp.r; ++i)
    for (Eigen::Index j = 0; j < sp.r; ++j) block(i, j) *= half(j) / half(i);
  SpectralMapResult res;
  res.mapped = sp.embed_on_range(block);
  res.spec.values = eig_values(fM);
  res.spec.tol = spectrum_tol_for(op);
  return res;
}

} // namespace

SpectralMapResult spectral_map_poly(const SemiOperator& op,
                                    const std::vector<Complex>& coeffs) {
  const CMatrix& M = op.M();
  const CMatrix I = CMatrix::Identity(M.rows(), M.cols());
  CMatrix fM = CMatrix::Zero(M.rows(), M.cols());
  for (std::size_t j = coeffs.size(); j-- > 0;) fM = fM * M + coeffs[j] * I;
  return map_from_block(op, fM);
}

SpectralMapResult spectral_map_fn(const SemiOperator& op,
                                  const std::function<Complex(Complex)>& f) {
  const CMatrix& M = op.M();
  const double nm = norm2(M);
  const double commutator = norm2(M.adjoint() * M - M * M.adjoint());
  if (commutator > op.space().cfg.set_match * (1.0 + nm * nm))
    throw ClassError("spectral_map_fn: operator is not A-normal");
  // Normal compression: Schur form is diagonal, so f acts entrywise there.
  Eigen::ComplexSchur<CMatrix> schur(M);
  if (schur.info() != Eigen::Success)
    throw ConditioningError("spectral_map_fn: Schur decomposition failed");
  CVector d = schur.matrixT().diagonal();
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(d(i));
  const CMatrix fM =
      schur.matrixU() * d.asDiagonal() * schur.matrixU().adjoint();
  return map_from_block(op, fM);
}

} // namespace semih
