#include "semih/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>

namespace semih {

namespace {

// Largest-magnitude component made real positive, ties to the lowest index.
void canonicalize_phases(CMatrix& v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      const double a = std::abs(v(r, c));
      if (a > best + 1e-15) {
        best = a;
        imax = r;
      }
    }
    if (best <= 0.0) continue;
    const Complex z = v(imax, c);
    if (std::abs(z) > 0.0) v.col(c) *= std::conj(z) / std::abs(z);
  }
}

} // namespace

HermEig herm_eig(const CMatrix& m) {
  require_square(m, "herm_eig");
  if (!all_finite(m)) throw ValidationError("herm_eig: non-finite entries");
  const double scale = m.norm();
  const double asym = (m - m.adjoint()).norm();
  if (asym > 1e-8 * std::max(scale, 1e-300) && asym > 0.0)
    throw ValidationError("herm_eig: matrix is not Hermitian");
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw ConditioningError("herm_eig: eigensolver did not converge");
  HermEig out{es.eigenvalues(), es.eigenvectors()};
  canonicalize_phases(out.vectors);
  return out;
}

CMatrix pinv(const CMatrix& m, const ToleranceConfig& cfg) {
  if (m.size() == 0) return CMatrix(m.cols(), m.rows());
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? cfg.rank_rel * sv(0) : 0.0;
  RVector inv = RVector::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff && sv(i) > 0.0) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

CMatrix sqrt_psd(const CMatrix& m, const ToleranceConfig& cfg) {
  require_square(m, "sqrt_psd");
  const HermEig eig = herm_eig(m);
  const double scale = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  const double slack = cfg.psd_slack * scale;
  RVector roots = RVector::Zero(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lam = eig.values(i);
    if (lam < -slack)
      throw ValidationError("sqrt_psd: matrix has a negative eigenvalue");
    roots(i) = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

Eigen::Index rank_of(const CMatrix& m, const ToleranceConfig& cfg) {
  if (m.size() == 0) return 0;
  const RVector sv = singular_values(m);
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cutoff = cfg.rank_rel * sv(0);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

RVector singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

double norm2(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  const RVector sv = singular_values(m);
  return sv.size() ? sv(0) : 0.0;
}

double smallest_sv(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  const RVector sv = singular_values(m);
  return sv.size() ? sv(sv.size() - 1) : 0.0;
}

double smallest_nonzero_sv(const CMatrix& m, const ToleranceConfig& cfg) {
  const RVector sv = singular_values(m);
  if (sv.size() == 0 || sv(0) <= 0.0) return 0.0;
  const double cutoff = cfg.rank_rel * sv(0);
  double smallest = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) smallest = sv(i);
  return smallest;
}

CVector eigenvalues_sorted(const CMatrix& m) {
  require_square(m, "eigenvalues_sorted");
  Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw ConditioningError("eigenvalues_sorted: eigensolver did not converge");
  CVector v = es.eigenvalues();
  std::sort(v.data(), v.data() + v.size(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

} // namespace semih
