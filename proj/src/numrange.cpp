#include "semih/numrange.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <limits>
#include <numbers>

namespace semih {

namespace {

double cross(const Complex& o, const Complex& a, const Complex& b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double point_segment_distance(const Complex& z, const Complex& a, const Complex& b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

} // namespace

NumRangeResult numrange(const SemiOperator& op, int n_angles) {
  if (n_angles < 8) throw ValidationError("numrange: need at least 8 angles");
  const CMatrix& M = op.M();
  const Eigen::Index r = M.rows();

  NumRangeResult res;
  res.angles.reserve(static_cast<std::size_t>(n_angles));
  res.boundary.reserve(static_cast<std::size_t>(n_angles));
  for (int k = 0; k < n_angles; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_angles;
    const Complex rot = std::polar(1.0, -theta);
    const CMatrix H = 0.5 * (rot * M + std::conj(rot) * M.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    if (es.info() != Eigen::Success)
      throw ConditioningError("numrange: eigensolver did not converge");
    const CVector y = es.eigenvectors().col(r - 1); // largest eigenvalue
    const Complex point = (y.adjoint() * (M * y))(0);
    res.angles.push_back(theta);
    res.boundary.push_back(point);
    res.radius = std::max(res.radius, std::abs(point));
  }
  res.hull = conv_hull(res.boundary);
  return res;
}

NumRangeResult numrange_sample_general(const SemiSpace& sp, const CMatrix& T,
                                       int n_samples, std::uint64_t seed) {
  require_square(T, "numrange_sample_general");
  if (T.rows() != sp.n)
    throw ValidationError("numrange_sample_general: dimension mismatch");
  Rng rng(derive_stream(seed, "numrange-mc", 0));
  NumRangeResult res;
  res.approximate = true;
  res.boundary.reserve(static_cast<std::size_t>(n_samples));
  int kept = 0, attempts = 0;
  while (kept < n_samples && attempts < 100 * n_samples) {
    ++attempts;
    CVector x = rng.gaussian_matrix(sp.n, 1);
    const double na = a_seminorm(sp, x);
    if (na < sp.cfg.rank_rel * x.norm() || na == 0.0) continue;
    x /= na;
    const Complex val = (x.adjoint() * (sp.A * (T * x)))(0);
    res.boundary.push_back(val);
    res.radius = std::max(res.radius, std::abs(val));
    ++kept;
  }
  if (res.boundary.empty())
    throw ValidationError("numrange_sample_general: no A-normalizable samples");
  res.hull = conv_hull(res.boundary);
  return res;
}

std::pair<bool, double> is_real_range(const SemiOperator& op, double tol) {
  if (!op.cls().in_BA) throw ClassError("is_real_range: operator is not in B_A");
  const NumRangeResult nr = numrange(op);
  double worst = 0.0;
  for (const Complex& z : nr.boundary) worst = std::max(worst, std::abs(z.imag()));
  return {worst <= tol * (1.0 + norm2(op.M())), worst};
}

std::vector<Complex> conv_hull(std::vector<Complex> points) {
  if (points.empty()) throw ValidationError("conv_hull: empty input");
  std::sort(points.begin(), points.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Complex& a, const Complex& b) { return a == b; }),
               points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  std::vector<Complex> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) { // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) { // upper
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double point_to_hull_distance(const Complex& z, const std::vector<Complex>& hull) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::abs(z - hull[0]);
  if (hull.size() == 2) return point_segment_distance(z, hull[0], hull[1]);
  bool inside = true;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex& a = hull[i];
    const Complex& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, z) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i)
    best = std::min(best,
                    point_segment_distance(z, hull[i], hull[(i + 1) % hull.size()]));
  return best;
}

double hull_hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double h = 0.0;
  for (const Complex& z : a) h = std::max(h, point_to_hull_distance(z, b));
  for (const Complex& z : b) h = std::max(h, point_to_hull_distance(z, a));
  return h;
}

} // namespace semih
