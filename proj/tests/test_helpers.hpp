#pragma once

#include "semih/classify.hpp"
#include "semih/numrange.hpp"
#include "semih/propsuite.hpp"

#include <doctest.h>

#include <initializer_list>

namespace semih::test {

/// Row-major complex matrix literal.
inline CMatrix mat(Eigen::Index rows, Eigen::Index cols,
                   std::initializer_list<Complex> entries) {
  REQUIRE(static_cast<Eigen::Index>(entries.size()) == rows * cols);
  CMatrix m(rows, cols);
  Eigen::Index k = 0;
  for (const Complex& z : entries) {
    m(k / cols, k % cols) = z;
    ++k;
  }
  return m;
}

inline CMatrix diag2(double a, double b) {
  return mat(2, 2, {a, 0.0, 0.0, b});
}

inline CVector vec(std::initializer_list<Complex> entries) {
  CVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index k = 0;
  for (const Complex& z : entries) v(k++) = z;
  return v;
}

inline double mat_dist(const CMatrix& a, const CMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return (a - b).cwiseAbs().maxCoeff();
}

/// Largest normalized violation of the four Penrose identities; the
/// independent oracle for any pseudoinverse candidate.
inline double penrose_defect(const CMatrix& m, const CMatrix& pinv_m) {
  const double scale = 1.0 + norm2(m);
  const double d1 = norm2(m * pinv_m * m - m);
  const double d2 = norm2(pinv_m * m * pinv_m - pinv_m) * scale / (1.0 + norm2(pinv_m));
  const CMatrix mp = m * pinv_m;
  const CMatrix pm = pinv_m * m;
  const double d3 = norm2(mp - mp.adjoint());
  const double d4 = norm2(pm - pm.adjoint());
  return std::max({d1, d2, d3, d4}) / scale;
}

/// The two worked micro-instances used across the suite.
struct Micro {
  SemiSpacePtr sp;
  SemiOperator op;
};

inline Micro micro_e1() {
  SemiSpacePtr sp = build_space(diag2(1.0, 0.0));
  return {sp, SemiOperator(sp, mat(2, 2, {2.0, 0.0, 1.0, 3.0}))};
}

inline Micro micro_e3() {
  SemiSpacePtr sp = build_space(diag2(4.0, 1.0));
  return {sp, SemiOperator(sp, mat(2, 2, {0.0, 1.0, 0.0, 0.0}))};
}

/// A = diag(4, 1) with an A-selfadjoint T (compression [[1,2],[2,2]]).
inline Micro micro_selfadjoint() {
  SemiSpacePtr sp = build_space(diag2(4.0, 1.0));
  return {sp, SemiOperator(sp, mat(2, 2, {1.0, 1.0, 4.0, 2.0}))};
}

} // namespace semih::test
