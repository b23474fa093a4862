#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace semih {

using Complex = std::complex<double>;

/// Dense complex matrix, the carrier for every operator in the library.
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Input failed a structural precondition (dimensions, symmetry, operator
/// class, missing data). CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operator lies outside the class required by the requested operation.
class ClassError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Numerically hopeless input (e.g. condition number beyond the supported
/// regime). CLI maps this to exit code 3.
class ConditioningError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thresholds for rank decisions, set matching and PSD validation.
/// rank_rel and psd_slack are relative cutoffs (scaled by the largest
/// singular value / the spectral norm of the matrix under test);
/// set_match is scaled by 1 + |A|_2 (1 + |T|_2) when matching spectra.
struct ToleranceConfig {
  double rank_rel = 1e-10;
  double set_match = 1e-7;
  double psd_slack = 1e-10;

  void validate() const {
    auto bad = [](double v) { return !(v > 0.0) || v >= 1.0; };
    if (bad(rank_rel) || bad(set_match) || bad(psd_slack))
      throw ValidationError("ToleranceConfig entries must lie in (0, 1)");
  }

  /// Matching radius for spectrum-set comparisons.
  double spectrum_tol(double norm_a, double norm_t) const {
    return set_match * (1.0 + norm_a * (1.0 + norm_t));
  }

  /// Threshold below which sigma_min(M - lambda) counts as singular.
  double singular_tol(double norm_m) const {
    return set_match * (1.0 + norm_m);
  }
};

inline bool all_finite(const CMatrix& m) {
  return m.allFinite();
}

inline void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw ValidationError(std::string(what) + ": matrix must be square, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

} // namespace semih
