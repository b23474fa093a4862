#pragma once

#include "semih/opcalc.hpp"

#include <functional>
#include <vector>

namespace semih {

/// Finite multiset of spectral values plus the radius used when matching
/// it against other sets.
struct SpectrumSet {
  std::vector<Complex> values;
  double tol = 0.0;

  std::size_t size() const { return values.size(); }

  /// Values sorted lexicographically by (re, im).
  std::vector<Complex> sorted() const;
};

/// Multiset equality by greedy nearest-neighbour matching within radius
/// (ties broken by smallest index). Sizes must agree.
bool sets_match(const SpectrumSet& a, const SpectrumSet& b, double radius);

/// Every value of `sub` lies within `radius` of some value of `super`
/// (set-level inclusion, multiplicities ignored).
bool set_included(const SpectrumSet& sub, const SpectrumSet& super, double radius);

/// Hausdorff distance between the two value sets (multiplicity-blind).
/// Empty vs non-empty is infinite; empty vs empty is 0.
double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b);

double min_distance(const Complex& z, const std::vector<Complex>& set);

/// Canonical A-inverse S of T: ATS = AST = A with S vanishing on N(A).
struct AInverseResult {
  CMatrix S;
  double a_norm_S = 0.0;
};

enum class SpectrumMethod { compressed, definitional };

/// A-spectrum of T. The compressed method reads the eigenvalues of M; the
/// definitional method additionally confirms each candidate by attempting
/// the canonical A-inverse of (lambda - T), which must fail. Both must
/// agree.
SpectrumSet a_spectrum(const SemiOperator& op,
                       SpectrumMethod method = SpectrumMethod::compressed);

/// A-point spectrum. Equals a_spectrum at finite dimension; each
/// eigenvector y of M is lifted to x = (A^{1/2})+ U_r y and verified to be
/// an exact A-eigenvector.
SpectrumSet a_point_spectrum(const SemiOperator& op);

/// inf over |x|_A = 1 of |(T - lambda) x|_A, i.e. sigma_min(M - lambda I).
double approx_residual(const SemiOperator& op, const Complex& lambda);

/// A-approximate point spectrum; equals a_spectrum at finite dimension,
/// cross-checked through approx_residual at and away from the points.
SpectrumSet a_approx_spectrum(const SemiOperator& op);

/// A-point spectral membership for arbitrary T (no class requirement):
/// true iff N(A^{1/2}(lambda - T)) contains a vector of nonzero A-norm.
bool point_membership_general(const SemiSpace& sp, const CMatrix& T, const Complex& lambda);

/// Canonical A-inverse; fails when M is singular (0 in sigma_A).
AInverseResult a_invert(const SemiOperator& op);

bool is_a_invertible_value(const SemiOperator& op);

/// A-reduced minimum modulus: smallest nonzero singular value of the
/// diamond adjoint (0 for the zero operator). Requires T in B_A.
double gamma_A(const SemiOperator& op);

/// A-spectral radius, the largest |eigenvalue of M|.
double spectral_radius_A(const SemiOperator& op);

struct SpectralMapResult {
  CMatrix mapped; // (A^{1/2})+ f(T_a*) A^{1/2}
  SpectrumSet spec;
};

/// Polynomial spectral mapping: f given by coefficients c_0..c_d of
/// sum c_j z^j. Valid for any T in B_{A^{1/2}}.
SpectralMapResult spectral_map_poly(const SemiOperator& op,
                                    const std::vector<Complex>& coeffs);

/// Point-function spectral mapping through the spectral decomposition of
/// the (normal) compression. Requires an A-normal operator.
SpectralMapResult spectral_map_fn(const SemiOperator& op,
                                  const std::function<Complex(Complex)>& f);

} // namespace semih
