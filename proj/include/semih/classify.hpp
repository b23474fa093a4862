#pragma once

#include "semih/spectra.hpp"

#include <optional>

namespace semih {

/// Predicate verdicts with the residuals they were decided on, so a
/// fuzzing harness can spot near-threshold draws.
struct ClassReport {
  bool a_selfadjoint = false;
  double selfadjoint_residual = 0.0;
  bool a_normal = false;
  double normal_residual = 0.0;
  bool a_hyponormal = false;
  double hyponormal_residual = 0.0;
  bool a_invertible = false;
  double invertible_sigma_min = 0.0;
  // Diagnostic only: the commutation variant T# T = T T# of A-normality
  // found in part of the literature (the norm-equality definition is the
  // one the predicates use).
  bool a_normal_commutation = false;
  double commutation_residual = 0.0;
};

/// T* A = A T within set_match, residual scaled by 1 + |A||T|. Requires
/// T in B_A. Agrees with Hermitian-ness of M and with realness of W_A.
std::pair<bool, double> is_a_selfadjoint(const SemiOperator& op);

/// |T x|_A = |T# x|_A for all x, decided through the commutator of the
/// compression: |M*M - M M*| <= set_match (1 + |M|^2).
std::pair<bool, double> is_a_normal(const SemiOperator& op);

/// |T x|_A >= |T# x|_A for all x: the compression commutator is PSD up to
/// slack. At finite dimension this collapses to A-normality (the
/// commutator is traceless), but the residual semantics differ.
std::pair<bool, double> is_a_hyponormal(const SemiOperator& op);

/// Existence of S with ATS = AST = A; true iff sigma_min(M) clears the
/// singularity threshold. The witness is the canonical inverse.
std::pair<bool, std::optional<AInverseResult>> is_a_invertible(const SemiOperator& op);

ClassReport classify_operator(const SemiOperator& op);

} // namespace semih
