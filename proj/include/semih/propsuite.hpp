#pragma once

#include "semih/classify.hpp"
#include "semih/numrange.hpp"
#include "semih/rng.hpp"
#include "semih/tensorprod.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semih {

enum class OpClass {
  generic,          // dense, may leave B_{A^{1/2}}
  in_BA,            // block lower-triangular in A's eigenbasis
  commuting_with_A, // diagonal positive block, commutes with A
  a_selfadjoint,    // Hermitian compression
  a_normal,         // normal compression
  a_invertible,     // normal compression with sigma_min > 0.1
  dominant_eigen,   // normal compression with a strictly dominant eigenvalue
};

const char* op_class_name(OpClass c);
std::optional<OpClass> op_class_from_name(std::string_view name);

/// Deterministic instance recipe: identical GenSpec, identical instance.
struct GenSpec {
  std::uint64_t seed = 0;
  int n = 2;
  int r = 1;
  double cond_cap = 1e4;
  OpClass op_class = OpClass::generic;
};

SemiSpacePtr gen_space(const GenSpec& spec);
SemiOperator gen_operator(const GenSpec& spec, SemiSpacePtr sp);

/// One failing instance, serialized in full so it replays without the
/// generator.
struct Counterexample {
  std::uint64_t seed = 0;
  int n = 0;
  int r = 0;
  CMatrix A, T;
  std::optional<CMatrix> A2, T2;
  double defect = 0.0;
};

struct PropertyReport {
  std::string theorem_id;
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::vector<Counterexample> counterexamples;
};

/// Raw material for one trial. Tensor statements carry a second pair.
struct TheoremInstance {
  std::uint64_t seed = 0;
  int n = 0;
  int r = 0;
  CMatrix A, T;
  std::optional<CMatrix> A2, T2;
};

struct TrialEval {
  double defect = 0.0;
  double tol = 0.0;
  bool hypothesis_ambiguous = false; // triggers a redraw
};

/// Defect recorded when a trial evaluation throws.
inline constexpr double kTrialExceptionDefect = 1e300;

struct RunProfile {
  double cond_cap = 1e4;
  double tol_floor = 0.0; // lower bound applied to every tolerance
};

inline RunProfile standard_profile() { return {1e4, 0.0}; }
// Ill-conditioned regime, excluded from acceptance.
inline RunProfile stress_profile() { return {1e6, 1e-4}; }

struct TheoremDef {
  std::string id;
  std::string anchor; // the property in formula form
  OpClass gen_class = OpClass::in_BA;
  double tol_factor = 0.0; // headline tolerance for listings
  bool self_test = false;  // excluded from "all" runs
  std::pair<int, int> dims_override = {0, 0};
  std::function<TheoremInstance(Rng&, int n, int r, const RunProfile&)> generate;
  std::function<TrialEval(const TheoremInstance&, const RunProfile&)> evaluate;
};

/// The registry: 37 statements plus one deliberately failing self-test
/// fixture (flagged, excluded from "all").
const std::vector<TheoremDef>& theorem_registry();

struct TheoremInfo {
  std::string id;
  std::string anchor;
  OpClass gen_class;
  double tolerance;
  bool self_test;
};

std::vector<TheoremInfo> list_theorems();

/// Runs `trials` independent draws of the statement. Dimensions are drawn
/// per trial from [dims.first, dims.second] (entries may pin their own
/// range). Near-threshold draws are redrawn, at most 3 times.
PropertyReport run_theorem(const TheoremDef& def, int trials, std::uint64_t base_seed,
                           std::pair<int, int> dims,
                           const RunProfile& profile = standard_profile());

PropertyReport check_theorem(const std::string& theorem_id, int trials,
                             std::uint64_t base_seed, std::pair<int, int> dims,
                             const RunProfile& profile = standard_profile());

/// Every non-self-test registry entry, in registry order.
std::vector<PropertyReport> run_all_theorems(int trials, std::uint64_t base_seed,
                                             std::pair<int, int> dims,
                                             const RunProfile& profile = standard_profile());

/// Re-evaluates the statement's defect on a stored instance (used to
/// replay serialized counterexamples).
double replay_defect(const std::string& theorem_id, const TheoremInstance& inst,
                     const RunProfile& profile = standard_profile());

} // namespace semih
