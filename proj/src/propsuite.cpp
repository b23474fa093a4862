#include "semih/propsuite.hpp"

#include <algorithm>
#include <cmath>

namespace semih {

const char* op_class_name(OpClass c) {
  switch (c) {
    case OpClass::generic: return "generic";
    case OpClass::in_BA: return "in_BA";
    case OpClass::commuting_with_A: return "commuting_with_A";
    case OpClass::a_selfadjoint: return "a_selfadjoint";
    case OpClass::a_normal: return "a_normal";
    case OpClass::a_invertible: return "a_invertible";
    case OpClass::dominant_eigen: return "dominant_eigen";
  }
  return "unknown";
}

std::optional<OpClass> op_class_from_name(std::string_view name) {
  for (OpClass c : {OpClass::generic, OpClass::in_BA, OpClass::commuting_with_A,
                    OpClass::a_selfadjoint, OpClass::a_normal, OpClass::a_invertible,
                    OpClass::dominant_eigen})
    if (name == op_class_name(c)) return c;
  return std::nullopt;
}

SemiSpacePtr gen_space(const GenSpec& spec) {
  if (spec.r < 1 || spec.r > spec.n)
    throw ValidationError("gen_space: rank must satisfy 1 <= r <= n");
  Rng rng(derive_stream(spec.seed, "gen_space", 0));
  const CMatrix Q = haar_unitary(rng, spec.n);
  RVector evals = RVector::Zero(spec.n);
  const double span = std::log(spec.cond_cap);
  for (int i = 0; i < spec.r; ++i) evals(i) = std::exp(rng.uniform(0.0, span));
  return build_space_from_eigenbasis(Q, evals);
}

namespace {

// Normal r x r matrix with prescribed eigenvalues.
CMatrix normal_with_eigs(Rng& rng, const CVector& d) {
  const CMatrix V = haar_unitary(rng, d.size());
  return V * d.asDiagonal() * V.adjoint();
}

CVector draw_eigs(Rng& rng, Eigen::Index r) {
  CVector d(r);
  for (Eigen::Index i = 0; i < r; ++i) d(i) = rng.cnormal();
  return d;
}

} // namespace

SemiOperator gen_operator(const GenSpec& spec, SemiSpacePtr sp) {
  Rng rng(derive_stream(spec.seed, "gen_operator", 0));
  const Eigen::Index n = sp->n, r = sp->r, k = n - r;

  if (spec.op_class == OpClass::generic) {
    return SemiOperator(sp, rng.gaussian_matrix(n, n));
  }

  const RVector half = sp->sigma.cwiseSqrt();
  auto sandwich = [&](const CMatrix& core) { // Sigma^{-1/2} core Sigma^{1/2}
    CMatrix b = core;
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < r; ++j) b(i, j) *= half(j) / half(i);
    return b;
  };

  CMatrix T11(r, r);
  bool zero_T21 = false;
  switch (spec.op_class) {
    case OpClass::in_BA:
      T11 = rng.gaussian_matrix(r, r);
      break;
    case OpClass::commuting_with_A: {
      // Diagonal block commutes with Sigma whatever its multiplicities.
      T11 = CMatrix::Zero(r, r);
      for (Eigen::Index i = 0; i < r; ++i) T11(i, i) = rng.cnormal();
      zero_T21 = true;
      break;
    }
    case OpClass::a_selfadjoint: {
      const CMatrix G = rng.gaussian_matrix(r, r);
      T11 = sandwich(0.5 * (G + G.adjoint()));
      break;
    }
    case OpClass::a_normal:
      T11 = sandwich(normal_with_eigs(rng, draw_eigs(rng, r)));
      break;
    case OpClass::a_invertible: {
      CVector d = draw_eigs(rng, r);
      double min_re = d.real().minCoeff();
      const double shift = std::max(0.0, 0.15 - min_re);
      for (Eigen::Index i = 0; i < r; ++i) d(i) += shift;
      T11 = sandwich(normal_with_eigs(rng, d));
      break;
    }
    case OpClass::dominant_eigen: {
      CVector d(r);
      d(0) = std::polar(1.5 + rng.uniform(), rng.uniform(0.0, 6.283185307179586));
      for (Eigen::Index i = 1; i < r; ++i) {
        const Complex z = rng.cnormal();
        const double a = std::abs(z);
        d(i) = a > 1.0 ? z / a * rng.uniform(0.2, 0.9) : z;
      }
      T11 = sandwich(normal_with_eigs(rng, d));
      break;
    }
    case OpClass::generic:
      break; // handled above
  }

  CMatrix T_eig = CMatrix::Zero(n, n);
  T_eig.topLeftCorner(r, r) = T11;
  if (k > 0) {
    if (!zero_T21) T_eig.bottomLeftCorner(k, r) = rng.gaussian_matrix(k, r);
    T_eig.bottomRightCorner(k, k) = rng.gaussian_matrix(k, k);
  }
  return SemiOperator(sp, sp->U * T_eig * sp->U.adjoint());
}

namespace {

TrialEval evaluate_safe(const TheoremDef& def, const TheoremInstance& inst,
                        const RunProfile& profile) {
  try {
    return def.evaluate(inst, profile);
  } catch (const std::exception&) {
    return {kTrialExceptionDefect, 0.5, false};
  }
}

} // namespace

PropertyReport run_theorem(const TheoremDef& def, int trials, std::uint64_t base_seed,
                           std::pair<int, int> dims, const RunProfile& profile) {
  if (def.dims_override.first > 0) dims = def.dims_override;
  if (dims.first < 1 || dims.second < dims.first)
    throw ValidationError("run_theorem: bad dimension range");

  PropertyReport rep;
  rep.theorem_id = def.id;
  rep.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    TheoremInstance inst;
    TrialEval eval;
    for (std::uint64_t redraw = 0;; ++redraw) {
      const std::uint64_t stream =
          derive_stream(base_seed, def.id, static_cast<std::uint64_t>(trial), redraw);
      Rng rng(stream);
      const int n = rng.uniform_int(dims.first, dims.second);
      const int r = rng.uniform_int(1, n);
      inst = def.generate(rng, n, r, profile);
      inst.seed = stream;
      inst.n = n;
      inst.r = r;
      eval = evaluate_safe(def, inst, profile);
      if (!eval.hypothesis_ambiguous || redraw >= 3) break;
    }
    const double tol = std::max(eval.tol, profile.tol_floor);
    rep.worst_residual = std::max(rep.worst_residual, eval.defect);
    if (!(eval.defect <= tol)) {
      ++rep.failures;
      Counterexample ce;
      ce.seed = inst.seed;
      ce.n = inst.n;
      ce.r = inst.r;
      ce.A = inst.A;
      ce.T = inst.T;
      ce.A2 = inst.A2;
      ce.T2 = inst.T2;
      ce.defect = eval.defect;
      rep.counterexamples.push_back(std::move(ce));
    }
  }
  return rep;
}

namespace {

const TheoremDef& find_theorem(const std::string& id) {
  for (const TheoremDef& def : theorem_registry())
    if (def.id == id) return def;
  throw ValidationError("unknown theorem id: " + id);
}

} // namespace

PropertyReport check_theorem(const std::string& theorem_id, int trials,
                             std::uint64_t base_seed, std::pair<int, int> dims,
                             const RunProfile& profile) {
  return run_theorem(find_theorem(theorem_id), trials, base_seed, dims, profile);
}

std::vector<PropertyReport> run_all_theorems(int trials, std::uint64_t base_seed,
                                             std::pair<int, int> dims,
                                             const RunProfile& profile) {
  std::vector<PropertyReport> reports;
  for (const TheoremDef& def : theorem_registry()) {
    if (def.self_test) continue;
    reports.push_back(run_theorem(def, trials, base_seed, dims, profile));
  }
  return reports;
}

std::vector<TheoremInfo> list_theorems() {
  std::vector<TheoremInfo> out;
  for (const TheoremDef& def : theorem_registry())
    out.push_back({def.id, def.anchor, def.gen_class, def.tol_factor, def.self_test});
  return out;
}

double replay_defect(const std::string& theorem_id, const TheoremInstance& inst,
                     const RunProfile& profile) {
  return evaluate_safe(find_theorem(theorem_id), inst, profile).defect;
}

} // namespace semih
