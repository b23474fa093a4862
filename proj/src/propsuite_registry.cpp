#include "semih/propsuite.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace semih {

namespace {

constexpr double kFailed = kTrialExceptionDefect; // hypothesis broke down
constexpr int kSweepAngles = 720;

// Certified slack of the numerical-radius estimate from a 720-angle sweep:
// the sampled radius understates w_A by at most (1 - cos(pi/N)) w_A.
double sweep_gap(double radius) { return 1e-5 * (1.0 + radius); }

double hull_tol(double norm_m) {
  return std::max(1e-6, 2.0 * std::numbers::pi * norm_m / kSweepAngles);
}

bool amb(double residual, double threshold) {
  return residual > 0.1 * threshold && residual < 10.0 * threshold;
}

struct BuiltOp {
  SemiSpacePtr sp;
  SemiOperator op;
};

BuiltOp rebuild(const TheoremInstance& inst) {
  SemiSpacePtr sp = build_space(inst.A);
  return {sp, SemiOperator(sp, inst.T)};
}

std::vector<Complex> eig_of(const CMatrix& m) {
  const CVector v = eigenvalues_sorted(m);
  return {v.data(), v.data() + v.size()};
}

std::vector<Complex> conj_of(std::vector<Complex> v) {
  for (Complex& z : v) z = std::conj(z);
  return v;
}

TheoremInstance single_instance(Rng& rng, int n, int r, const RunProfile& prof,
                                OpClass cls) {
  GenSpec gs{rng.next_u64(), n, r, prof.cond_cap, cls};
  SemiSpacePtr sp = gen_space(gs);
  SemiOperator op = gen_operator(gs, sp);
  TheoremInstance inst;
  inst.A = sp->A;
  inst.T = op.T();
  return inst;
}

auto gen_single(OpClass cls) {
  return [cls](Rng& rng, int n, int r, const RunProfile& prof) {
    return single_instance(rng, n, r, prof, cls);
  };
}

auto gen_pair(OpClass cls) {
  return [cls](Rng& rng, int n, int r, const RunProfile& prof) {
    GenSpec gs{rng.next_u64(), n, r, prof.cond_cap, cls};
    SemiSpacePtr sp = gen_space(gs);
    TheoremInstance inst;
    inst.A = sp->A;
    inst.T = gen_operator(gs, sp).T();
    GenSpec gs2 = gs;
    gs2.seed = rng.next_u64();
    inst.T2 = gen_operator(gs2, sp).T();
    return inst;
  };
}

// Mixture of a positive-constructed class and generic members of B_A,
// for if-and-only-if statements.
auto gen_mixed(OpClass positive) {
  return [positive](Rng& rng, int n, int r, const RunProfile& prof) {
    const OpClass cls = rng.uniform() < 0.5 ? positive : OpClass::in_BA;
    return single_instance(rng, n, r, prof, cls);
  };
}

// Pair in B_A whose A-adjoints commute: both compressions are normal in a
// shared eigenbasis. Eigenvalue moduli either clear 0.15 or are exact
// zeros, so A-invertibility of each factor and of the product is decided
// far from the threshold.
TheoremInstance commuting_sharp_pair(Rng& rng, int n, int r, const RunProfile& prof) {
  GenSpec gs{rng.next_u64(), n, r, prof.cond_cap, OpClass::in_BA};
  SemiSpacePtr sp = gen_space(gs);
  Rng local(derive_stream(gs.seed, "commuting-pair", 0));
  const CMatrix V = haar_unitary(local, r);
  const bool make_singular = local.uniform() < 0.5;

  auto draw_diag = [&](bool allow_zero) {
    CVector d(r);
    for (int i = 0; i < r; ++i) {
      if (allow_zero && local.uniform() < 0.35)
        d(i) = 0.0;
      else
        d(i) = std::polar(local.uniform(0.15, 2.0), local.uniform(0.0, 6.283185307179586));
    }
    return d;
  };
  const CVector d1 = draw_diag(make_singular);
  const CVector d2 = draw_diag(make_singular && local.uniform() < 0.5);

  const RVector half = sp->sigma.cwiseSqrt();
  auto make_T = [&](const CVector& d) {
    CMatrix core = V * d.asDiagonal() * V.adjoint();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) core(i, j) *= half(j) / half(i);
    CMatrix T_eig = CMatrix::Zero(n, n);
    T_eig.topLeftCorner(r, r) = core;
    if (n > r) {
      T_eig.bottomLeftCorner(n - r, r) = local.gaussian_matrix(n - r, r);
      T_eig.bottomRightCorner(n - r, n - r) = local.gaussian_matrix(n - r, n - r);
    }
    return CMatrix(sp->U * T_eig * sp->U.adjoint());
  };

  TheoremInstance inst;
  inst.A = sp->A;
  inst.T = make_T(d1);
  inst.T2 = make_T(d2);
  return inst;
}

// Two independent factor instances for the tensor statements. When
// `same_weight` is set the second factor reuses the first weight. Factor
// conditioning is capped at 1e4 so the product weight stays inside the
// 1e8 regime build_space supports.
auto gen_tensor(bool same_weight) {
  return [same_weight](Rng& rng, int n, int /*r*/, const RunProfile& prof) {
    const double cond = std::min(prof.cond_cap, 1e4);
    const int n1 = n;
    const int r1 = rng.uniform_int(1, n1);
    GenSpec g1{rng.next_u64(), n1, r1, cond, OpClass::in_BA};
    SemiSpacePtr sp1 = gen_space(g1);

    TheoremInstance inst;
    inst.A = sp1->A;
    inst.T = gen_operator(g1, sp1).T();
    if (same_weight) {
      GenSpec g2 = g1;
      g2.seed = rng.next_u64();
      inst.A2 = sp1->A;
      inst.T2 = gen_operator(g2, sp1).T();
    } else {
      const int n2 = rng.uniform_int(2, 4);
      GenSpec g2{rng.next_u64(), n2, rng.uniform_int(1, n2), cond, OpClass::in_BA};
      SemiSpacePtr sp2 = gen_space(g2);
      inst.A2 = sp2->A;
      inst.T2 = gen_operator(g2, sp2).T();
    }
    return inst;
  };
}

TensorInstance rebuild_tensor(const TheoremInstance& inst) {
  if (!inst.A2 || !inst.T2)
    throw ValidationError("tensor statement requires a second (A, T) pair");
  SemiSpacePtr sp1 = build_space(inst.A);
  SemiSpacePtr sp2 = build_space(*inst.A2);
  return tensor_instance(SemiOperator(sp1, inst.T), SemiOperator(sp2, *inst.T2));
}

double spectrum_tol_of(const BuiltOp& b) {
  return b.sp->cfg.spectrum_tol(b.sp->norm_A(), norm2(b.op.T()));
}

// ---------------------------------------------------------------------------
// Evaluators
// ---------------------------------------------------------------------------

TrialEval ev_douglas(const TheoremInstance& inst, const RunProfile&) {
  const ToleranceConfig cfg;
  const CMatrix& E1 = inst.A;
  const CMatrix& E2 = inst.T;
  const CMatrix D = reduced_solution(E1, E2, cfg);

  const double d_solve = norm2(E1 * D - E2) / (1.0 + norm2(E2));
  const CMatrix E1adj = E1.adjoint();
  const CMatrix range_resid = D - E1adj * (pinv(E1adj, cfg) * D);
  const double d_range = norm2(range_resid) / (1.0 + norm2(D));

  CMatrix stacked(D.rows() + E2.rows(), D.cols());
  stacked.topRows(D.rows()) = D / std::max(norm2(D), 1e-300);
  stacked.bottomRows(E2.rows()) = E2 / std::max(norm2(E2), 1e-300);
  const Eigen::Index rs = rank_of(stacked, cfg);
  const double d_null =
      (rs != rank_of(D, cfg) || rs != rank_of(E2, cfg)) ? 1.0 : 0.0;

  return {std::max({d_solve, d_range, d_null}), 1e-7, false};
}

TrialEval ev_sharp_identity(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const CMatrix Ts = sharp(b.op);
  const double scale = 1.0 + b.sp->norm_A() * norm2(b.op.T());
  const double defect = norm2(b.op.T().adjoint() * b.sp->A - b.sp->A * Ts) / scale;
  return {defect, 1e-9, false};
}

TrialEval ev_double_sharp(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const CMatrix Ts = sharp(b.op);
  const CMatrix Tss = sharp(b.op.derived(Ts));
  const CMatrix Tsss = sharp(b.op.derived(Tss));
  const CMatrix PTP = b.sp->P * b.op.T() * b.sp->P;
  const double na = b.sp->norm_A();
  const double d1 = norm2(Tss - PTP) / (1.0 + na * norm2(b.op.T()));
  const double d2 = norm2(Tsss - Ts) / (1.0 + na * norm2(Ts));
  return {std::max(d1, d2), 1e-9, false};
}

TrialEval ev_product_sharp(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SemiOperator opW(b.sp, *inst.T2);
  const SemiOperator opTW(b.sp, b.op.T() * opW.T());
  const CMatrix lhs = sharp(opTW);
  const CMatrix rhs = sharp(opW) * sharp(b.op);
  const double scale = 1.0 + b.sp->norm_A() * norm2(b.op.T()) * norm2(opW.T());
  return {norm2(lhs - rhs) / scale, 1e-9, false};
}

TrialEval ev_norm_identities(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const double a = a_norm(b.op);
  const CMatrix Ts = sharp(b.op);
  const double ns = a_norm(b.op.derived(Ts));
  const double nst = std::sqrt(a_norm(b.op.derived(Ts * b.op.T())));
  const double defect = std::max(std::abs(a - ns), std::abs(a - nst)) / (1.0 + a);
  return {defect, 1e-7, false};
}

Poly2 draw_monomials(Rng& rng, int max_deg, int terms) {
  Poly2 q;
  q.push_back({Complex(rng.normal(), rng.normal()), 0, 0});
  for (int t = 0; t < terms; ++t) {
    const int xr = rng.uniform_int(0, max_deg);
    const int ys = rng.uniform_int(0, max_deg - xr);
    q.push_back({Complex(rng.normal(), rng.normal()), xr, ys});
  }
  return q;
}

double poly_scale(const Poly2& q, double norm_m) {
  double s = 1.0;
  for (const Monomial& m : q)
    s += std::abs(m.coeff) * std::pow(1.0 + norm_m, m.xpow + m.ypow);
  return s;
}

TrialEval ev_poly_norm(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  Rng prng(derive_stream(inst.seed, "poly-norm", 0));
  const CMatrix& M = b.op.M();
  const double nm = norm2(M);
  double defect = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Poly2 q = draw_monomials(prng, 3, 3);
    const double lhs = a_norm(b.op.derived(poly_in_T_Tsharp(b.op, q)));
    const double rhs = norm2(poly_eval(q, M, M.adjoint()));
    defect = std::max(defect, std::abs(lhs - rhs) / poly_scale(q, nm));
  }
  return {defect, 1e-7, false};
}

TrialEval ev_gamma_diamond(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const double g = gamma_A(b.op); // smallest nonzero singular value of T-diamond
  const double g_m = smallest_nonzero_sv(b.op.M(), b.sp->cfg);
  return {std::abs(g - g_m) / (1.0 + g), 1e-7, false};
}

TrialEval ev_gamma_sharp(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const double g = gamma_A(b.op);
  const double gs = gamma_A(b.op.derived(sharp(b.op)));
  return {std::abs(g - gs) / (1.0 + g), 1e-7, false};
}

TrialEval ev_gamma_inv_bound(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const double sigma_min = smallest_sv(b.op.M());
  const double thr = b.sp->cfg.singular_tol(norm2(b.op.M()));
  TrialEval ev;
  ev.hypothesis_ambiguous = amb(sigma_min, thr);
  if (sigma_min <= thr) return ev; // vacuous
  const AInverseResult inv = a_invert(b.op);
  ev.defect = std::max(0.0, 1.0 - gamma_A(b.op) * inv.a_norm_S);
  ev.tol = 1e-6;
  return ev;
}

TrialEval ev_radius_chain(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const double r_a = spectral_radius_A(b.op);
  const double norm_a = a_norm(b.op);
  const double w_a = numrange(b.op, kSweepAngles).radius;
  const double defect =
      std::max(r_a - w_a - sweep_gap(w_a), w_a - norm_a) / (1.0 + norm_a);
  return {std::max(defect, 0.0), 1e-7, false};
}

TrialEval ev_wa_convexity(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const NumRangeResult nr = numrange(b.op, kSweepAngles);
  const CMatrix& M = b.op.M();
  const double tol = hull_tol(norm2(M));
  Rng prng(derive_stream(inst.seed, "wa-convexity", 0));
  double defect = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto i = static_cast<std::size_t>(prng.uniform_int(0, kSweepAngles - 1));
    const auto j = static_cast<std::size_t>(prng.uniform_int(0, kSweepAngles - 1));
    const Complex mid = 0.5 * (nr.boundary[i] + nr.boundary[j]);
    defect = std::max(defect, point_to_hull_distance(mid, nr.hull));
  }
  for (int k = 0; k < 200; ++k) {
    CVector y = prng.gaussian_matrix(M.rows(), 1);
    y.normalize();
    const Complex v = (y.adjoint() * (M * y))(0);
    defect = std::max(defect, point_to_hull_distance(v, nr.hull));
  }
  return {defect, tol, false};
}

TrialEval ev_app_in_wa(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const NumRangeResult nr = numrange(b.op, kSweepAngles);
  const SpectrumSet spec = a_approx_spectrum(b.op);
  double defect = 0.0;
  for (const Complex& lam : spec.values)
    defect = std::max(defect, point_to_hull_distance(lam, nr.hull));
  return {defect, hull_tol(norm2(b.op.M())), false};
}

TrialEval ev_app_in_sigma(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SpectrumSet app = a_approx_spectrum(b.op);
  const SpectrumSet sig = a_spectrum(b.op, SpectrumMethod::definitional);
  const double defect = hausdorff(app.values, sig.values);
  return {defect, 1e-7 * (1.0 + norm2(b.op.M())), false};
}

TrialEval ev_finite_dim_equality(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SpectrumSet sig = a_spectrum(b.op, SpectrumMethod::definitional);
  const SpectrumSet pt = a_point_spectrum(b.op);
  const SpectrumSet app = a_approx_spectrum(b.op);
  const double defect =
      std::max(hausdorff(sig.values, pt.values), hausdorff(sig.values, app.values));
  return {defect, 1e-7 * (1.0 + norm2(b.op.M())), false};
}

TrialEval ev_pt_tp(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SpectrumSet s = a_approx_spectrum(b.op);
  const SpectrumSet s_pt = a_approx_spectrum(b.op.derived(b.sp->P * b.op.T()));
  const SpectrumSet s_tp = a_approx_spectrum(b.op.derived(b.op.T() * b.sp->P));
  const double tol = spectrum_tol_of(b);
  double defect = std::max(hausdorff(s.values, s_pt.values),
                           hausdorff(s.values, s_tp.values));
  if (!sets_match(s, s_pt, tol) || !sets_match(s, s_tp, tol))
    defect = std::max(defect, 2.0 * tol);
  return {defect, tol, false};
}

TrialEval ev_inverse_reciprocal(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const double sigma_min = smallest_sv(b.op.M());
  const double thr = b.sp->cfg.singular_tol(norm2(b.op.M()));
  TrialEval ev;
  ev.hypothesis_ambiguous = amb(sigma_min, thr);
  if (sigma_min <= thr) return ev;
  const AInverseResult inv = a_invert(b.op);
  const SemiOperator opS(b.sp, inv.S);
  const SpectrumSet spec_s = a_approx_spectrum(opS);
  SpectrumSet recip;
  for (const Complex& lam : a_approx_spectrum(b.op).values)
    recip.values.push_back(1.0 / lam);
  const double tol =
      b.sp->cfg.spectrum_tol(b.sp->norm_A(), norm2(inv.S));
  ev.defect = hausdorff(spec_s.values, recip.values);
  if (!sets_match(spec_s, recip, tol)) ev.defect = std::max(ev.defect, 2.0 * tol);
  ev.tol = tol;
  return ev;
}

TrialEval ev_power_inclusion(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SpectrumSet base = a_approx_spectrum(b.op);
  double ratio = 0.0;
  CMatrix Tn = b.op.T();
  for (int p = 2; p <= 4; ++p) {
    Tn = Tn * b.op.T();
    const SpectrumSet spec_n = a_approx_spectrum(b.op.derived(Tn));
    const double tol_n = b.sp->cfg.spectrum_tol(b.sp->norm_A(), norm2(Tn));
    for (const Complex& lam : base.values) {
      const double d = min_distance(std::pow(lam, p), spec_n.values);
      ratio = std::max(ratio, d / tol_n);
    }
  }
  return {ratio, 1.0, false};
}

TrialEval ev_conjugate_diamond(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SpectrumSet sig = a_spectrum(b.op);
  const SpectrumSet sig_d = a_spectrum(b.op.derived(diamond(b.op)));
  const SpectrumSet sig_s = a_spectrum(b.op.derived(sharp(b.op)));
  const double defect = std::max(hausdorff(conj_of(sig_d.values), sig.values),
                                 hausdorff(conj_of(sig_s.values), sig.values));
  return {defect, spectrum_tol_of(b), false};
}

TrialEval ev_double_diamond(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SemiOperator opD = b.op.derived(diamond(b.op));
  if (!opD.cls().in_BA_half)
    return {kFailed, spectrum_tol_of(b), false}; // diamond escaped the class
  const SemiOperator opDD = b.op.derived(diamond(opD));
  const SpectrumSet app = a_approx_spectrum(b.op);
  const SpectrumSet app_dd = a_approx_spectrum(opDD);
  const double tol = spectrum_tol_of(b);
  double defect = hausdorff(app.values, app_dd.values);
  if (!sets_match(app, app_dd, tol)) defect = std::max(defect, 2.0 * tol);
  return {defect, tol, false};
}

TrialEval ev_boundary_inclusion(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SpectrumSet sig = a_spectrum(b.op);
  std::vector<Complex> cover = a_approx_spectrum(b.op).values;
  for (const Complex& z :
       conj_of(a_approx_spectrum(b.op.derived(diamond(b.op))).values))
    cover.push_back(z);
  double defect = 0.0;
  for (const Complex& lam : sig.values)
    defect = std::max(defect, min_distance(lam, cover));
  return {defect, spectrum_tol_of(b), false};
}

TrialEval ev_nonempty(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  return {a_spectrum(b.op).values.empty() ? 1.0 : 0.0, 0.5, false};
}

TrialEval ev_product_invertibility(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SemiOperator opW(b.sp, *inst.T2);
  const SemiOperator opTW(b.sp, b.op.T() * opW.T());

  // Hypothesis: the A-adjoints commute.
  const CMatrix Ts = sharp(b.op), Ws = sharp(opW);
  const double comm_scale = 1.0 + norm2(Ts) * norm2(Ws);
  if (norm2(Ts * Ws - Ws * Ts) / comm_scale > 1e-8)
    return {kFailed, 0.5, false};

  const bool both = is_a_invertible_value(b.op) && is_a_invertible_value(opW);
  const bool prod = is_a_invertible_value(opTW);
  TrialEval ev;
  const double thr1 = b.sp->cfg.singular_tol(norm2(b.op.M()));
  const double thr2 = b.sp->cfg.singular_tol(norm2(opW.M()));
  const double thr3 = b.sp->cfg.singular_tol(norm2(opTW.M()));
  ev.hypothesis_ambiguous = amb(smallest_sv(b.op.M()), thr1) ||
                            amb(smallest_sv(opW.M()), thr2) ||
                            amb(smallest_sv(opTW.M()), thr3);
  ev.defect = (both == prod) ? 0.0 : 1.0;
  ev.tol = 0.5;
  return ev;
}

TrialEval ev_selfadjoint_real_range(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const auto [sa, sa_res] = is_a_selfadjoint(b.op);
  const auto [realw, im_res] = is_real_range(b.op, b.sp->cfg.set_match);
  const CMatrix& M = b.op.M();
  const double nm = norm2(M);
  const double herm_res = norm2(M - M.adjoint()) / (1.0 + nm);
  const bool herm = herm_res <= b.sp->cfg.set_match;

  TrialEval ev;
  ev.hypothesis_ambiguous = amb(sa_res, b.sp->cfg.set_match) ||
                            amb(im_res, b.sp->cfg.set_match * (1.0 + nm)) ||
                            amb(herm_res, b.sp->cfg.set_match);
  ev.defect = (sa == realw && realw == herm) ? 0.0 : 1.0;
  ev.tol = 0.5;
  return ev;
}

TrialEval ev_inverse_selfadjoint(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const double sigma_min = smallest_sv(b.op.M());
  const double thr = b.sp->cfg.singular_tol(norm2(b.op.M()));
  TrialEval ev;
  ev.tol = 0.5;
  ev.hypothesis_ambiguous = amb(sigma_min, thr);
  if (sigma_min <= thr) return ev; // vacuous: not A-invertible
  const AInverseResult inv = a_invert(b.op);
  const auto [sa_t, res_t] = is_a_selfadjoint(b.op);
  const auto [sa_s, res_s] = is_a_selfadjoint(b.op.derived(inv.S));
  ev.hypothesis_ambiguous =
      ev.hypothesis_ambiguous || amb(res_t, b.sp->cfg.set_match) ||
      amb(res_s, b.sp->cfg.set_match);
  ev.defect = (sa_t == sa_s) ? 0.0 : 1.0;
  return ev;
}

// Shared by the A-normal and A-hyponormal equivalences: the defining
// quadratic form T*AT - (T#)* A T# compared against the compression
// commutator.
struct NormalRoutes {
  double def_residual;  // |T*AT - T#*AT#| / scale   (norm-equality route)
  double def_min;       // most negative eigenvalue of the form, scaled
  double comp_residual; // |M*M - MM*| / (1 + |M|^2)
  double comp_min;      // most negative eigenvalue of the commutator, scaled
};

NormalRoutes normal_routes(const BuiltOp& b) {
  const SemiSpace& sp = *b.sp;
  const CMatrix Ts = sharp(b.op);
  const CMatrix G = b.op.T().adjoint() * sp.A * b.op.T() -
                    Ts.adjoint() * sp.A * Ts;
  const double nt = norm2(b.op.T());
  const double g_scale = 1.0 + sp.norm_A() * nt * nt;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (G + G.adjoint()));
  const CMatrix& M = b.op.M();
  const CMatrix C = M.adjoint() * M - M * M.adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> esc(0.5 * (C + C.adjoint()));
  const double nm = norm2(M);
  NormalRoutes r;
  r.def_residual = norm2(G) / g_scale;
  r.def_min = std::max(0.0, -es.eigenvalues()(0)) / g_scale;
  r.comp_residual = norm2(C) / (1.0 + nm * nm);
  r.comp_min = std::max(0.0, -esc.eigenvalues()(0)) / (1.0 + nm * nm);
  return r;
}

TrialEval ev_normal_iff_ta(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const NormalRoutes r = normal_routes(b);
  const double tau = b.sp->cfg.set_match;
  const bool v_def = r.def_residual <= tau;
  const bool v_comp = r.comp_residual <= tau;
  // T-diamond is normal exactly when the compression is.
  const CMatrix D = diamond(b.op);
  const double nd = norm2(D);
  const double d_res = norm2(D.adjoint() * D - D * D.adjoint()) / (1.0 + nd * nd);
  const bool v_diamond = d_res <= tau;

  TrialEval ev;
  ev.hypothesis_ambiguous =
      amb(r.def_residual, tau) || amb(r.comp_residual, tau) || amb(d_res, tau);
  ev.defect = (v_def == v_comp && v_comp == v_diamond) ? 0.0 : 1.0;
  ev.tol = 0.5;
  return ev;
}

TrialEval ev_normal_sigma_ta(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SpectrumSet sig = a_spectrum(b.op, SpectrumMethod::definitional);
  const double defect = hausdorff(sig.values, eig_of(b.op.M()));
  return {defect, 1e-7 * (1.0 + norm2(b.op.M())), false};
}

TrialEval ev_normal_app_sigma(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const double defect = hausdorff(a_approx_spectrum(b.op).values,
                                  a_spectrum(b.op, SpectrumMethod::definitional).values);
  return {defect, 1e-7 * (1.0 + norm2(b.op.M())), false};
}

TrialEval ev_spectral_mapping(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  Rng prng(derive_stream(inst.seed, "spectral-map", 0));
  const int deg = prng.uniform_int(1, 4);
  std::vector<Complex> coeffs(static_cast<std::size_t>(deg) + 1);
  for (Complex& c : coeffs) c = Complex(prng.normal(), prng.normal());

  const SpectralMapResult res = spectral_map_poly(b.op, coeffs);
  std::vector<Complex> expected;
  for (const Complex& lam : a_spectrum(b.op).values) {
    Complex acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * lam + coeffs[j];
    expected.push_back(acc);
  }
  double scale = 1.0;
  const double nm = norm2(b.op.M());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    scale += std::abs(coeffs[j]) * std::pow(1.0 + nm, static_cast<double>(j));
  return {hausdorff(res.spec.values, expected), 1e-6 * scale, false};
}

TrialEval ev_tc_spectrum(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SpectrumSet sig = a_spectrum(b.op, SpectrumMethod::definitional);
  const double defect = hausdorff(eig_of(b.op.M()), sig.values);
  return {defect, 1e-7 * (1.0 + norm2(b.op.M())), false};
}

TrialEval ev_normal_hull_equality(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const NumRangeResult nr = numrange(b.op, kSweepAngles);
  const std::vector<Complex> hull_sigma = conv_hull(a_spectrum(b.op).values);
  const double defect = hull_hausdorff(nr.hull, hull_sigma);
  return {defect, hull_tol(norm2(b.op.M())), false};
}

TrialEval ev_hyponormal_iff_tilde(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const NormalRoutes r = normal_routes(b);
  const double tau = b.sp->cfg.set_match;
  const bool v_def = r.def_min <= tau;   // |Tx|_A >= |T#x|_A for all x
  const auto [v_tilde, hypo_res] = is_a_hyponormal(b.op);
  // Finite-dimension collapse: the commutator is traceless, so one-sided
  // positivity forces normality.
  const bool v_norm = r.comp_residual <= (b.op.M().rows() + 1) * tau;

  TrialEval ev;
  ev.hypothesis_ambiguous = amb(r.def_min, tau) || amb(hypo_res, tau) ||
                            amb(r.comp_residual, tau);
  ev.defect = (v_def == v_tilde && v_tilde == v_norm) ? 0.0 : 1.0;
  ev.tol = 0.5;
  return ev;
}

TrialEval ev_hyponormal_hull(const TheoremInstance& inst, const RunProfile& prof) {
  const BuiltOp b = rebuild(inst);
  if (!is_a_hyponormal(b.op).first) return {kFailed, 0.5, false};
  return ev_normal_hull_equality(inst, prof);
}

TrialEval ev_tensor_product(const TheoremInstance& inst, const RunProfile&) {
  const TensorCheck chk = check_product_inclusion(rebuild_tensor(inst));
  return {chk.worst, chk.tol, false};
}

TrialEval ev_tensor_factor(const TheoremInstance& inst, const RunProfile&) {
  const TensorCheck chk = check_factor_inclusions(rebuild_tensor(inst));
  return {chk.worst, chk.tol, false};
}

TrialEval ev_dominant_point(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const std::vector<Complex> eigs = eig_of(b.op.M());
  Complex lam = 0.0;
  for (const Complex& z : eigs)
    if (std::abs(z) > std::abs(lam)) lam = z;

  const double nm = norm2(b.op.M());
  // Hypothesis |lambda| = |T|_A, exact for a normal compression.
  if (std::abs(std::abs(lam) - a_norm(b.op)) > 1e-7 * (1.0 + nm))
    return {kFailed, 1.0, false};

  const double thr = b.sp->cfg.singular_tol(nm);
  const double resid = approx_residual(b.op, lam) / thr;
  const double member = point_membership_general(*b.sp, b.op.T(), lam) ? 0.0 : 2.0;
  const double in_range =
      point_to_hull_distance(lam, numrange(b.op, kSweepAngles).hull) / hull_tol(nm);
  return {std::max({resid, member, in_range}), 1.0, false};
}

TrialEval ev_ra_norm_commuting(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  const SemiSpace& sp = *b.sp;
  // Hypotheses: T commutes with A^{1/2} and w_A(T) = |T|_A.
  const double comm = norm2(b.op.T() * sp.A_half - sp.A_half * b.op.T()) /
                      (1.0 + std::sqrt(sp.norm_A()) * norm2(b.op.T()));
  if (comm > 1e-8) return {kFailed, 1.0, false};
  const double norm_a = a_norm(b.op);
  const double w_a = numrange(b.op, kSweepAngles).radius;
  if (std::abs(w_a - norm_a) > sweep_gap(norm_a)) return {kFailed, 1.0, false};
  const double defect = std::abs(spectral_radius_A(b.op) - norm_a) / (1.0 + norm_a);
  return {defect / 1e-6, 1.0, false};
}

TrialEval ev_selftest_inverted(const TheoremInstance& inst, const RunProfile&) {
  const BuiltOp b = rebuild(inst);
  // Deliberately wrong direction: claims r_A >= |T|_A.
  const double defect =
      std::max(0.0, a_norm(b.op) - spectral_radius_A(b.op)) / (1.0 + a_norm(b.op));
  return {defect, 1e-7, false};
}

std::vector<TheoremDef> make_registry() {
  std::vector<TheoremDef> reg;
  auto add = [&reg](std::string id, std::string anchor, OpClass cls, double tol,
                    auto gen, auto eval, std::pair<int, int> dims = {0, 0},
                    bool self_test = false) {
    TheoremDef def;
    def.id = std::move(id);
    def.anchor = std::move(anchor);
    def.gen_class = cls;
    def.tol_factor = tol;
    def.self_test = self_test;
    def.dims_override = dims;
    def.generate = std::move(gen);
    def.evaluate = std::move(eval);
    reg.push_back(std::move(def));
  };

  auto gen_douglas = [](Rng& rng, int n, int /*r*/, const RunProfile&) {
    const int inner = rng.uniform_int(1, n);
    TheoremInstance inst;
    inst.A = rng.gaussian_matrix(n, inner) * rng.gaussian_matrix(inner, n); // E1
    inst.T = inst.A * rng.gaussian_matrix(n, n);                            // E2 = E1 C
    return inst;
  };

  add("douglas-reduced-solution", "E1 D = E2, R(D) in R(E1*), N(D) = N(E2)",
      OpClass::generic, 1e-7, gen_douglas, ev_douglas);
  add("sharp-defining-identity", "T* A = A T#", OpClass::in_BA, 1e-9,
      gen_single(OpClass::in_BA), ev_sharp_identity);
  add("double-sharp-PTP", "(T#)# = P T P and ((T#)#)# = T#", OpClass::in_BA, 1e-9,
      gen_single(OpClass::in_BA), ev_double_sharp);
  add("product-sharp", "(T W)# = W# T#", OpClass::in_BA, 1e-9,
      gen_pair(OpClass::in_BA), ev_product_sharp);
  add("norm-identities", "|T|_A = |T#|_A = |T# T|_A^(1/2)", OpClass::in_BA, 1e-7,
      gen_single(OpClass::in_BA), ev_norm_identities);
  add("poly-norm-identity", "|q(T, T#)|_A = |q(M, M*)|", OpClass::in_BA, 1e-7,
      gen_single(OpClass::in_BA), ev_poly_norm);
  add("gamma-diamond", "gamma_A(T) = gamma(T-diamond)", OpClass::in_BA, 1e-7,
      gen_single(OpClass::in_BA), ev_gamma_diamond);
  add("gamma-sharp", "gamma_A(T) = gamma_A(T#)", OpClass::in_BA, 1e-7,
      gen_single(OpClass::in_BA), ev_gamma_sharp);
  add("gamma-invertible-lower-bound", "gamma_A(T) |S|_A >= 1 for A-invertible T",
      OpClass::a_invertible, 1e-6, gen_single(OpClass::a_invertible), ev_gamma_inv_bound);
  add("radius-chain", "r_A(T) <= w_A(T) <= |T|_A", OpClass::in_BA, 1e-7,
      gen_single(OpClass::in_BA), ev_radius_chain);
  add("wA-convexity", "W_A(T) is convex", OpClass::in_BA, 1e-6,
      gen_single(OpClass::in_BA), ev_wa_convexity);
  add("app-in-closure-WA", "sigma_A_app(T) within closure of W_A(T)", OpClass::in_BA,
      1e-6, gen_single(OpClass::in_BA), ev_app_in_wa);
  add("app-in-sigmaA", "sigma_A_app(T) within sigma_A(T)", OpClass::in_BA, 1e-7,
      gen_single(OpClass::in_BA), ev_app_in_sigma);
  add("finite-dim-equality", "sigma_A = sigma_A_app = sigma_A_p at finite dimension",
      OpClass::in_BA, 1e-7, gen_single(OpClass::in_BA), ev_finite_dim_equality);
  add("PT-TP-spectra", "sigma_A_app(T) = sigma_A_app(PT) = sigma_A_app(TP)",
      OpClass::in_BA, 1e-7, gen_single(OpClass::in_BA), ev_pt_tp);
  add("inverse-reciprocal-spectrum",
      "sigma_A_app(S) = reciprocals of sigma_A_app(T) for A-invertible T",
      OpClass::a_invertible, 1e-7, gen_single(OpClass::a_invertible),
      ev_inverse_reciprocal);
  add("power-inclusion", "lambda in sigma_A_app(T) implies lambda^n in sigma_A_app(T^n)",
      OpClass::in_BA, 1.0, gen_single(OpClass::in_BA), ev_power_inclusion);
  add("conjugate-diamond-spectrum",
      "conj(sigma_A(T-diamond)) = sigma_A(T), and the same for T#", OpClass::in_BA,
      1e-7, gen_single(OpClass::in_BA), ev_conjugate_diamond);
  add("double-diamond-app", "sigma_A_app((T-diamond)-diamond) = sigma_A_app(T)",
      OpClass::in_BA, 1e-7, gen_single(OpClass::in_BA), ev_double_diamond);
  add("boundary-inclusion",
      "boundary of sigma_A(T) within sigma_A_app(T) union conj(sigma_A_app(T-diamond))",
      OpClass::in_BA, 1e-7, gen_single(OpClass::in_BA), ev_boundary_inclusion);
  add("nonempty-spectrum", "sigma_A(T) is non-empty", OpClass::in_BA, 0.5,
      gen_single(OpClass::in_BA), ev_nonempty);
  add("product-invertibility-commuting-sharps",
      "T, T' A-invertible iff T T' A-invertible, for commuting A-adjoints",
      OpClass::in_BA, 0.5, commuting_sharp_pair, ev_product_invertibility);
  add("selfadjoint-iff-real-range", "T A-selfadjoint iff W_A(T) is real",
      OpClass::a_selfadjoint, 0.5, gen_mixed(OpClass::a_selfadjoint),
      ev_selfadjoint_real_range);
  add("inverse-selfadjoint",
      "A-invertible T is A-selfadjoint iff its A-inverse is", OpClass::a_selfadjoint,
      0.5, gen_mixed(OpClass::a_selfadjoint), ev_inverse_selfadjoint);
  add("normal-iff-Ta-normal", "T A-normal iff T_a normal iff T-diamond normal",
      OpClass::a_normal, 0.5, gen_mixed(OpClass::a_normal), ev_normal_iff_ta);
  add("normal-sigma-equals-Ta-star", "sigma_A(T) = sigma(T_a*) for A-normal T",
      OpClass::a_normal, 1e-7, gen_single(OpClass::a_normal), ev_normal_sigma_ta);
  add("normal-app-equals-sigma", "sigma_A(T) = sigma_A_app(T) for A-normal T",
      OpClass::a_normal, 1e-7, gen_single(OpClass::a_normal), ev_normal_app_sigma);
  add("spectral-mapping-polynomial",
      "f(sigma_A(T)) = sigma_A of the mapped operator, polynomial f",
      OpClass::a_normal, 1e-6, gen_single(OpClass::a_normal), ev_spectral_mapping);
  add("Tc-spectrum-inclusion", "sigma(T_c) within sigma_A(T), equal at finite dimension",
      OpClass::in_BA, 1e-7, gen_single(OpClass::in_BA), ev_tc_spectrum);
  add("normal-hull-equality",
      "closure of W_A(T) = conv(sigma_A(T)) for A-normal T commuting with A",
      OpClass::commuting_with_A, 1e-6, gen_single(OpClass::commuting_with_A),
      ev_normal_hull_equality);
  add("hyponormal-iff-tilde", "T A-hyponormal iff T~ hyponormal",
      OpClass::a_normal, 0.5, gen_mixed(OpClass::a_normal), ev_hyponormal_iff_tilde);
  add("hyponormal-hull-equality",
      "closure of W_A(T) = conv(sigma_A(T)) for A-hyponormal T commuting with A",
      OpClass::commuting_with_A, 1e-6, gen_single(OpClass::commuting_with_A),
      ev_hyponormal_hull);
  add("tensor-product-inclusion",
      "sigma_app(T1) sigma_app(T2) within sigma_app(T1 (x) T2)", OpClass::in_BA,
      1e-7, gen_tensor(false), ev_tensor_product, {2, 4});
  add("tensor-factor-inclusion",
      "sigma(T1 (x) I) within sigma(T1), and symmetrically", OpClass::in_BA, 1e-7,
      gen_tensor(false), ev_tensor_factor, {2, 4});
  add("tensor-factor-equality",
      "sigma_app(T1 (x) I) = sigma_app(T1) over a common weight", OpClass::in_BA,
      1e-7, gen_tensor(true), ev_tensor_factor, {2, 4});
  add("dominant-point-spectrum",
      "lambda in W_A(T) with |lambda| = |T|_A is an A-eigenvalue",
      OpClass::dominant_eigen, 1.0, gen_single(OpClass::dominant_eigen),
      ev_dominant_point);
  add("rA-equals-norm-commuting",
      "w_A(T) = |T|_A and T A^{1/2} = A^{1/2} T imply r_A(T) = |T|_A",
      OpClass::commuting_with_A, 1.0, gen_single(OpClass::commuting_with_A),
      ev_ra_norm_commuting);
  add("selftest-inverted-radius-chain",
      "deliberately inverted inequality exercising the failure path",
      OpClass::in_BA, 1e-7, gen_single(OpClass::in_BA), ev_selftest_inverted,
      {0, 0}, /*self_test=*/true);
  return reg;
}

} // namespace

const std::vector<TheoremDef>& theorem_registry() {
  static const std::vector<TheoremDef> registry = make_registry();
  return registry;
}

} // namespace semih
