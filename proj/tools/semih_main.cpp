#include "semih/serialize.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace semih;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitConditioning = 3;
constexpr int kExitViolation = 4;

struct CommonOpts {
  std::string path;
  double tol_rank = -1.0;
  double tol_set = -1.0;

  ToleranceConfig config() const {
    ToleranceConfig cfg;
    if (tol_rank > 0.0) cfg.rank_rel = tol_rank;
    if (tol_set > 0.0) cfg.set_match = tol_set;
    cfg.validate();
    return cfg;
  }
};

Json membership_json(const MembershipClass& cls) {
  Json j;
  j["in_BA_upper"] = cls.in_BA_upper;
  j["in_BA_half"] = cls.in_BA_half;
  j["in_BA"] = cls.in_BA;
  return j;
}

int cmd_info(const CommonOpts& opts) {
  const ProblemFile pf = load_problem(opts.path);
  if (!pf.T) throw ValidationError("info: problem file must provide 'T'");
  SemiSpacePtr sp = build_space(pf.A, opts.config());
  const SemiOperator op(sp, *pf.T);

  Json out;
  out["input"] = Json{{"dim", pf.dim}, {"A", matrix_to_json(pf.A)}, {"T", matrix_to_json(*pf.T)}};
  out["rank"] = sp->r;
  out["membership"] = membership_json(op.cls());

  if (op.has_compression()) {
    out["a_norm"] = a_norm(op);
    out["r_A"] = spectral_radius_A(op);
    const NumRangeResult nr = numrange(op);
    out["w_A"] = nr.radius;
  }
  if (op.cls().in_BA) {
    out["gamma_A"] = gamma_A(op);
    const ClassReport rep = classify_operator(op);
    Json cj;
    cj["a_selfadjoint"] = Json{{"value", rep.a_selfadjoint}, {"residual", rep.selfadjoint_residual}};
    cj["a_normal"] = Json{{"value", rep.a_normal}, {"residual", rep.normal_residual}};
    cj["a_hyponormal"] = Json{{"value", rep.a_hyponormal}, {"residual", rep.hyponormal_residual}};
    cj["a_invertible"] = Json{{"value", rep.a_invertible}, {"sigma_min", rep.invertible_sigma_min}};
    cj["a_normal_commutation"] =
        Json{{"value", rep.a_normal_commutation}, {"residual", rep.commutation_residual}};
    out["classification"] = std::move(cj);
  }
  std::cout << dump_json17(out);
  return kExitOk;
}

int cmd_spectrum(const CommonOpts& opts, const std::string& kind, const std::string& method) {
  const ProblemFile pf = load_problem(opts.path);
  if (!pf.T) throw ValidationError("spectrum: problem file must provide 'T'");
  SemiSpacePtr sp = build_space(pf.A, opts.config());
  const SemiOperator op(sp, *pf.T);

  SpectrumSet spec;
  if (kind == "a") {
    spec = a_spectrum(op, method == "definitional" ? SpectrumMethod::definitional
                                                   : SpectrumMethod::compressed);
  } else if (kind == "point") {
    spec = a_point_spectrum(op);
  } else if (kind == "approx") {
    spec = a_approx_spectrum(op);
  } else {
    throw ValidationError("spectrum: unknown kind '" + kind + "'");
  }
  Json out;
  out["kind"] = kind;
  out["method"] = method;
  out["spectrum"] = spectrum_to_json(spec);
  std::cout << dump_json17(out);
  return kExitOk;
}

int cmd_numrange(const CommonOpts& opts, int angles, const std::string& out_path) {
  const ProblemFile pf = load_problem(opts.path);
  if (!pf.T) throw ValidationError("numrange: problem file must provide 'T'");
  SemiSpacePtr sp = build_space(pf.A, opts.config());
  const SemiOperator op(sp, *pf.T);

  NumRangeResult nr;
  if (op.has_compression()) {
    nr = numrange(op, angles);
  } else {
    // No compression exists; fall back to Monte-Carlo sampling and say so.
    nr = numrange_sample_general(*sp, *pf.T, angles * 20, /*seed=*/12345);
    nr.angles.resize(nr.boundary.size(), 0.0);
  }

  std::string csv;
  char line[128];
  for (std::size_t k = 0; k < nr.boundary.size(); ++k) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n",
                  k < nr.angles.size() ? nr.angles[k] : 0.0,
                  nr.boundary[k].real(), nr.boundary[k].imag());
    csv += line;
  }

  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out_path);
    if (!f) throw ValidationError("numrange: cannot write " + out_path);
    f << csv;
    Json out;
    out["w_A"] = nr.radius;
    out["angles"] = angles;
    out["approximate"] = nr.approximate;
    out["csv"] = out_path;
    std::cout << dump_json17(out);
  }
  return kExitOk;
}

int cmd_verify(const std::string& theorem, int trials, std::uint64_t seed,
               const std::string& dims_str, const std::string& profile_name,
               const std::string& out_path) {
  const auto sep = dims_str.find(':');
  if (sep == std::string::npos)
    throw ValidationError("verify: --dims must look like 2:6");
  const std::pair<int, int> dims{std::stoi(dims_str.substr(0, sep)),
                                 std::stoi(dims_str.substr(sep + 1))};
  const RunProfile profile =
      profile_name == "stress" ? stress_profile() : standard_profile();

  std::vector<PropertyReport> reports;
  if (theorem == "all")
    reports = run_all_theorems(trials, seed, dims, profile);
  else
    reports.push_back(check_theorem(theorem, trials, seed, dims, profile));

  int failures = 0;
  Json arr = Json::array();
  for (const PropertyReport& rep : reports) {
    failures += rep.failures;
    arr.push_back(report_to_json(rep));
  }
  Json out;
  out["theorem"] = theorem;
  out["trials"] = trials;
  out["seed"] = seed;
  out["dims"] = dims_str;
  out["profile"] = profile_name;
  out["failures_total"] = failures;
  out["reports"] = std::move(arr);

  const std::string text = dump_json17(out);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw ValidationError("verify: cannot write " + out_path);
    f << text;
  }
  return failures == 0 ? kExitOk : kExitViolation;
}

int cmd_tensor(const CommonOpts& opts, const std::string& check) {
  const ProblemFile pf = load_problem(opts.path);
  if (!pf.T) throw ValidationError("tensor: problem file must provide 'T'");
  if (!pf.T2) throw ValidationError("tensor: problem file must provide 'T2'");
  const ToleranceConfig cfg = opts.config();
  SemiSpacePtr sp1 = build_space(pf.A, cfg);
  SemiSpacePtr sp2 = pf.A2 ? build_space(*pf.A2, cfg) : sp1;
  const TensorInstance ti =
      tensor_instance(SemiOperator(sp1, *pf.T), SemiOperator(sp2, *pf.T2));

  const TensorCheck chk =
      check == "product" ? check_product_inclusion(ti) : check_factor_inclusions(ti);
  Json out;
  out["check"] = check;
  out["pass"] = chk.pass;
  out["worst"] = chk.worst;
  out["tol"] = chk.tol;
  out["detail"] = chk.detail;
  std::cout << dump_json17(out);
  return chk.pass ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"semih: operator calculus and theorem checks on semi-Hilbertian spaces"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string kind = "a", method = "compressed", check = "product";
  std::string out_path, dims_str = "2:6", theorem = "all", profile = "standard";
  int angles = 720, trials = 200;
  std::uint64_t seed = 7;

  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("path", opts.path, "problem JSON file")->required();
    cmd->add_option("--tol-rank", opts.tol_rank, "relative rank cutoff override");
    cmd->add_option("--tol-set", opts.tol_set, "set-matching radius override");
  };

  CLI::App* info = app.add_subcommand("info", "rank, memberships, norms and class flags");
  add_common(info);

  CLI::App* spectrum = app.add_subcommand("spectrum", "A-spectrum variants");
  add_common(spectrum);
  spectrum->add_option("--kind", kind, "a | point | approx")
      ->check(CLI::IsMember({"a", "point", "approx"}));
  spectrum->add_option("--method", method, "compressed | definitional")
      ->check(CLI::IsMember({"compressed", "definitional"}));

  CLI::App* nrange = app.add_subcommand("numrange", "A-numerical range boundary sweep");
  add_common(nrange);
  nrange->add_option("--angles", angles, "number of sweep angles (>= 8)")
      ->check(CLI::Range(8, 1 << 20));
  nrange->add_option("--out", out_path, "CSV output path (theta,re,im)");

  CLI::App* verify = app.add_subcommand("verify", "randomized theorem verification");
  verify->add_option("--theorem", theorem, "theorem id or 'all'");
  verify->add_option("--trials", trials, "trials per theorem")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--dims", dims_str, "dimension range, e.g. 2:6");
  verify->add_option("--profile", profile, "standard | stress")
      ->check(CLI::IsMember({"standard", "stress"}));
  verify->add_option("--out", out_path, "also write the report to this path");

  CLI::App* tensor = app.add_subcommand("tensor", "tensor-product spectrum checks");
  add_common(tensor);
  tensor->add_option("--check", check, "product | factor")
      ->check(CLI::IsMember({"product", "factor"}));

  CLI::App* list = app.add_subcommand("list-theorems", "registry ids, anchors and tolerances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (info->parsed()) return cmd_info(opts);
    if (spectrum->parsed()) return cmd_spectrum(opts, kind, method);
    if (nrange->parsed()) return cmd_numrange(opts, angles, out_path);
    if (verify->parsed())
      return cmd_verify(theorem, trials, seed, dims_str, profile, out_path);
    if (tensor->parsed()) return cmd_tensor(opts, check);
    if (list->parsed()) {
      Json arr = Json::array();
      for (const TheoremInfo& ti : list_theorems())
        arr.push_back(Json{{"id", ti.id},
                           {"anchor", ti.anchor},
                           {"generator", op_class_name(ti.gen_class)},
                           {"tolerance", ti.tolerance},
                           {"self_test", ti.self_test}});
      std::cout << dump_json17(Json{{"theorems", std::move(arr)}});
      return kExitOk;
    }
  } catch (const ConditioningError& e) {
    std::cerr << "conditioning error: " << e.what() << "\n";
    return kExitConditioning;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
