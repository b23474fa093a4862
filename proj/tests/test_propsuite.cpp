#include "semih/serialize.hpp"
#include "test_helpers.hpp"

using namespace semih;
using namespace semih::test;

TEST_CASE("gen_space: determinism, rank, conditioning") {
  const GenSpec gs{42, 5, 3, 1e4, OpClass::generic};
  const auto a = gen_space(gs);
  const auto b = gen_space(gs);
  CHECK(mat_dist(a->A, b->A) == 0.0); // bit-identical
  CHECK(a->r == 3);
  CHECK(a->sigma(0) / a->sigma(a->r - 1) <= 1e4);
  CHECK(a->sigma.minCoeff() >= 1.0 - 1e-12);

  const GenSpec iso{1, 3, 3, 1.0, OpClass::generic};
  const auto c = gen_space(iso);
  // cond_cap = 1 forces A = c I.
  CHECK(norm2(c->A - c->sigma(0) * CMatrix::Identity(3, 3)) < 1e-12 * c->sigma(0));
  CHECK_THROWS_AS((void)gen_space(GenSpec{1, 2, 3, 1e4, OpClass::generic}), ValidationError);
}

TEST_CASE("gen_operator: bit-identical for identical GenSpec") {
  for (OpClass cls : {OpClass::generic, OpClass::in_BA, OpClass::a_normal,
                      OpClass::dominant_eigen}) {
    const GenSpec gs{911, 5, 3, 1e4, cls};
    const auto sp = gen_space(gs);
    CHECK(mat_dist(gen_operator(gs, sp).T(), gen_operator(gs, sp).T()) == 0.0);
  }
}

TEST_CASE("gen_operator: class guarantees") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(derive_stream(73, "genop", seed));
    const int n = rng.uniform_int(2, 6);
    GenSpec gs{rng.next_u64(), n, rng.uniform_int(1, n), 1e4, OpClass::a_selfadjoint};
    const auto sp = gen_space(gs);
    CHECK(is_a_selfadjoint(gen_operator(gs, sp)).second < 1e-10);

    gs.op_class = OpClass::a_normal;
    CHECK(is_a_normal(gen_operator(gs, sp)).second < 1e-10);

    gs.op_class = OpClass::a_invertible;
    const SemiOperator inv = gen_operator(gs, sp);
    CHECK(smallest_sv(inv.M()) > 0.1);
    CHECK(is_a_normal(inv).second < 1e-10);

    gs.op_class = OpClass::commuting_with_A;
    const SemiOperator com = gen_operator(gs, sp);
    CHECK(norm2(com.T() * sp->A - sp->A * com.T()) <
          1e-10 * (1.0 + sp->norm_A() * norm2(com.T())));

    gs.op_class = OpClass::dominant_eigen;
    const SemiOperator dom = gen_operator(gs, sp);
    const CVector eigs = eigenvalues_sorted(dom.M());
    double top = 0.0, second = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
      const double a = std::abs(eigs(i));
      if (a > top) {
        second = top;
        top = a;
      } else if (a > second) {
        second = a;
      }
    }
    CHECK(top >= 1.5);
    if (eigs.size() > 1) CHECK(second <= 1.0);

    gs.op_class = OpClass::in_BA;
    CHECK(gen_operator(gs, sp).cls().in_BA);
  }
}

TEST_CASE("registry: ids unique, anchors nonempty, at least 37 entries") {
  const auto infos = list_theorems();
  CHECK(infos.size() >= 37);
  std::size_t self_tests = 0;
  for (std::size_t i = 0; i < infos.size(); ++i) {
    CHECK_FALSE(infos[i].anchor.empty());
    if (infos[i].self_test) ++self_tests;
    for (std::size_t j = i + 1; j < infos.size(); ++j) CHECK(infos[i].id != infos[j].id);
  }
  CHECK(self_tests == 1);
  CHECK(infos.size() - self_tests == 37);
}

TEST_CASE("check_theorem: representative entries pass") {
  for (const char* id : {"norm-identities", "radius-chain", "sharp-defining-identity",
                         "finite-dim-equality", "dominant-point-spectrum"}) {
    const PropertyReport rep = check_theorem(id, 25, 42, {2, 6});
    INFO(id);
    CHECK(rep.failures == 0);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.trials == 25);
  }
  CHECK_THROWS_AS((void)check_theorem("bogus", 5, 1, {2, 4}), ValidationError);
}

TEST_CASE("self-test fixture: the harness does count failures") {
  const PropertyReport rep = check_theorem("selftest-inverted-radius-chain", 20, 3, {2, 6});
  CHECK(rep.failures > 0);
  CHECK(static_cast<std::size_t>(rep.failures) == rep.counterexamples.size());
  CHECK(rep.worst_residual > 1e-7);
}

TEST_CASE("determinism: identical runs give identical serialized reports") {
  const PropertyReport a = check_theorem("gamma-sharp", 30, 9, {2, 6});
  const PropertyReport b = check_theorem("gamma-sharp", 30, 9, {2, 6});
  CHECK(dump_json17(report_to_json(a)) == dump_json17(report_to_json(b)));
  CHECK(a.worst_residual == b.worst_residual);
}

TEST_CASE("counterexamples replay to the same defect") {
  const PropertyReport rep = check_theorem("selftest-inverted-radius-chain", 10, 5, {2, 6});
  REQUIRE(rep.failures > 0);
  for (const Counterexample& ce : rep.counterexamples) {
    const Json j = counterexample_to_json(ce);
    const TheoremInstance inst = instance_from_json(Json::parse(j.dump()));
    const double defect = replay_defect(rep.theorem_id, inst);
    CHECK(std::abs(defect - ce.defect) <= 1e-12 * std::abs(ce.defect));
  }
}

TEST_CASE("stress profile runs with relaxed tolerances") {
  const PropertyReport rep =
      check_theorem("norm-identities", 10, 11, {2, 5}, stress_profile());
  CHECK(rep.trials == 10);
  CHECK(rep.failures == 0);
}

TEST_CASE("redraw machinery: ambiguous draws are redrawn and capped") {
  int calls = 0;
  TheoremDef def;
  def.id = "test-redraw";
  def.anchor = "redraw fixture";
  def.generate = [](Rng& rng, int n, int, const RunProfile&) {
    TheoremInstance inst;
    inst.A = CMatrix::Identity(n, n);
    inst.T = rng.gaussian_matrix(n, n);
    return inst;
  };
  def.evaluate = [&calls](const TheoremInstance&, const RunProfile&) {
    ++calls;
    return TrialEval{0.0, 1.0, true}; // always ambiguous
  };
  const PropertyReport rep = run_theorem(def, 2, 1, {2, 2});
  CHECK(rep.failures == 0);
  CHECK(calls == 8); // 1 + 3 redraws, per trial
}
