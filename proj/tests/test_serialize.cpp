#include "semih/serialize.hpp"
#include "test_helpers.hpp"

using namespace semih;
using namespace semih::test;

TEST_CASE("matrices round-trip bit-exactly through JSON text") {
  Rng rng(83);
  const CMatrix m = rng.gaussian_matrix(4, 4);
  const std::string text = dump_json17(matrix_to_json(m));
  const CMatrix back = matrix_from_json(Json::parse(text));
  REQUIRE(back.rows() == 4);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      CHECK(back(i, j).real() == m(i, j).real());
      CHECK(back(i, j).imag() == m(i, j).imag());
    }
}

TEST_CASE("dump_json17 keeps doubles as doubles") {
  const Json j = Json{{"x", 2.0}, {"y", 0.1}, {"k", 3}};
  const std::string text = dump_json17(j);
  CHECK(text.find("2.0") != std::string::npos);  // not bare "2"
  CHECK(text.find("\"k\": 3") != std::string::npos);
  const Json back = Json::parse(text);
  CHECK(back.at("x").is_number_float());
  CHECK(back.at("x").get<double>() == 2.0);
  CHECK(back.at("y").get<double>() == 0.1);
}

TEST_CASE("problem files validate their shape") {
  Json good;
  good["dim"] = 2;
  good["A"] = matrix_to_json(diag2(1, 0));
  good["T"] = matrix_to_json(mat(2, 2, {2.0, 0.0, 1.0, 3.0}));
  const ProblemFile pf = problem_from_json(good);
  CHECK(pf.dim == 2);
  CHECK(pf.T.has_value());
  CHECK_FALSE(pf.T2.has_value());

  Json bad = good;
  bad["T"] = matrix_to_json(CMatrix::Zero(3, 3));
  CHECK_THROWS_AS((void)problem_from_json(bad), ValidationError);
  Json bad2 = good;
  bad2.erase("dim");
  CHECK_THROWS_AS((void)problem_from_json(bad2), ValidationError);
  Json bad3 = good;
  bad3["A"][0][0] = Json::array({1.0}); // not an [re, im] pair
  CHECK_THROWS_AS((void)problem_from_json(bad3), ValidationError);
}

TEST_CASE("reports round-trip through JSON") {
  const PropertyReport rep = check_theorem("selftest-inverted-radius-chain", 6, 2, {2, 4});
  const std::string text = dump_json17(report_to_json(rep));
  const PropertyReport back = report_from_json(Json::parse(text));
  CHECK(back.theorem_id == rep.theorem_id);
  CHECK(back.trials == rep.trials);
  CHECK(back.failures == rep.failures);
  CHECK(back.worst_residual == rep.worst_residual);
  REQUIRE(back.counterexamples.size() == rep.counterexamples.size());
  for (std::size_t i = 0; i < back.counterexamples.size(); ++i) {
    CHECK(mat_dist(back.counterexamples[i].A, rep.counterexamples[i].A) == 0.0);
    CHECK(mat_dist(back.counterexamples[i].T, rep.counterexamples[i].T) == 0.0);
    CHECK(back.counterexamples[i].defect == rep.counterexamples[i].defect);
  }
}
