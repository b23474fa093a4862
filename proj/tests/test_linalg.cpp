#include "test_helpers.hpp"

using namespace semih;
using namespace semih::test;

TEST_CASE("herm_eig: diagonal and identity") {
  const HermEig e1 = herm_eig(diag2(1, 0));
  CHECK(e1.values(0) == doctest::Approx(0.0));
  CHECK(e1.values(1) == doctest::Approx(1.0));
  CHECK(mat_dist(e1.vectors * e1.vectors.adjoint(), CMatrix::Identity(2, 2)) < 1e-13);

  const HermEig e2 = herm_eig(CMatrix::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(e2.values(i) == doctest::Approx(1.0));
}

TEST_CASE("herm_eig: [[2,1],[1,2]] has eigenvalues 1, 3") {
  // Characteristic polynomial (2 - l)^2 - 1 = 0, so l = 1, 3.
  const HermEig e = herm_eig(mat(2, 2, {2.0, 1.0, 1.0, 2.0}));
  CHECK(e.values(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.values(1) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("herm_eig: rejects non-square and non-Hermitian") {
  CHECK_THROWS_AS((void)herm_eig(CMatrix::Zero(2, 3)), ValidationError);
  CHECK_THROWS_AS((void)herm_eig(mat(2, 2, {0.0, 1.0, 0.0, 0.0})), ValidationError);
}

TEST_CASE("pinv: worked values and the Penrose oracle") {
  const ToleranceConfig cfg;
  CHECK(mat_dist(pinv(diag2(2, 0), cfg), diag2(0.5, 0)) < 1e-14);
  CHECK(mat_dist(pinv(CMatrix::Identity(3, 3), cfg), CMatrix::Identity(3, 3)) < 1e-14);

  const CMatrix ones = mat(2, 2, {1.0, 1.0, 1.0, 1.0});
  const CMatrix p = pinv(ones, cfg);
  CHECK(mat_dist(p, 0.25 * ones) < 1e-13);
  CHECK(penrose_defect(ones, p) < 1e-10);

  CHECK(norm2(pinv(CMatrix::Zero(3, 3), cfg)) == 0.0);
}

TEST_CASE("sqrt_psd: worked values") {
  const ToleranceConfig cfg;
  CHECK(mat_dist(sqrt_psd(diag2(4, 1), cfg), diag2(2, 1)) < 1e-13);
  CHECK(norm2(sqrt_psd(CMatrix::Zero(2, 2), cfg)) == 0.0);

  const CMatrix m = mat(2, 2, {2.0, 1.0, 1.0, 2.0});
  const CMatrix s = sqrt_psd(m, cfg);
  CHECK(mat_dist(s * s, m) < 1e-10 * (1.0 + norm2(m)));
  CHECK_THROWS_AS((void)sqrt_psd(diag2(1, -1), cfg), ValidationError);
}

TEST_CASE("rank_of: worked values") {
  const ToleranceConfig cfg;
  CHECK(rank_of(diag2(1, 0), cfg) == 1);
  CHECK(rank_of(CMatrix::Identity(4, 4), cfg) == 4);
  CHECK(rank_of(mat(2, 2, {1.0, 1.0, 1.0, 1.0}), cfg) == 1); // single sv = 2
  CHECK(rank_of(CMatrix::Zero(3, 3), cfg) == 0);
}

TEST_CASE("random Hermitian: reconstruction, pinv involution, sqrt commutes") {
  const ToleranceConfig cfg;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(derive_stream(2024, "linalg-prop", seed));
    const int n = rng.uniform_int(1, 8);
    const CMatrix g = rng.gaussian_matrix(n, n);
    const CMatrix h = 0.5 * (g + g.adjoint());

    const HermEig e = herm_eig(h);
    const CMatrix rebuilt =
        e.vectors * e.values.asDiagonal().toDenseMatrix().cast<Complex>() * e.vectors.adjoint();
    CHECK(norm2(rebuilt - h) < 1e-10 * (1.0 + norm2(h)));
    const CMatrix resid =
        h * e.vectors - e.vectors * e.values.asDiagonal().toDenseMatrix().cast<Complex>();
    CHECK(resid.cwiseAbs().maxCoeff() < 1e-12 * (1.0 + norm2(h)));
    CHECK((e.vectors.adjoint() * e.vectors - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <
          1e-12 * (1.0 + norm2(h)));
    for (int i = 0; i + 1 < n; ++i) CHECK(e.values(i) <= e.values(i + 1));

    CHECK(penrose_defect(g, pinv(g, cfg)) < 1e-10);
    const CMatrix pp = pinv(pinv(g, cfg), cfg);
    CHECK(norm2(pp - g) < 1e-9 * (1.0 + norm2(g)));

    const CMatrix psd = g * g.adjoint();
    const CMatrix s = sqrt_psd(psd, cfg);
    CHECK(norm2(s * s - psd) < 1e-10 * (1.0 + norm2(psd)));
    CHECK(norm2(s * psd - psd * s) < 1e-9 * (1.0 + norm2(psd) * norm2(s)));
  }
}

TEST_CASE("eigenvector phase canonicalization is reproducible") {
  const CMatrix m = mat(2, 2, {2.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 2.0});
  const HermEig a = herm_eig(m);
  const HermEig b = herm_eig(m);
  CHECK(mat_dist(a.vectors, b.vectors) == 0.0);
  for (Eigen::Index c = 0; c < 2; ++c) {
    Eigen::Index imax = 0;
    a.vectors.col(c).cwiseAbs().maxCoeff(&imax);
    CHECK(a.vectors(imax, c).imag() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(a.vectors(imax, c).real() > 0.0);
  }
}
