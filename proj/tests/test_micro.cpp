// Frozen values for the two worked micro-instances, derived by hand from
// the defining formulas before anything else was built:
//
//   E1: A = diag(1, 0), T = [[2, 0], [1, 3]]
//       rank 1, M = [2], T# = T<> = [[2, 0], [0, 0]],
//       |T|_A = gamma_A = w_A = r_A = 2, sigma_A = {2}.
//   E3: A = diag(4, 1), T = [[0, 1], [0, 0]]
//       rank 2, M = [[0, 2], [0, 0]], T# = [[0, 0], [4, 0]],
//       T<> = [[0, 0], [2, 0]], |T|_A = gamma_A = 2, w_A = 1, r_A = 0,
//       sigma_A = {0, 0}.
#include "test_helpers.hpp"

using namespace semih;
using namespace semih::test;

TEST_CASE("E1: structure") {
  const Micro m = micro_e1();
  CHECK(m.sp->r == 1);
  CHECK(mat_dist(m.sp->A_dag, diag2(1, 0)) < 1e-14);
  CHECK(mat_dist(m.sp->P, diag2(1, 0)) < 1e-14);
  CHECK(m.op.cls().in_BA);
  CHECK(m.op.cls().in_BA_half);
}

TEST_CASE("E1: adjoint calculus values") {
  const Micro m = micro_e1();
  const CMatrix expected = diag2(2, 0);
  CHECK(mat_dist(compress(m.op), mat(1, 1, {2.0})) < 1e-10);
  CHECK(mat_dist(sharp(m.op), expected) < 1e-10);
  CHECK(mat_dist(diamond(m.op), expected) < 1e-10);
  CHECK(mat_dist(double_sharp(m.op), expected) < 1e-10); // P T P
  CHECK(a_norm(m.op) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(gamma_A(m.op) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius_A(m.op) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("E1: spectra and range") {
  const Micro m = micro_e1();
  for (const SpectrumSet& s :
       {a_spectrum(m.op, SpectrumMethod::definitional), a_point_spectrum(m.op),
        a_approx_spectrum(m.op)}) {
    REQUIRE(s.values.size() == 1);
    CHECK(std::abs(s.values[0] - Complex(2.0)) < 1e-10);
  }
  // The N(A)-block eigenvalue 3 is invisible: residual |3 - 2| = 1.
  CHECK(approx_residual(m.op, Complex(3.0)) == doctest::Approx(1.0).epsilon(1e-10));

  const NumRangeResult nr = numrange(m.op, 32);
  CHECK(nr.radius == doctest::Approx(2.0).epsilon(1e-10));
  for (const Complex& z : nr.boundary) CHECK(std::abs(z - Complex(2.0)) < 1e-10);
}

TEST_CASE("E3: adjoint calculus values") {
  const Micro m = micro_e3();
  CHECK(m.sp->r == 2);
  CHECK(mat_dist(compress(m.op), mat(2, 2, {0.0, 2.0, 0.0, 0.0})) < 1e-10);
  CHECK(mat_dist(sharp(m.op), mat(2, 2, {0.0, 0.0, 4.0, 0.0})) < 1e-10);
  CHECK(mat_dist(diamond(m.op), mat(2, 2, {0.0, 0.0, 2.0, 0.0})) < 1e-10);
  // Full rank: P = I, so the double sharp returns T itself.
  CHECK(mat_dist(double_sharp(m.op), m.op.T()) < 1e-10);
  CHECK(a_norm(m.op) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(gamma_A(m.op) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius_A(m.op) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("E3: spectra, residuals, range") {
  const Micro m = micro_e3();
  const SpectrumSet s = a_spectrum(m.op, SpectrumMethod::definitional);
  REQUIRE(s.values.size() == 2);
  for (const Complex& z : s.values) CHECK(std::abs(z) < 1e-8);

  // sigma_min([[ -1, 2], [0, -1]]) = sqrt(3 - 2 sqrt(2)) = sqrt(2) - 1.
  CHECK(approx_residual(m.op, Complex(1.0)) ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-10));

  const NumRangeResult nr = numrange(m.op, 720);
  CHECK(nr.radius == doctest::Approx(1.0).epsilon(1e-9));
  for (const Complex& z : nr.boundary)
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-6); // disk of radius 1

  CHECK_FALSE(is_a_invertible_value(m.op));
  CHECK_THROWS_AS((void)a_invert(m.op), ValidationError);
}

TEST_CASE("E3: polynomial q = x y") {
  const Micro m = micro_e3();
  const Poly2 q{{Complex(1.0), 1, 1}};
  CHECK(mat_dist(poly_in_T_Tsharp(m.op, q), mat(2, 2, {4.0, 0.0, 0.0, 0.0})) < 1e-10);
}

TEST_CASE("E3: classification flags") {
  const Micro m = micro_e3();
  CHECK_FALSE(is_a_normal(m.op).first);
  CHECK_FALSE(is_a_hyponormal(m.op).first);
  CHECK_FALSE(is_a_selfadjoint(m.op).first);
  CHECK_FALSE(is_a_invertible(m.op).first);
}

TEST_CASE("selfadjoint instance: A = diag(4,1), T = [[1,1],[4,2]]") {
  const Micro m = micro_selfadjoint();
  CHECK(mat_dist(compress(m.op), mat(2, 2, {1.0, 2.0, 2.0, 2.0})) < 1e-10);
  CHECK(is_a_selfadjoint(m.op).first);
  CHECK(is_real_range(m.op, m.sp->cfg.set_match).first);

  // Eigenvalues (3 +- sqrt(17)) / 2 of the Hermitian compression.
  const double s17 = std::sqrt(17.0);
  const SpectrumSet s = a_point_spectrum(m.op);
  REQUIRE(s.values.size() == 2);
  const auto vals = s.sorted();
  CHECK(std::abs(vals[0] - Complex((3.0 - s17) / 2.0)) < 1e-10);
  CHECK(std::abs(vals[1] - Complex((3.0 + s17) / 2.0)) < 1e-10);

  // f(z) = z^2 maps the spectrum pointwise; squares sorted ascending.
  const SpectralMapResult mapped = spectral_map_poly(m.op, {0.0, 0.0, 1.0});
  const auto mv = mapped.spec.sorted();
  REQUIRE(mv.size() == 2);
  const double lo = (3.0 - s17) / 2.0, hi = (3.0 + s17) / 2.0;
  CHECK(std::abs(mv[0] - Complex(lo * lo)) < 1e-9);
  CHECK(std::abs(mv[1] - Complex(hi * hi)) < 1e-9);
}
