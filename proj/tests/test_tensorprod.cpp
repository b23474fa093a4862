#include "test_helpers.hpp"

using namespace semih;
using namespace semih::test;

TEST_CASE("kron: worked examples") {
  CHECK(mat_dist(kron(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)),
                 CMatrix::Identity(4, 4)) == 0.0);

  CMatrix d4 = CMatrix::Zero(4, 4);
  d4(0, 0) = 1.0;
  CHECK(mat_dist(kron(diag2(1, 0), diag2(1, 0)), d4) == 0.0);

  const CMatrix k = kron(diag2(2, 5), diag2(3, 7));
  CHECK(k(0, 0) == Complex(6.0));
  CHECK(k(1, 1) == Complex(14.0));
  CHECK(k(2, 2) == Complex(15.0));
  CHECK(k(3, 3) == Complex(35.0));
}

TEST_CASE("kron maps elementary tensors correctly") {
  Rng rng(61);
  const CMatrix X = rng.gaussian_matrix(3, 3);
  const CMatrix Y = rng.gaussian_matrix(2, 2);
  const CVector u = rng.gaussian_matrix(3, 1);
  const CVector v = rng.gaussian_matrix(2, 1);
  const CVector lhs = kron(X, Y) * CVector(kron(u, v));
  const CVector rhs = kron(CVector(X * u), CVector(Y * v));
  CHECK((lhs - rhs).norm() < 1e-12);
}

TEST_CASE("worked diagonal tensor instance: {2} x {3} = {6}") {
  const auto sp = build_space(diag2(1, 0));
  const SemiOperator t1(sp, diag2(2, 5));
  const SemiOperator t2(sp, diag2(3, 7));
  const TensorInstance ti = tensor_instance(t1, t2);
  CHECK(ti.spK->r == 1);
  CHECK(mat_dist(compress(ti.opK), mat(1, 1, {6.0})) < 1e-12);

  const TensorCheck prod = check_product_inclusion(ti);
  CHECK(prod.pass);
  const TensorCheck fac = check_factor_inclusions(ti);
  CHECK(fac.pass);
}

TEST_CASE("identity factor: compression is kron(M1, I)") {
  const auto sp = build_space(diag2(4, 1));
  const SemiOperator t1(sp, mat(2, 2, {0.0, 1.0, 0.0, 0.0}));
  const SemiOperator t2(sp, CMatrix::Identity(2, 2));
  const TensorInstance ti = tensor_instance(t1, t2);
  CHECK(ti.spK->r == 4);
  // Same eigenvalues as kron(M1, I2), up to the basis permutation.
  const CVector a = eigenvalues_sorted(compress(ti.opK));
  const CVector b = eigenvalues_sorted(kron(compress(t1), CMatrix::Identity(2, 2)));
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("classical weights: Kronecker spectrum") {
  const auto spI = build_space(CMatrix::Identity(2, 2));
  Rng rng(67);
  const SemiOperator t1(spI, rng.gaussian_matrix(2, 2));
  const SemiOperator t2(spI, rng.gaussian_matrix(2, 2));
  const TensorInstance ti = tensor_instance(t1, t2);
  CHECK(check_product_inclusion(ti).pass);
  CHECK(check_factor_inclusions(ti).pass);
}

TEST_CASE("product-space structure: roots, cross-norm, rank") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(derive_stream(71, "tensor-prop", seed));
    const int n1 = rng.uniform_int(2, 4), n2 = rng.uniform_int(2, 4);
    GenSpec g1{rng.next_u64(), n1, rng.uniform_int(1, n1), 1e2, OpClass::in_BA};
    GenSpec g2{rng.next_u64(), n2, rng.uniform_int(1, n2), 1e2, OpClass::in_BA};
    const auto sp1 = gen_space(g1);
    const auto sp2 = gen_space(g2);
    const SemiOperator op1 = gen_operator(g1, sp1);
    const SemiOperator op2 = gen_operator(g2, sp2);
    const TensorInstance ti = tensor_instance(op1, op2);

    CHECK(ti.spK->r == sp1->r * sp2->r);
    CHECK(norm2(ti.spK->A_half - kron(sp1->A_half, sp2->A_half)) <
          1e-9 * (1.0 + norm2(ti.spK->A_half)));

    // Cross-property of the product seminorm on sampled elementary tensors.
    for (int k = 0; k < 5; ++k) {
      const CVector x = rng.gaussian_matrix(n1, 1);
      const CVector y = rng.gaussian_matrix(n2, 1);
      const double lhs = a_seminorm(*ti.spK, CVector(kron(x, y)));
      const double rhs = a_seminorm(*sp1, x) * a_seminorm(*sp2, y);
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + lhs + rhs));
    }

    // Compression eigenvalues agree with kron(M1, M2) (similar by the
    // sorting permutation).
    const CVector a = eigenvalues_sorted(compress(ti.opK));
    const CVector b = eigenvalues_sorted(kron(compress(op1), compress(op2)));
    CHECK((a - b).cwiseAbs().maxCoeff() <
          1e-7 * (1.0 + norm2(compress(op1)) * norm2(compress(op2))));
  }
}

TEST_CASE("tensor_instance rejects factors outside the class") {
  const auto s10 = build_space(diag2(1, 0));
  const SemiOperator bad(s10, mat(2, 2, {0.0, 1.0, 0.0, 0.0}));
  const SemiOperator good(s10, diag2(2, 3));
  CHECK_THROWS_AS((void)tensor_instance(bad, good), ClassError);
}
