#include <doctest.h>

#include "mintwist/clifford.hpp"
#include "mintwist/numerics.hpp"

using namespace mintwist;

namespace {

ComplexMatrix diag3(double a, double b, double c) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("tolerance rejects non-positive bounds") {
  CHECK_THROWS_AS(Tolerance(0.0), Error);
  CHECK_THROWS_AS(Tolerance(-1e-3), Error);
  CHECK(Tolerance{}.atol == doctest::Approx(1e-10));
}

TEST_CASE("eigendecomposition of a diagonal matrix") {
  const auto eig = hermitian_eigendecompose(diag3(1, -1, -1));
  REQUIRE(eig.eigenvalues.size() == 3);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0));
  CHECK(eig.eigenvalues[2] == doctest::Approx(-1.0));
  // Standard basis vectors, phase-fixed and deterministically ordered.
  CHECK(approx_equal(eig.eigenvectors.cwiseAbs().cast<Complex>(),
                     identity(3), Tolerance(1e-12)));
}

TEST_CASE("eigendecomposition of gamma0 and of the fiber involution") {
  const GammaSet gs = build_gammas();
  for (const ComplexMatrix& m : {gs.gammas[0], krein_operator(4, 3)}) {
    const auto eig = hermitian_eigendecompose(m);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues[3] == doctest::Approx(-1.0));
    CHECK(unitarity_residual(eig.eigenvectors) < 1e-12);
  }
}

TEST_CASE("eigendecomposition rejects bad input") {
  CHECK_THROWS_AS(hermitian_eigendecompose(random_matrix(3, 2, 1)), NonSquare);
  ComplexMatrix m = random_matrix(4, 4, 2);
  CHECK_THROWS_AS(hermitian_eigendecompose(m), NotHermitian);
}

TEST_CASE("eigendecomposition reconstructs 200 random Hermitian matrices") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(trial % 16);
    const ComplexMatrix m = random_hermitian(n, 1000 + trial);
    const auto eig = hermitian_eigendecompose(m);
    ComplexMatrix lambda = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) lambda(i, i) = eig.eigenvalues[i];
    const ComplexMatrix rebuilt =
        eig.eigenvectors * lambda * eig.eigenvectors.adjoint();
    CHECK(max_norm(m - rebuilt) < 1e-9);
    CHECK(unitarity_residual(eig.eigenvectors) < 1e-9);
    for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i) {
      CHECK(eig.eigenvalues[i - 1] >= eig.eigenvalues[i] - 1e-12);
    }
  }
}

TEST_CASE("nullspace on the small fixtures") {
  CHECK(nullspace(ComplexMatrix::Zero(2, 2)).cols() == 2);
  CHECK(nullspace(identity(3)).cols() == 0);

  ComplexMatrix row(1, 2);
  row << 1, 1;
  const ComplexMatrix basis = nullspace(row);
  REQUIRE(basis.cols() == 1);
  ComplexVector expected(2);
  expected << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK((basis.col(0) - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("nullspace dimension plus rank equals cols on 200 random inputs") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const Eigen::Index rows = 1 + static_cast<Eigen::Index>(trial % 7);
    const Eigen::Index cols = 1 + static_cast<Eigen::Index>((trial / 7) % 7);
    ComplexMatrix l = random_matrix(rows, cols, 5000 + trial);
    if (trial % 3 == 0) {
      // Force rank deficiency through a low-rank factorization.
      const Eigen::Index k = std::min(rows, cols) / 2;
      l = random_matrix(rows, std::max<Eigen::Index>(k, 1), 7000 + trial) *
          random_matrix(std::max<Eigen::Index>(k, 1), cols, 9000 + trial);
    }
    const ComplexMatrix basis = nullspace(l);
    CHECK(basis.cols() + numerical_rank(l) == cols);
    if (basis.cols() > 0) {
      CHECK(max_norm(l * basis) < 1e-10);
      CHECK(unitarity_residual(basis) < 1e-10);
    }
  }
}

TEST_CASE("nullspace large-system path agrees with the direct path") {
  // 300 columns routes through the normal-matrix kernel.
  const ComplexMatrix left = random_matrix(320, 260, 42);
  const ComplexMatrix right = random_matrix(260, 300, 43);
  const ComplexMatrix l = left * right;  // rank 260, nullity 40
  const ComplexMatrix basis = nullspace(l);
  CHECK(basis.cols() == 40);
  CHECK(max_norm(l * basis) < 1e-8);
  CHECK(unitarity_residual(basis) < 1e-10);
}

TEST_CASE("kron fixtures") {
  CHECK(approx_equal(kron(identity(2), identity(2)), identity(4)));

  const GammaSet gs = build_gammas();
  const ComplexMatrix big = kron(gs.gammas[0], identity(4));
  REQUIRE(big.rows() == 16);
  // gamma0 ⊗ I4 swaps the two 8-dimensional halves.
  ComplexMatrix expected = ComplexMatrix::Zero(16, 16);
  expected.block(0, 8, 8, 8) = identity(8);
  expected.block(8, 0, 8, 8) = identity(8);
  CHECK(approx_equal(big, expected));
}

TEST_CASE("kron mixed-product and associativity laws") {
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    const ComplexMatrix a = random_matrix(2, 2, 100 + trial);
    const ComplexMatrix b = random_matrix(3, 3, 200 + trial);
    const ComplexMatrix c = random_matrix(2, 2, 300 + trial);
    const ComplexMatrix d = random_matrix(3, 3, 400 + trial);
    CHECK(max_norm(kron(a, b) * kron(c, d) -
                   kron((a * c).eval(), (b * d).eval())) < 1e-12);
    CHECK(max_norm(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("direct sum builds the diagonal example") {
  ComplexMatrix one(1, 1), minus(1, 1);
  one << 1;
  minus << -1;
  CHECK(approx_equal(direct_sum({one, minus, minus}), diag3(1, -1, -1)));
}

TEST_CASE("vec convention matches the kron identity") {
  const ComplexMatrix l = random_matrix(3, 3, 11);
  const ComplexMatrix x = random_matrix(3, 4, 12);
  const ComplexMatrix r = random_matrix(4, 4, 13);
  const ComplexVector lhs = vec((l * x * r).eval());
  const ComplexVector rhs = kron(r.transpose(), l) * vec(x);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(approx_equal(unvec(vec(x), 3, 4), x));
}

TEST_CASE("matrix JSON round trip and shape errors") {
  const ComplexMatrix m = random_matrix(3, 2, 77);
  CHECK(approx_equal(matrix_from_json(matrix_to_json(m)), m,
                     Tolerance(1e-15)));
  CHECK_THROWS_AS(matrix_from_json("[[ [1,0], [0,1] ], [ [1,0] ]]"),
                  MatrixShapeError);
  CHECK_THROWS_AS(matrix_from_json("not json"), MatrixShapeError);
}

TEST_CASE("random matrices are seed-deterministic") {
  CHECK(approx_equal(random_matrix(4, 4, 9), random_matrix(4, 4, 9),
                     Tolerance(1e-15)));
  CHECK(!approx_equal(random_matrix(4, 4, 9), random_matrix(4, 4, 10)));
}
