#include <doctest.h>

#include "mintwist/algebra.hpp"
#include "mintwist/models.hpp"

using namespace mintwist;

namespace {

AlgebraElement c_m2_element(const AlgebraSpec& spec, Complex c,
                            const ComplexMatrix& m) {
  AlgebraElement e = zero_element(spec);
  e.components[0](0, 0) = c;
  e.components[1] = m;
  return e;
}

}  // namespace

TEST_CASE("summand labels round trip") {
  CHECK(summand_from_label("C").kind == SummandKind::Complex);
  CHECK(summand_from_label("H").kind == SummandKind::Quaternion);
  CHECK(summand_from_label("M(3)").n == 3);
  CHECK(full_matrix_summand(3).label() == "M(3)");
  CHECK_THROWS_AS(summand_from_label("X"), SchemaError);
  CHECK_THROWS_AS(full_matrix_summand(0), SpecMismatch);
  CHECK_THROWS_AS(make_algebra({}), SpecMismatch);
}

TEST_CASE("algebra basis sizes") {
  CHECK(algebra_basis(make_algebra({complex_summand()})).size() == 2);
  CHECK(algebra_basis(make_algebra({quaternion_summand()})).size() == 4);
  CHECK(algebra_basis(make_algebra({full_matrix_summand(3)})).size() == 18);
  CHECK(make_algebra({complex_summand(), full_matrix_summand(2)})
            .real_dimension() == 10);
}

TEST_CASE("quaternion basis elements satisfy the matrix pattern") {
  const AlgebraSpec spec = make_algebra({quaternion_summand()});
  for (const auto& e : algebra_basis(spec)) {
    CHECK(element_matches(spec, e));
  }
  // The four units realize the quaternion relations i^2 = j^2 = k^2 = -1.
  const auto basis = algebra_basis(spec);
  for (std::size_t u = 1; u < 4; ++u) {
    const auto square = multiply(basis[u], basis[u]);
    CHECK(approx_equal(square.components[0], -identity(2), Tolerance(1e-14)));
  }
  AlgebraElement bad = zero_element(spec);
  bad.components[0] << Complex(1, 0), Complex(2, 0), Complex(3, 0),
      Complex(4, 0);
  CHECK(!element_matches(spec, bad));
}

TEST_CASE("scalar representation on C^3") {
  const Representation rep = make_representation(
      make_algebra({complex_summand()}), {RepBlock{0, 3, false}});
  AlgebraElement z = identity_element(rep.algebra);
  z.components[0](0, 0) = Complex(2, 0);
  CHECK(approx_equal(represent(rep, z), 2.0 * identity(3)));
  CHECK(approx_equal(represent(rep, identity_element(rep.algebra)),
                     identity(3)));
}

TEST_CASE("block representation reproduces the ten-dimensional pattern") {
  const ModelDescriptor md = toy_c_m2_on_c10();
  const Representation& rep = md.triple.rep;
  REQUIRE(rep.total_dim() == 10);

  const ComplexMatrix m = random_matrix(2, 2, 55);
  const Complex c(0.3, -0.8);
  const ComplexMatrix out = represent(rep, c_m2_element(rep.algebra, c, m));

  ComplexMatrix expected = ComplexMatrix::Zero(10, 10);
  expected.block(0, 0, 2, 2) = m;
  expected(2, 2) = c;
  expected(3, 3) = c;
  expected(4, 4) = c;
  expected.block(5, 5, 2, 2) = m;
  expected.block(7, 7, 2, 2) = m;
  expected(9, 9) = c;
  CHECK(approx_equal(out, expected, Tolerance(1e-14)));
}

TEST_CASE("represent is an involutive homomorphism on random pairs") {
  const std::vector<Representation> reps = {
      toy_c_m2_on_c10().triple.rep,
      electrodynamics_twist().triple.rep,
      make_representation(make_algebra({quaternion_summand()}),
                          {RepBlock{0, 2, false}}),
      make_representation(make_algebra({complex_summand()}),
                          {RepBlock{0, 2, true}}),  // conjugated block
  };
  for (const auto& rep : reps) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      const AlgebraElement x = random_element(rep.algebra, 2 * trial);
      const AlgebraElement y = random_element(rep.algebra, 2 * trial + 1);
      CHECK(max_norm(represent(rep, multiply(x, y)) -
                     represent(rep, x) * represent(rep, y)) < 1e-10);
      CHECK(max_norm(represent(rep, star(x)) -
                     represent(rep, x).adjoint()) < 1e-10);
    }
  }
}

TEST_CASE("faithfulness of the two half representations") {
  const AlgebraSpec spec =
      make_algebra({complex_summand(), full_matrix_summand(2)});
  // pi+ acts as diag(m, c, c, c), pi- as diag(m, m, c).
  const Representation plus = make_representation(
      spec, {RepBlock{1, 1, false}, RepBlock{0, 3, false}});
  const Representation minus = make_representation(
      spec, {RepBlock{1, 2, false}, RepBlock{0, 1, false}});
  CHECK(check_faithful(plus));
  CHECK(check_faithful(minus));

  // Omitting a summand kills faithfulness.
  const Representation broken =
      make_representation(spec, {RepBlock{0, 4, false}});
  CHECK(!check_faithful(broken));

  CHECK(check_faithful(electrodynamics_twist().triple.rep));
}

TEST_CASE("random elements are deterministic per seed") {
  const AlgebraSpec spec = make_algebra(
      {complex_summand(), quaternion_summand(), full_matrix_summand(2)});
  const AlgebraElement a = random_element(spec, 1);
  const AlgebraElement b = random_element(spec, 1);
  const AlgebraElement c = random_element(spec, 2);
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    CHECK(approx_equal(a.components[i], b.components[i], Tolerance(1e-15)));
  }
  CHECK(!approx_equal(a.components[0], c.components[0]));
  CHECK(element_matches(spec, a));
}

TEST_CASE("represent rejects mismatched elements") {
  const Representation rep = make_representation(
      make_algebra({complex_summand()}), {RepBlock{0, 2, false}});
  const AlgebraElement wrong =
      identity_element(make_algebra({quaternion_summand()}));
  CHECK_THROWS_AS(represent(rep, wrong), SpecMismatch);
  CHECK_THROWS_AS(
      make_representation(make_algebra({complex_summand()}),
                          {RepBlock{1, 1, false}}),
      SpecMismatch);
}
