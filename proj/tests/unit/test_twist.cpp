#include <doctest.h>

#include "mintwist/clifford.hpp"
#include "mintwist/models.hpp"
#include "mintwist/twist.hpp"
#include "support/oracles.hpp"

using namespace mintwist;

namespace {

AlgebraElement scalar(const AlgebraSpec& spec, Complex z) {
  AlgebraElement e = zero_element(spec);
  e.components[0](0, 0) = z;
  return e;
}

DoubledElement scalar_pair(const AlgebraSpec& spec, Complex a, Complex b) {
  return DoubledElement{scalar(spec, a), scalar(spec, b)};
}

}  // namespace

TEST_CASE("twisting-operator validation") {
  const ModelDescriptor manifold = manifold_fiber_twist();
  CHECK_NOTHROW(twist_from(manifold, TwistSource::Grading));

  // T = I is excluded.
  CHECK_THROWS_AS(
      build_minimal_twist(manifold.triple, identity(4)),
      InvalidTwistOperator);
  // Wrong dimension.
  CHECK_THROWS_AS(build_minimal_twist(manifold.triple, identity(3)),
                  InvalidTwistOperator);
  // Non-involutive.
  CHECK_THROWS_AS(
      build_minimal_twist(manifold.triple,
                          (2.0 * build_gammas().chirality).eval()),
      InvalidTwistOperator);
}

TEST_CASE("twisting operator must commute with the algebra") {
  const ModelDescriptor md = toy_c_m2_on_c10();
  ComplexMatrix t = ComplexMatrix::Zero(10, 10);
  // Hermitian involution mixing the first matrix block: fails commutation.
  t(0, 1) = t(1, 0) = 1;
  for (Eigen::Index i = 2; i < 10; ++i) t(i, i) = 1;
  CHECK_THROWS_AS(build_minimal_twist(md.triple, t), InvalidTwistOperator);
}

TEST_CASE("doubled representation must be faithful") {
  // Two scalar summands represented on C^2: the doubled representation only
  // sees one component on each eigenspace.
  FiniteTriple st;
  st.rep = make_representation(
      make_algebra({complex_summand(), complex_summand()}),
      {RepBlock{0, 1, false}, RepBlock{1, 1, false}});
  st.dirac = ComplexMatrix::Zero(2, 2);
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 0) = 1;
  t(1, 1) = -1;
  CHECK_THROWS_AS(build_minimal_twist(st, t), NotFaithful);
}

TEST_CASE("grading as twisting operator") {
  const GammaSet gs = build_gammas();
  CHECK(approx_equal(grading_as_twist(manifold_fiber_twist().triple),
                     gs.chirality));

  ComplexMatrix gamma_f = ComplexMatrix::Zero(4, 4);
  gamma_f(0, 0) = 1;
  gamma_f(1, 1) = -1;
  gamma_f(2, 2) = -1;
  gamma_f(3, 3) = 1;
  CHECK(approx_equal(grading_as_twist(electrodynamics_twist().triple),
                     kron(gamma_f, gs.chirality)));

  CHECK_THROWS_AS(grading_as_twist(toy_c_on_c3().triple), NoGrading);
}

TEST_CASE("doubled representation fixtures") {
  const ModelDescriptor md = toy_c_on_c3();
  const MinimalTwist mt = twist_from(md, TwistSource::Inline);
  const AlgebraSpec& spec = md.triple.rep.algebra;

  // (z1, z2) acts as diag(z1, z2, z2).
  const DoubledElement d = scalar_pair(spec, Complex(1, 0), Complex(2, 0));
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(0, 0) = 1;
  expected(1, 1) = 2;
  expected(2, 2) = 2;
  CHECK(approx_equal(doubled_represent(mt, d), expected));
  CHECK(doubled_represent(mt, d).trace() == Complex(5, 0));

  // (1, -1) recovers the twisting operator.
  CHECK(approx_equal(
      doubled_represent(mt, scalar_pair(spec, Complex(1, 0), Complex(-1, 0))),
      mt.t_op));

  // Diagonal pairs restrict to the base representation.
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const AlgebraElement a = random_element(spec, trial);
    CHECK(approx_equal(doubled_represent(mt, DoubledElement{a, a}),
                       represent(md.triple.rep, a), Tolerance(1e-14)));
  }
}

TEST_CASE("doubled representation reproduces the eight-block pattern") {
  const ModelDescriptor md = electrodynamics_twist();
  const MinimalTwist mt = twist_from(md, TwistSource::Grading);
  const AlgebraSpec& spec = md.triple.rep.algebra;

  const Complex f(0.3, 0.1), g(-0.7, 0.2), fp(1.1, -0.4), gp(0.5, 0.9);
  AlgebraElement a1 = zero_element(spec);
  a1.components[0](0, 0) = f;
  a1.components[1](0, 0) = g;
  AlgebraElement a2 = zero_element(spec);
  a2.components[0](0, 0) = fp;
  a2.components[1](0, 0) = gp;

  const ComplexMatrix out = doubled_represent(mt, DoubledElement{a1, a2});
  const Complex pattern[8] = {f, fp, fp, f, gp, g, g, gp};
  ComplexMatrix expected = ComplexMatrix::Zero(16, 16);
  for (int block = 0; block < 8; ++block) {
    expected.block(2 * block, 2 * block, 2, 2) =
        pattern[block] * identity(2);
  }
  CHECK(approx_equal(out, expected, Tolerance(1e-14)));
}

TEST_CASE("twisted commutator fixtures") {
  const ModelDescriptor md = electrodynamics_twist();
  const MinimalTwist mt = twist_from(md, TwistSource::Grading);
  const AlgebraSpec& spec = md.triple.rep.algebra;

  // The doubled unit commutes.
  const DoubledElement unit{identity_element(spec), identity_element(spec)};
  CHECK(max_norm(twisted_commutator(mt, unit)) < 1e-14);

  // Diagonal pairs reduce to the ordinary commutator.
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const AlgebraElement a = random_element(spec, 40 + trial);
    const ComplexMatrix pa = represent(md.triple.rep, a);
    CHECK(max_norm(twisted_commutator(mt, DoubledElement{a, a}) -
                   (md.triple.dirac * pa - pa * md.triple.dirac)) < 1e-12);
  }
}

TEST_CASE("constant scalars have vanishing twisted commutator on the fiber") {
  const ModelDescriptor md = manifold_fiber_twist();
  const MinimalTwist mt = twist_from(md, TwistSource::Grading);
  const AlgebraSpec& spec = md.triple.rep.algebra;

  const Complex f(0.8, -0.3), g(-1.2, 0.5);
  const DoubledElement d = scalar_pair(spec, f, g);
  CHECK(max_norm(twisted_commutator(mt, d)) < 1e-14);

  // The ordinary commutator keeps the sigma-pattern of the off-diagonal
  // blocks: [D, pi'(f, g)] = (g - f) on the upper block, (f - g) below.
  const ComplexMatrix pd = doubled_represent(mt, d);
  const ComplexMatrix comm = md.triple.dirac * pd - pd * md.triple.dirac;
  const ComplexMatrix upper = md.triple.dirac.block(0, 2, 2, 2);
  const ComplexMatrix lower = md.triple.dirac.block(2, 0, 2, 2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.block(0, 2, 2, 2) = (g - f) * upper;
  expected.block(2, 0, 2, 2) = (f - g) * lower;
  CHECK(max_norm(comm - expected) < 1e-13);
}

TEST_CASE("twisted commutator satisfies the twisted Leibniz rule") {
  for (const char* name : {"electrodynamics", "sm-structural"}) {
    const ModelDescriptor md = builtin_model(name);
    const MinimalTwist mt = twist_from(md, TwistSource::Grading);
    const AlgebraSpec& spec = md.triple.rep.algebra;
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
      const DoubledElement d{random_element(spec, 4 * trial),
                             random_element(spec, 4 * trial + 1)};
      const DoubledElement e{random_element(spec, 4 * trial + 2),
                             random_element(spec, 4 * trial + 3)};
      const ComplexMatrix lhs =
          twisted_commutator(mt, doubled_multiply(d, e));
      const ComplexMatrix rhs =
          twisted_commutator(mt, d) * doubled_represent(mt, e) +
          doubled_represent(mt, flip(d)) * twisted_commutator(mt, e);
      CHECK(max_norm(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("twisted first-order condition per model") {
  CHECK(check_twisted_first_order(
      twist_from(electrodynamics_twist(), TwistSource::Grading)));
  CHECK(check_twisted_first_order(
      twist_from(manifold_fiber_twist(), TwistSource::Grading)));
  CHECK(check_twisted_first_order(
      twist_from(sm_structural_fiber(1.0), TwistSource::Grading)));
  CHECK(!check_twisted_first_order(
      twist_from(sm_structural_fiber(1.0), TwistSource::Inline)));

  // D = 0 satisfies it trivially.
  ModelDescriptor md = electrodynamics_twist();
  md.triple.dirac = ComplexMatrix::Zero(16, 16);
  CHECK(check_twisted_first_order(twist_from(md, TwistSource::Grading)));

  CHECK_THROWS_AS(check_twisted_first_order(
                      twist_from(toy_c_on_c3(), TwistSource::Inline)),
                  NoRealStructure);
}

TEST_CASE("one-form space dimensions per model") {
  CHECK(twisted_one_form_space(twist_from(toy_c_on_c3(), TwistSource::Inline))
            .dimension == 0);
  CHECK(twisted_one_form_space(
            twist_from(electrodynamics_twist(), TwistSource::Grading))
            .dimension == 0);
  // Regression values: the fiber derivative directions span all off-diagonal
  // blocks; the lepton fiber locks the mass rows together.
  CHECK(twisted_one_form_space(
            twist_from(manifold_fiber_twist(), TwistSource::Grading))
            .dimension == 8);
  CHECK(twisted_one_form_space(
            twist_from(sm_structural_fiber(1.0), TwistSource::Grading))
            .dimension == 4);
  CHECK(twisted_one_form_space(
            twist_from(sm_structural_fiber(1.0), TwistSource::Inline))
            .dimension == 6);

  // The basis is Hilbert-Schmidt orthonormal.
  const auto space = twisted_one_form_space(
      twist_from(manifold_fiber_twist(), TwistSource::Grading));
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    for (std::size_t j = 0; j < space.basis.size(); ++j) {
      const Complex hs = (space.basis[i].adjoint() * space.basis[j]).trace();
      CHECK(std::abs(hs - (i == j ? Complex(1, 0) : Complex(0, 0))) < 1e-12);
    }
  }
}

TEST_CASE("twisted fluctuation recovers the torsion term") {
  const ModelDescriptor md = manifold_fiber_twist();
  const MinimalTwist mt = twist_from(md, TwistSource::Grading);
  const GammaSet gs = build_gammas();

  // A = 0 returns the operator unchanged.
  const auto unchanged = twisted_fluctuate(mt, ComplexMatrix::Zero(4, 4));
  CHECK(approx_equal(unchanged.op, md.triple.dirac));
  CHECK(unchanged.hermitian);

  // Half the torsion term fluctuates to the full torsion term.
  const std::array<double, 4> f{0.4, -0.9, 0.25, 0.7};
  const auto torsion = torsion_fluctuation(gs, f);
  const auto fluct = twisted_fluctuate(mt, (0.5 * torsion.matrix).eval());
  CHECK(fluct.hermitian);
  CHECK(max_norm(fluct.op - (md.triple.dirac + torsion.matrix)) < 1e-12);

  // A diagonal matrix is not a one-form here.
  CHECK_THROWS_AS(twisted_fluctuate(mt, identity(4)), NotAOneForm);

  CHECK_THROWS_AS(
      twisted_fluctuate(twist_from(toy_c_on_c3(), TwistSource::Inline),
                        ComplexMatrix::Zero(3, 3)),
      NoRealStructure);
}

TEST_CASE("selfadjoint fluctuation space of the fiber") {
  const ModelDescriptor md = manifold_fiber_twist();
  const MinimalTwist mt = twist_from(md, TwistSource::Grading);
  const GammaSet gs = build_gammas();

  const RealSpace space = selfadjoint_fluctuation_space(mt);
  CHECK(space.real_dimension == 12);  // regression value

  // Every basis element produces a Hermitian fluctuated operator.
  for (const auto& b : space.basis) {
    const auto fluct = twisted_fluctuate(mt, b);
    CHECK(fluct.hermiticity_residual < 1e-10);
  }

  // The four torsion directions are inside.
  for (int mu = 0; mu < 4; ++mu) {
    std::array<double, 4> f{0, 0, 0, 0};
    f[mu] = 1.0;
    const auto torsion = torsion_fluctuation(gs, f);
    CHECK(testing::real_span_residual(space.basis, torsion.matrix) < 1e-10);
  }

  // With a vanishing operator and no symbol generators the space is empty.
  ModelDescriptor trivial = electrodynamics_twist();
  trivial.triple.dirac = ComplexMatrix::Zero(16, 16);
  CHECK(selfadjoint_fluctuation_space(twist_from(trivial,
                                                 TwistSource::Grading))
            .real_dimension == 0);
}

TEST_CASE("transparency of the majorana block") {
  const ModelDescriptor md = sm_structural_fiber(1.0);
  const ComplexMatrix block = md.named_blocks.at("majorana-mass");

  const MinimalTwist by_grading = twist_from(md, TwistSource::Grading);
  CHECK(transparency_residual(by_grading, block, /*twisted=*/false) == 0.0);
  CHECK(transparency_residual(by_grading, block, /*twisted=*/true) == 0.0);

  const MinimalTwist by_sign_operator = twist_from(md, TwistSource::Inline);
  CHECK(!check_transparency(by_sign_operator, block, /*twisted=*/true));

  // The identity is never twisted-transparent: the defect is the twisting
  // operator itself.
  CHECK(!check_transparency(by_grading, identity(32), /*twisted=*/true));
  CHECK(transparency_residual(by_grading, identity(32), /*twisted=*/true) ==
        doctest::Approx(1.0));
}
