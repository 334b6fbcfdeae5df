#include "mintwist/report.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "json_detail.hpp"
#include "mintwist/clifford.hpp"

namespace mintwist::cli {

namespace {

ReportItem item(std::string name, bool pass, double residual,
                std::string detail = {}) {
  return ReportItem{std::move(name), pass, residual, std::move(detail)};
}

ReportItem residual_item(std::string name, double residual, double bound,
                         std::string detail = {}) {
  return ReportItem{std::move(name), residual <= bound, residual,
                    std::move(detail)};
}

ReportItem info_item(std::string name, std::string detail) {
  return ReportItem{std::move(name), true, 0.0, std::move(detail)};
}

AlgebraElement scalar_pair_element(const AlgebraSpec& spec, Complex z) {
  AlgebraElement e = zero_element(spec);
  e.components[0](0, 0) = z;
  return e;
}

std::string dim_text(int d) { return "dimension = " + std::to_string(d); }

}  // namespace

bool Report::pass() const {
  for (const auto& it : items) {
    if (!it.pass) return false;
  }
  return true;
}

int Report::exit_status() const { return pass() ? 0 : 1; }

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << " " << model << "\n";
  for (const auto& it : items) {
    out << "  [" << (it.pass ? "pass" : "FAIL") << "] " << it.name
        << "  residual=" << std::scientific << it.residual;
    if (!it.detail.empty()) out << "  (" << it.detail << ")";
    out << "\n";
  }
  if (krein) {
    out << "  implementer_dimension=" << krein->implementer_dimension
        << " signature=[" << krein->signature[0] << "," << krein->signature[1]
        << "] lambda_min=" << krein->lambda_min
        << " unitary_algebra_dim=" << krein->unitary_algebra_dim << "\n";
  }
  out << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["model"] = model;
  j["pass"] = pass();
  nlohmann::json items_json = nlohmann::json::array();
  for (const auto& it : items) {
    items_json.push_back({{"name", it.name},
                          {"pass", it.pass},
                          {"residual", it.residual},
                          {"detail", it.detail}});
  }
  j["items"] = items_json;
  if (krein) {
    j["implementer_dimension"] = krein->implementer_dimension;
    j["chosen_R"] = krein->chosen_r ? detail::to_json(*krein->chosen_r)
                                    : nlohmann::json();
    j["hermitian"] = krein->hermitian;
    j["signature"] = {krein->signature[0], krein->signature[1]};
    j["lambda_min"] = krein->lambda_min;
    j["fundamental_symmetry_ok"] = krein->fundamental_symmetry_ok;
    j["unitary_algebra_dim"] = krein->unitary_algebra_dim;
    j["rho_unitarity"] = krein->rho_unitarity;
  }
  return j.dump(2);
}

Report cmd_validate(const ModelDescriptor& md, Tolerance tol) {
  Report report;
  report.command = "validate";
  report.model = md.name;
  const ValidationReport vr = validate_triple(md.triple, tol);
  for (const auto& it : vr.items) {
    report.items.push_back(ReportItem{it.name, it.pass, it.residual,
                                      it.detail});
  }
  if (md.triple.real) {
    report.items.push_back(residual_item(
        "order-zero", order_zero_residual(md.triple), tol.atol,
        "[π(a), Jπ(b)J⁻¹] = 0 over basis pairs"));
    report.items.push_back(residual_item(
        "first-order", first_order_residual(md.triple), tol.atol,
        "[[D, π(a)], Jπ(b)J⁻¹] = 0 over basis pairs"));
  }
  return report;
}

Report cmd_twist(const ModelDescriptor& md, TwistSource source,
                 Tolerance tol) {
  Report report;
  report.command = "twist";
  report.model = md.name;

  const ComplexMatrix t = source == TwistSource::Grading
                              ? grading_as_twist(md.triple)
                              : [&] {
                                  if (!md.twist_operator) {
                                    throw InvalidTwistOperator(
                                        "model '" + md.name +
                                        "' has no inline twisting operator");
                                  }
                                  return *md.twist_operator;
                                }();
  const Eigen::Index n = md.triple.rep.total_dim();

  report.items.push_back(residual_item("twist-selfadjoint",
                                       max_norm(t - t.adjoint()), tol.atol));
  report.items.push_back(residual_item(
      "twist-involutive", max_norm(t * t - identity(n)), tol.atol));
  const double dist_to_scalar =
      std::min(max_norm(t - identity(n)), max_norm(t + identity(n)));
  report.items.push_back(item("twist-not-scalar",
                              dist_to_scalar > tol.atol, dist_to_scalar,
                              "distance to ±I"));
  double commutes = 0.0;
  for (const auto& a : algebra_basis(md.triple.rep.algebra)) {
    const ComplexMatrix pa = represent(md.triple.rep, a);
    commutes = std::max(commutes, max_norm(t * pa - pa * t));
  }
  report.items.push_back(
      residual_item("twist-commutes-algebra", commutes, tol.atol));

  bool faithful = true;
  try {
    (void)build_minimal_twist(md.triple, t, tol, md.symbol_generators);
  } catch (const NotFaithful&) {
    faithful = false;
  } catch (const InvalidTwistOperator&) {
    // Already reported through the items above.
    return report;
  }
  report.items.push_back(item("doubled-representation-faithful", faithful,
                              faithful ? 0.0 : 1.0));
  if (!report.pass()) return report;

  const MinimalTwist mt =
      build_minimal_twist(md.triple, t, tol, md.symbol_generators);

  if (md.triple.real) {
    report.items.push_back(residual_item(
        "twisted-first-order", twisted_first_order_residual(mt), tol.atol,
        "[[D, π'(a')]_ρ, Jπ'(b')J⁻¹]_ρ₀ = 0 over doubled basis pairs"));
  }

  const auto one_forms = twisted_one_form_space(mt, tol);
  report.items.push_back(
      info_item("one-form-space", dim_text(one_forms.dimension)));

  const auto exp = expandability_necessary(mt, tol);
  report.items.push_back(item(
      "implementer-dims-equal", exp.dims_equal,
      static_cast<double>(std::abs(exp.dim_plus - exp.dim_minus)),
      "dim H+ = " + std::to_string(exp.dim_plus) +
          ", dim H- = " + std::to_string(exp.dim_minus)));
  report.items.push_back(item("implementer-traces-equal", exp.traces_equal,
                              exp.trace_residual,
                              "half-representation traces over the basis"));

  for (const auto& [name, block] : md.named_blocks) {
    report.items.push_back(residual_item(
        "transparent-untwisted-" + name,
        transparency_residual(mt, block, /*twisted=*/false), tol.atol));
    report.items.push_back(residual_item(
        "transparent-twisted-" + name,
        transparency_residual(mt, block, /*twisted=*/true), tol.atol));
  }
  return report;
}

Report cmd_krein(const ModelDescriptor& md,
                 const std::optional<std::string>& prefer, Tolerance tol) {
  Report report;
  report.command = "krein";
  report.model = md.name;
  KreinSummary summary;

  const MinimalTwist mt = twist_from(
      md, md.twist_operator ? TwistSource::Inline : TwistSource::Grading, tol);

  const auto exp = expandability_necessary(mt, tol);
  report.items.push_back(item(
      "implementer-dims-equal", exp.dims_equal,
      static_cast<double>(std::abs(exp.dim_plus - exp.dim_minus))));
  report.items.push_back(item("implementer-traces-equal", exp.traces_equal,
                              exp.trace_residual));

  const ImplementerSpace space = solve_implementers(mt, tol);
  summary.implementer_dimension = space.real_dimension;
  report.items.push_back(item("implementer-space-nonempty", !space.empty(),
                              space.empty() ? 1.0 : 0.0,
                              dim_text(space.real_dimension)));
  if (space.empty()) {
    report.krein = summary;
    return report;
  }

  std::optional<ComplexMatrix> preference;
  if (prefer) {
    const auto it = md.preferred_implementers.find(*prefer);
    if (it != md.preferred_implementers.end()) {
      preference = it->second;
    } else {
      preference = matrix_from_json(*prefer);  // MatrixShapeError on bad input
    }
  }

  ComplexMatrix r;
  try {
    r = select_hermitian_invertible(space, preference, tol);
  } catch (const NoHermitianInvertible& err) {
    report.items.push_back(
        item("hermitian-invertible-implementer", false, 1.0, err.what()));
    report.krein = summary;
    return report;
  }
  summary.chosen_r = r;
  report.items.push_back(item("hermitian-invertible-implementer", true, 0.0));

  summary.hermitian = check_hermitian_product(r, tol);
  report.items.push_back(residual_item("product-hermitian",
                                       max_norm(r - r.adjoint()), tol.atol));

  const KreinAnalysis analysis = krein_decompose(r, tol);
  summary.signature = {analysis.p, analysis.q};
  summary.lambda_min = analysis.lambda_min;
  report.items.push_back(item(
      "product-indefinite", analysis.indefinite(), 0.0,
      "signature (" + std::to_string(analysis.p) + ", " +
          std::to_string(analysis.q) + "), lambda_min = " +
          std::to_string(analysis.lambda_min)));

  summary.fundamental_symmetry_ok = verify_fundamental_symmetry(
      r, analysis.fundamental_symmetry, tol);
  report.items.push_back(item("fundamental-symmetry",
                              summary.fundamental_symmetry_ok,
                              summary.fundamental_symmetry_ok ? 0.0 : 1.0));

  report.items.push_back(item("hilbert-product-recovered",
                              recover_hilbert_product(r, tol), 0.0));

  summary.unitary_algebra_dim = twisted_unitary_algebra_dim(r, tol);
  const auto expected_dim = static_cast<int>(
      (analysis.p + analysis.q) * (analysis.p + analysis.q));
  report.items.push_back(
      item("twisted-unitary-algebra-dim",
           summary.unitary_algebra_dim == expected_dim,
           static_cast<double>(summary.unitary_algebra_dim - expected_dim),
           dim_text(summary.unitary_algebra_dim) + ", expected (p+q)^2 = " +
               std::to_string(expected_dim)));

  summary.rho_unitarity = check_rho_unitarity(mt, r, tol);
  report.items.push_back(residual_item(
      "rho-unitarity", rho_unitarity_residual(mt, r), tol.atol));

  report.krein = summary;
  return report;
}

namespace {

Report demo_torsion() {
  Report report;
  report.command = "demo";
  report.model = "torsion";
  const GammaSet gs = build_gammas();

  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double identity_residual = 0.0;
  double hermiticity = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::array<double, 4> f{dist(gen), dist(gen), dist(gen), dist(gen)};
    identity_residual =
        std::max(identity_residual, clifford_identity_residual(gs, f));
    const auto tf = torsion_fluctuation(gs, f);
    hermiticity =
        std::max(hermiticity, max_norm(tf.matrix - tf.matrix.adjoint()));
  }
  report.items.push_back(residual_item(
      "dual-action-identity", identity_residual, 1e-12,
      "100 seeded coefficient draws"));
  report.items.push_back(residual_item("torsion-term-hermitian", hermiticity,
                                       1e-14));

  // The double dual changes sign exactly on odd degrees.
  double dd_residual = 0.0;
  std::mt19937_64 fgen(7);
  for (int degree = 0; degree <= 4; ++degree) {
    for (int trial = 0; trial < 20; ++trial) {
      ConstantForm w = zero_form(degree);
      for (unsigned mask = 0; mask < 16; ++mask) {
        if (std::popcount(mask) == degree) {
          w.coefficients[mask] = Complex(dist(fgen), dist(fgen));
        }
      }
      const double sign = (degree % 2 == 0) ? 1.0 : -1.0;
      auto diff = add(hodge_star(hodge_star(w)), scale(-sign, w));
      dd_residual = std::max(dd_residual, form_max_norm(diff));
    }
  }
  report.items.push_back(residual_item("double-dual-sign", dd_residual, 1e-12,
                                       "star(star(w)) = (-1)^(k(4-k)) w"));

  const auto sample = torsion_fluctuation(gs, {1.0, 0.0, 0.0, 0.0});
  report.items.push_back(
      info_item("sample-torsion-form", form_to_json(sample.torsion)));
  return report;
}

Report demo_krein_manifold() {
  Report report;
  report.command = "demo";
  report.model = "krein-manifold";
  const GammaSet gs = build_gammas();

  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.block(0, 2, 2, 2) = Complex(0, 1) * identity(2);
  expected.block(2, 0, 2, 2) = Complex(0, -1) * identity(2);

  const ComplexMatrix k = krein_operator(4, 3);
  report.items.push_back(residual_item("fiber-operator-entries",
                                       max_norm(k - expected), 1e-12,
                                       matrix_to_json(k)));
  report.items.push_back(residual_item(
      "hermitian-involution",
      std::max(max_norm(k - k.adjoint()), max_norm(k * k - identity(4))),
      1e-12));

  const KreinAnalysis analysis = krein_decompose(k);
  report.items.push_back(item(
      "signature", analysis.p == 2 && analysis.q == 2,
      static_cast<double>(std::abs(analysis.p - 2) + std::abs(analysis.q - 2)),
      "(" + std::to_string(analysis.p) + ", " + std::to_string(analysis.q) +
          ")"));

  const ComplexMatrix w = krein_gamma0_witness();
  report.items.push_back(residual_item(
      "gamma0-equivalence-witness",
      max_norm(w * gs.gammas[0] * w.adjoint() - k), 1e-12,
      "W g0 W† equals the fiber operator"));

  const auto eig_k = hermitian_eigendecompose(k);
  const auto eig_g0 = hermitian_eigendecompose(gs.gammas[0]);
  double spectrum = 0.0;
  for (std::size_t i = 0; i < eig_k.eigenvalues.size(); ++i) {
    spectrum = std::max(spectrum, std::abs(eig_k.eigenvalues[i] -
                                           eig_g0.eigenvalues[i]));
  }
  report.items.push_back(
      residual_item("same-spectrum-as-gamma0", spectrum, 1e-12,
                    "eigenvalues (1, 1, -1, -1)"));
  return report;
}

Report demo_traces() {
  Report report;
  report.command = "demo";
  report.model = "traces";

  {
    const ModelDescriptor md = toy_c_on_c3();
    const MinimalTwist mt = twist_from(md, TwistSource::Inline);
    const AlgebraSpec& spec = md.triple.rep.algebra;
    const DoubledElement d{scalar_pair_element(spec, Complex(1, 0)),
                           scalar_pair_element(spec, Complex(2, 0))};
    const Complex tr = doubled_represent(mt, d).trace();
    const Complex tr_flipped = doubled_represent(mt, flip(d)).trace();
    report.items.push_back(residual_item(
        "c-on-c3-doubled-trace", std::abs(tr - Complex(5, 0)), 1e-12,
        "Tr pi'(1, 2) = 5"));
    report.items.push_back(residual_item(
        "c-on-c3-flipped-trace", std::abs(tr_flipped - Complex(4, 0)), 1e-12,
        "Tr pi'(2, 1) = 4"));
  }

  {
    const ModelDescriptor md = toy_c_m2_on_c10();
    const MinimalTwist mt = twist_from(md, TwistSource::Inline);
    const AlgebraSpec& spec = md.triple.rep.algebra;

    auto element = [&](Complex c, const ComplexMatrix& m) {
      AlgebraElement e = zero_element(spec);
      e.components[0](0, 0) = c;
      e.components[1] = m;
      return e;
    };
    auto half_trace = [&](bool plus, const AlgebraElement& a) {
      const ComplexMatrix pa = represent(md.triple.rep, a);
      return ((plus ? mt.p_plus : mt.p_minus) * pa).trace();
    };
    // Coefficients of c and of Tr m in the two half-representation traces.
    const ComplexMatrix zero2 = ComplexMatrix::Zero(2, 2);
    ComplexMatrix e11 = zero2;
    e11(0, 0) = 1;
    const Complex plus_c = half_trace(true, element(1, zero2));
    const Complex plus_m = half_trace(true, element(0, e11));
    const Complex minus_c = half_trace(false, element(1, zero2));
    const Complex minus_m = half_trace(false, element(0, e11));
    const double table_residual =
        std::max({std::abs(plus_c - Complex(3, 0)),
                  std::abs(plus_m - Complex(1, 0)),
                  std::abs(minus_c - Complex(1, 0)),
                  std::abs(minus_m - Complex(2, 0))});
    report.items.push_back(residual_item(
        "c-m2-half-trace-table", table_residual, 1e-12,
        "Tr pi+(c,m) = Tr m + 3c, Tr pi-(c,m) = 2 Tr m + c"));

    const DoubledElement d{element(1, e11), element(Complex(0, 0), zero2)};
    const Complex doubled = doubled_represent(mt, d).trace();
    const Complex flipped = doubled_represent(mt, flip(d)).trace();
    report.items.push_back(residual_item(
        "c-m2-doubled-trace-differs", std::abs((doubled - flipped) -
                                               Complex(1, 0)),
        1e-12,
        "Tr pi'(d) = 4 and Tr pi'(flip d) = 3 for d = ((1, E11), 0)"));
  }
  return report;
}

}  // namespace

Report cmd_demo(const std::string& name) {
  if (name == "torsion") return demo_torsion();
  if (name == "krein-manifold") return demo_krein_manifold();
  if (name == "traces") return demo_traces();
  throw UnknownModel("no demo named '" + name + "'");
}

}  // namespace mintwist::cli
