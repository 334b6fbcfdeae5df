#include "mintwist/models.hpp"

#include <array>

#include "json_detail.hpp"
#include "mintwist/clifford.hpp"

namespace mintwist {

namespace {

const Complex kI(0.0, 1.0);

// Fixed spinor test coefficients used wherever a first-order operator needs
// a stand-in at a point.
constexpr std::array<double, 4> kSpinorCoefficients{0.60, -0.25, 0.35, 0.80};

ComplexMatrix spinor_dirac(const GammaSet& gs) {
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  for (int mu = 0; mu < 4; ++mu) {
    d += kSpinorCoefficients[static_cast<std::size_t>(mu)] *
         gs.gammas[static_cast<std::size_t>(mu)];
  }
  return d;
}

// Spinor conjugation matrix with W conj(g^mu) W† = +g^mu: g1 g3.
ComplexMatrix spinor_conjugation_plus(const GammaSet& gs) {
  return gs.gammas[1] * gs.gammas[3];
}

// Spinor conjugation matrix with W conj(g^mu) W† = -g^mu: g0 g2. This is the
// charge conjugation under which the chiral one-form directions survive the
// fluctuation A + J A J⁻¹.
ComplexMatrix spinor_conjugation_minus(const GammaSet& gs) {
  return gs.gammas[0] * gs.gammas[2];
}

ComplexMatrix diag_values(const std::vector<double>& values) {
  ComplexMatrix m = ComplexMatrix::Zero(
      static_cast<Eigen::Index>(values.size()),
      static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
        values[i];
  }
  return m;
}

// Swap of the two halves of a 2k-dimensional space.
ComplexMatrix half_swap(Eigen::Index k) {
  ComplexMatrix s = ComplexMatrix::Zero(2 * k, 2 * k);
  s.block(0, k, k, k) = identity(k);
  s.block(k, 0, k, k) = identity(k);
  return s;
}

}  // namespace

ModelDescriptor manifold_fiber_twist() {
  const GammaSet gs = build_gammas();

  ModelDescriptor md;
  md.name = "manifold-fiber";

  FiniteTriple st;
  st.rep = make_representation(make_algebra({complex_summand()}),
                               {RepBlock{0, 4, false}});
  st.dirac = spinor_dirac(gs);
  st.grading = gs.chirality;
  RealStructure rs;
  rs.j_matrix = spinor_conjugation_minus(gs);
  rs.eps = -1;
  // The stand-in coefficients are real where the first-order operator has a
  // factor -i, so the conjugation sign of the operator flips relative to the
  // geometric value. Recorded as computed.
  rs.eps_prime = -1;
  rs.eps_second = 1;
  st.real = rs;
  md.triple = st;

  md.twist_operator = gs.chirality;

  // Derivative directions of the one-form span: the twisted commutator of a
  // first-order operator with the doubled scalars leaves exactly the
  // chirally placed -i g^mu terms, which a constant-coefficient stand-in
  // cannot produce by itself.
  const ComplexMatrix p_plus = (identity(4) + gs.chirality) / 2.0;
  const ComplexMatrix p_minus = (identity(4) - gs.chirality) / 2.0;
  for (int mu = 0; mu < 4; ++mu) {
    md.symbol_generators.push_back(
        -kI * gs.gammas[static_cast<std::size_t>(mu)] * p_minus);
    md.symbol_generators.push_back(
        -kI * gs.gammas[static_cast<std::size_t>(mu)] * p_plus);
  }

  for (int mu = 0; mu < 4; ++mu) {
    md.preferred_implementers["gamma" + std::to_string(mu)] =
        gs.gammas[static_cast<std::size_t>(mu)];
  }

  md.notes = {
      "scalar fiber of a twisted even-dimensional geometry",
      "operator is a fixed real combination of the Dirac matrices; its "
      "derivative directions enter the one-form span as symbol generators",
  };
  return md;
}

ModelDescriptor electrodynamics_twist() {
  const GammaSet gs = build_gammas();

  ModelDescriptor md;
  md.name = "electrodynamics";

  // Internal space order: e_R, e_L, conj(e_R), conj(e_L); spinor factor
  // innermost, so the doubled representation comes out as eight scalar
  // blocks of I_2.
  const ComplexMatrix gamma_f = diag_values({1, -1, -1, 1});
  const Complex d_mass(0.90, 0.40);
  ComplexMatrix d_f = ComplexMatrix::Zero(4, 4);
  d_f(0, 1) = std::conj(d_mass);
  d_f(1, 0) = d_mass;
  d_f(2, 3) = d_mass;
  d_f(3, 2) = std::conj(d_mass);

  FiniteTriple st;
  st.rep = make_representation(
      make_algebra({complex_summand(), complex_summand()}),
      {RepBlock{0, 8, false}, RepBlock{1, 8, false}});
  st.dirac = kron(identity(4), spinor_dirac(gs)) + kron(d_f, gs.chirality);
  st.grading = kron(gamma_f, gs.chirality);
  RealStructure rs;
  rs.j_matrix = kron(half_swap(2), spinor_conjugation_plus(gs));
  rs.eps = -1;
  rs.eps_prime = 1;
  rs.eps_second = -1;
  st.real = rs;
  md.triple = st;

  md.twist_operator = st.grading;
  md.named_blocks["dirac-mass"] = kron(d_f, gs.chirality);
  for (int mu = 0; mu < 4; ++mu) {
    md.preferred_implementers["gamma" + std::to_string(mu)] =
        kron(identity(4), gs.gammas[static_cast<std::size_t>(mu)]);
  }

  md.notes = {
      "two scalar summands acting on the particle and antiparticle halves",
      "mass block anticommutes with the internal grading and is transparent "
      "under the twist by grading",
  };
  return md;
}

ModelDescriptor toy_c_on_c3() {
  ModelDescriptor md;
  md.name = "c-on-c3";
  FiniteTriple st;
  st.rep = make_representation(make_algebra({complex_summand()}),
                               {RepBlock{0, 3, false}});
  st.dirac = ComplexMatrix::Zero(3, 3);
  md.triple = st;
  md.twist_operator = diag_values({1, -1, -1});
  md.notes = {"unbalanced eigenspace dimensions obstruct any implementer"};
  return md;
}

ModelDescriptor toy_c_m2_on_c10() {
  ModelDescriptor md;
  md.name = "c-m2-on-c10";
  FiniteTriple st;
  // diag(m, c, c, c, m, m, c) on C^10.
  st.rep = make_representation(
      make_algebra({complex_summand(), full_matrix_summand(2)}),
      {RepBlock{1, 1, false}, RepBlock{0, 3, false}, RepBlock{1, 2, false},
       RepBlock{0, 1, false}});
  st.dirac = ComplexMatrix::Zero(10, 10);
  md.triple = st;
  md.twist_operator = diag_values({1, 1, 1, 1, 1, -1, -1, -1, -1, -1});
  md.notes = {
      "balanced eigenspaces but trace-obstructed half representations"};
  return md;
}

ModelDescriptor sm_structural_fiber(double k_m) {
  if (k_m == 0.0) {
    throw InvalidMass("sm_structural_fiber: the Majorana entry must be "
                      "nonzero");
  }
  const GammaSet gs = build_gammas();

  ModelDescriptor md;
  md.name = "sm-structural";

  // Internal order: nu_R, nu_L, e_R, e_L, then conjugates. The first scalar
  // summand acts on right-handed particles and the whole conjugate sector,
  // the second on left-handed particles.
  const double m_nu = 0.45;
  const double m_e = 0.75;
  ComplexMatrix d0 = ComplexMatrix::Zero(8, 8);
  d0(0, 1) = d0(1, 0) = m_nu;
  d0(2, 3) = d0(3, 2) = m_e;
  d0(4, 5) = d0(5, 4) = m_nu;
  d0(6, 7) = d0(7, 6) = m_e;
  ComplexMatrix d_m = ComplexMatrix::Zero(8, 8);
  d_m(0, 4) = d_m(4, 0) = k_m;

  const ComplexMatrix gamma_f =
      diag_values({1, -1, 1, -1, -1, 1, -1, 1});
  const ComplexMatrix t_f = diag_values({-1, 1, -1, 1, -1, 1, -1, 1});

  FiniteTriple st;
  st.rep = make_representation(
      make_algebra({complex_summand(), complex_summand()}),
      {RepBlock{0, 4, false}, RepBlock{1, 4, false}, RepBlock{0, 4, false},
       RepBlock{1, 4, false}, RepBlock{0, 4, false}, RepBlock{0, 4, false},
       RepBlock{0, 4, false}, RepBlock{0, 4, false}});
  st.dirac = kron(d0 + d_m, gs.chirality);
  st.grading = kron(gamma_f, gs.chirality);
  RealStructure rs;
  rs.j_matrix = kron(half_swap(4), spinor_conjugation_plus(gs));
  rs.eps = -1;
  rs.eps_prime = 1;
  rs.eps_second = -1;
  st.real = rs;
  md.triple = st;

  md.twist_operator = kron(t_f, gs.chirality);
  // Only the Majorana block enters the transparency report; the Dirac masses
  // are never transparent and are exposed separately for tests.
  md.named_blocks["majorana-mass"] = kron(d_m, gs.chirality);
  md.preferred_implementers["gamma0"] = kron(identity(8), gs.gammas[0]);

  md.notes = {
      "reduced one-generation lepton fiber; only the block structure enters "
      "the checks",
      "inline twisting operator takes +1 on left states and -1 on right "
      "states in both sectors, unlike the grading",
  };
  return md;
}

namespace {

nlohmann::json algebra_to_json(const AlgebraSpec& spec) {
  nlohmann::json j;
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& s : spec.summands) summands.push_back(s.label());
  j["summands"] = summands;
  return j;
}

AlgebraSpec algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("summands") || !j["summands"].is_array() ||
      j["summands"].empty()) {
    throw SchemaError("algebra: expected {summands: [..]}");
  }
  std::vector<Summand> summands;
  for (const auto& s : j["summands"]) {
    if (!s.is_string()) throw SchemaError("algebra.summands: expected strings");
    summands.push_back(summand_from_label(s.get<std::string>()));
  }
  return make_algebra(std::move(summands));
}

nlohmann::json representation_to_json(const Representation& rep) {
  nlohmann::json j;
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : rep.blocks) {
    blocks.push_back({b.summand_index, b.multiplicity, b.conjugated});
  }
  j["blocks"] = blocks;
  return j;
}

std::vector<RepBlock> blocks_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array() ||
      j["blocks"].empty()) {
    throw SchemaError("representation: expected {blocks: [..]}");
  }
  std::vector<RepBlock> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_array() || b.size() != 3 || !b[0].is_number_integer() ||
        !b[1].is_number_integer() || !b[2].is_boolean()) {
      throw SchemaError(
          "representation.blocks: expected [summand_index, multiplicity, "
          "conjugated]");
    }
    blocks.push_back(RepBlock{b[0].get<int>(), b[1].get<int>(),
                              b[2].get<bool>()});
  }
  return blocks;
}

}  // namespace

std::string save_model(const ModelDescriptor& md) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["name"] = md.name;
  j["algebra"] = algebra_to_json(md.triple.rep.algebra);
  j["representation"] = representation_to_json(md.triple.rep);
  j["dirac"] = detail::to_json(md.triple.dirac);
  if (md.triple.grading) j["grading"] = detail::to_json(*md.triple.grading);
  if (md.triple.real) {
    nlohmann::json real;
    real["j_matrix"] = detail::to_json(md.triple.real->j_matrix);
    real["eps"] = md.triple.real->eps;
    real["eps_prime"] = md.triple.real->eps_prime;
    real["eps_second"] = md.triple.real->eps_second;
    j["real"] = real;
  }
  if (md.twist_operator) {
    j["twist_operator"] = detail::to_json(*md.twist_operator);
  }
  j["notes"] = md.notes;
  return j.dump(2);
}

ModelDescriptor load_model(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("model: invalid JSON");
  if (!j.is_object()) throw SchemaError("model: expected an object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != 1) {
    throw SchemaError("model.schema_version: expected 1");
  }
  for (const char* key : {"name", "algebra", "representation", "dirac"}) {
    if (!j.contains(key)) {
      throw SchemaError(std::string("model.") + key + ": missing");
    }
  }
  if (!j["name"].is_string()) throw SchemaError("model.name: expected string");

  ModelDescriptor md;
  md.name = j["name"].get<std::string>();
  AlgebraSpec algebra = algebra_from_json(j["algebra"]);
  md.triple.rep = make_representation(std::move(algebra),
                                      blocks_from_json(j["representation"]));
  md.triple.dirac = detail::matrix_from_json(j["dirac"], "model.dirac");
  if (j.contains("grading")) {
    md.triple.grading = detail::matrix_from_json(j["grading"], "model.grading");
  }
  if (j.contains("real")) {
    const auto& r = j["real"];
    if (!r.is_object() || !r.contains("j_matrix") || !r.contains("eps") ||
        !r.contains("eps_prime") || !r.contains("eps_second")) {
      throw SchemaError(
          "model.real: expected {j_matrix, eps, eps_prime, eps_second}");
    }
    RealStructure rs;
    rs.j_matrix = detail::matrix_from_json(r["j_matrix"], "model.real.j_matrix");
    for (const char* key : {"eps", "eps_prime", "eps_second"}) {
      if (!r[key].is_number_integer() ||
          std::abs(r[key].get<int>()) != 1) {
        throw SchemaError(std::string("model.real.") + key +
                          ": expected +1 or -1");
      }
    }
    rs.eps = r["eps"].get<int>();
    rs.eps_prime = r["eps_prime"].get<int>();
    rs.eps_second = r["eps_second"].get<int>();
    md.triple.real = rs;
  }
  if (j.contains("twist_operator")) {
    md.twist_operator =
        detail::matrix_from_json(j["twist_operator"], "model.twist_operator");
  }
  if (j.contains("notes")) {
    if (!j["notes"].is_array()) throw SchemaError("model.notes: expected array");
    for (const auto& n : j["notes"]) {
      if (!n.is_string()) throw SchemaError("model.notes: expected strings");
      md.notes.push_back(n.get<std::string>());
    }
  }
  return md;
}

std::vector<std::string> builtin_names() {
  return {"c-on-c3", "c-m2-on-c10", "electrodynamics", "manifold-fiber",
          "sm-structural"};
}

ModelDescriptor builtin_model(const std::string& name) {
  if (name == "c-on-c3") return toy_c_on_c3();
  if (name == "c-m2-on-c10") return toy_c_m2_on_c10();
  if (name == "electrodynamics") return electrodynamics_twist();
  if (name == "manifold-fiber") return manifold_fiber_twist();
  if (name == "sm-structural") return sm_structural_fiber(1.0);
  throw UnknownModel("no builtin model named '" + name + "'");
}

MinimalTwist twist_from(const ModelDescriptor& md, TwistSource source,
                        Tolerance tol) {
  if (source == TwistSource::Grading) {
    return build_minimal_twist(md.triple, grading_as_twist(md.triple), tol,
                               md.symbol_generators);
  }
  if (!md.twist_operator) {
    throw InvalidTwistOperator("model '" + md.name +
                               "' carries no inline twisting operator");
  }
  return build_minimal_twist(md.triple, *md.twist_operator, tol,
                             md.symbol_generators);
}

}  // namespace mintwist
