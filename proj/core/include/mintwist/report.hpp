#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mintwist/krein.hpp"
#include "mintwist/models.hpp"

namespace mintwist::cli {

struct ReportItem {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

/// Structured payload of the krein command, mirrored into the JSON output.
struct KreinSummary {
  int implementer_dimension = 0;
  std::optional<ComplexMatrix> chosen_r;
  bool hermitian = false;
  std::array<Eigen::Index, 2> signature{0, 0};
  double lambda_min = 0.0;
  bool fundamental_symmetry_ok = false;
  int unitary_algebra_dim = 0;
  bool rho_unitarity = false;
};

/// One command run: named pass/fail items with residuals. Exit status is 0
/// exactly when every item passes; input errors never reach a Report (the
/// binary maps them to exit 2).
struct Report {
  std::string command;
  std::string model;
  std::vector<ReportItem> items;
  std::optional<KreinSummary> krein;

  bool pass() const;
  int exit_status() const;  // 0 all-pass, 1 otherwise
  std::string to_text() const;
  std::string to_json() const;  // canonical, same items as the text form
};

/// Structural axioms plus, when a real structure is present, the commutant
/// and first-order conditions.
Report cmd_validate(const ModelDescriptor& md, Tolerance tol = {});

/// Twisting-operator validity, faithfulness of the doubled representation,
/// the twisted first-order condition, the one-form dimension, implementer
/// preconditions, and transparency of the model's named blocks.
Report cmd_twist(const ModelDescriptor& md, TwistSource source,
                 Tolerance tol = {});

/// Implementer space, a chosen Hermitian invertible implementer, its
/// spectral signature and fundamental symmetry, the twisted-unitary algebra
/// dimension, and unitarity of the twisting automorphism.
Report cmd_krein(const ModelDescriptor& md,
                 const std::optional<std::string>& prefer, Tolerance tol = {});

/// Fixed demonstrations: "torsion", "krein-manifold", "traces".
Report cmd_demo(const std::string& name);

}  // namespace mintwist::cli
