#pragma once

#include <map>
#include <string>
#include <vector>

#include "mintwist/twist.hpp"

namespace mintwist {

/// A packaged triple with an optional twisting operator and bookkeeping the
/// CLI uses: named operator blocks for transparency reports, preferred
/// implementers by name, and symbol generators for fiber models.
struct ModelDescriptor {
  std::string name;
  FiniteTriple triple;
  std::optional<ComplexMatrix> twist_operator;
  std::vector<std::string> notes;
  std::map<std::string, ComplexMatrix> named_blocks;
  std::map<std::string, ComplexMatrix> preferred_implementers;
  std::vector<ComplexMatrix> symbol_generators;
};

/// Scalar algebra represented as f I_4 on the spinor fiber, a fixed
/// real combination of the Dirac matrices standing in for the first-order
/// operator, chirality as grading and twisting operator, charge conjugation
/// as real structure. The derivative directions of the one-form span are
/// carried as symbol generators.
ModelDescriptor manifold_fiber_twist();

/// Two-summand scalar algebra on C^4 ⊗ C^4 with the standard block
/// representation, a Dirac-mass block anticommuting with the internal
/// grading, spinor test terms, the particle-antiparticle real structure and
/// the grading as twisting operator.
ModelDescriptor electrodynamics_twist();

/// C acting diagonally on C^3, operator zero, twisting operator
/// diag(1, -1, -1). The standard dimension-count obstruction.
ModelDescriptor toy_c_on_c3();

/// C ⊕ M_2(C) acting block diagonally on C^10 with balanced eigenspaces but
/// trace-obstructed half representations.
ModelDescriptor toy_c_m2_on_c10();

/// Reduced one-generation lepton fiber on C^8 ⊗ C^4: Dirac masses plus a
/// single Majorana entry k_m, chirality-times-sector grading, and the
/// left/right sign operator as the inline twisting operator. Throws
/// InvalidMass when k_m = 0.
ModelDescriptor sm_structural_fiber(double k_m);

/// JSON interchange (schema_version 1). save_model emits canonical JSON;
/// load_model throws SchemaError / MatrixShapeError on malformed documents.
/// CLI bookkeeping (named blocks, preferred implementers, symbol generators)
/// is construction-time data and not part of the wire format.
std::string save_model(const ModelDescriptor& md);
ModelDescriptor load_model(const std::string& json_text);

std::vector<std::string> builtin_names();
ModelDescriptor builtin_model(const std::string& name);  // UnknownModel

enum class TwistSource { Grading, Inline };

/// Builds the minimal twist of a model from its grading or its inline
/// twisting operator, attaching the model's symbol generators.
MinimalTwist twist_from(const ModelDescriptor& md, TwistSource source,
                        Tolerance tol = {});

}  // namespace mintwist
