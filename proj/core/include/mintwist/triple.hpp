#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mintwist/algebra.hpp"
#include "mintwist/numerics.hpp"

namespace mintwist {

/// Antiunitary real structure stored in its canonical split: J acts as
/// psi -> j_matrix * conj(psi) with j_matrix unitary. The three signs are
/// input data; the library validates them but does not derive a dimension
/// classification from them.
struct RealStructure {
  ComplexMatrix j_matrix;
  int eps = 1;         // J^2 = eps * I
  int eps_prime = 1;   // J D = eps_prime * D J
  int eps_second = 1;  // J Gamma = eps_second * Gamma J
};

/// Finite spectral triple: a block representation, a Hermitian operator, and
/// optionally a grading and a real structure.
struct FiniteTriple {
  Representation rep;
  ComplexMatrix dirac;
  std::optional<ComplexMatrix> grading;
  std::optional<RealStructure> real;
};

struct CheckItem {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckItem> items;

  bool pass() const;
  double max_residual() const;
};

/// Runs every structural invariant of the triple (operator shape and
/// selfadjointness, grading relations, real-structure sign relations) and
/// reports one named residual per item. Failures are report items, not
/// exceptions.
ValidationReport validate_triple(const FiniteTriple& st, Tolerance tol = {});

/// J M J^{-1} = j * conj(M) * j†. Throws NoRealStructure / DimensionMismatch.
ComplexMatrix conjugate_by_real(const FiniteTriple& st, const ComplexMatrix& m);

/// [pi(a), J pi(b) J^{-1}] = 0 over all algebra basis pairs.
bool check_order_zero(const FiniteTriple& st, Tolerance tol = {});
double order_zero_residual(const FiniteTriple& st);

/// [[D, pi(a)], J pi(b) J^{-1}] = 0 over all algebra basis pairs.
bool check_first_order(const FiniteTriple& st, Tolerance tol = {});
double first_order_residual(const FiniteTriple& st);

}  // namespace mintwist
