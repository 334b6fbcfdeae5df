#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mintwist/numerics.hpp"

namespace mintwist {

/// Matrix summand kinds of a finite-dimensional *-algebra. Quaternions are
/// realized inside M2(C) as matrices [[a, b], [-conj(b), conj(a)]].
enum class SummandKind { Complex, Quaternion, FullMatrix };

struct Summand {
  SummandKind kind = SummandKind::Complex;
  int n = 1;  // matrix size for FullMatrix; ignored otherwise

  /// Size of the complex matrix realizing one element of this summand.
  int dim() const;
  std::string label() const;  // "C" | "H" | "M(n)"
};

Summand complex_summand();
Summand quaternion_summand();
Summand full_matrix_summand(int n);
Summand summand_from_label(const std::string& label);

/// A direct sum of matrix summands.
struct AlgebraSpec {
  std::vector<Summand> summands;

  /// Dimension of the algebra as a real vector space.
  int real_dimension() const;
};

AlgebraSpec make_algebra(std::vector<Summand> summands);  // validates

/// One concrete element: a complex matrix per summand (1x1 for Complex, 2x2
/// quaternionic form for Quaternion, nxn for FullMatrix).
struct AlgebraElement {
  std::vector<ComplexMatrix> components;
};

bool element_matches(const AlgebraSpec& spec, const AlgebraElement& x,
                     Tolerance tol = {});

AlgebraElement identity_element(const AlgebraSpec& spec);
AlgebraElement zero_element(const AlgebraSpec& spec);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(double s, const AlgebraElement& a);
/// Componentwise adjoint (the *-operation).
AlgebraElement star(const AlgebraElement& a);

/// A block representation on a Hilbert space: each block contributes
/// I_m ⊗ pi_s(x_s) (entrywise conjugated when flagged), blocks assembled in
/// order as a direct sum. Multiplicity sits outermost so the block layout of
/// the file format is canonical.
struct RepBlock {
  int summand_index = 0;
  int multiplicity = 1;
  bool conjugated = false;
};

struct Representation {
  AlgebraSpec algebra;
  std::vector<RepBlock> blocks;

  Eigen::Index total_dim() const;
};

Representation make_representation(AlgebraSpec algebra,
                                   std::vector<RepBlock> blocks);  // validates

/// Throws SpecMismatch when x does not match rep.algebra.
ComplexMatrix represent(const Representation& rep, const AlgebraElement& x);

/// Basis of the algebra as a real vector space: {1, i} per Complex summand,
/// the four quaternion units per Quaternion, real and imaginary matrix units
/// per FullMatrix(n).
std::vector<AlgebraElement> algebra_basis(const AlgebraSpec& spec);

/// True iff x -> represent(x) has trivial kernel on the basis span.
bool check_faithful(const Representation& rep, Tolerance tol = {});

/// Deterministic for a fixed seed; quaternionic pattern respected by
/// construction.
AlgebraElement random_element(const AlgebraSpec& spec, std::uint64_t seed);

}  // namespace mintwist
