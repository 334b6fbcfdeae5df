#pragma once

#include <vector>

#include "mintwist/triple.hpp"

namespace mintwist {

/// Element of the doubled algebra A ⊗ C²: an ordered pair of base elements.
struct DoubledElement {
  AlgebraElement first;
  AlgebraElement second;
};

DoubledElement flip(const DoubledElement& d);
DoubledElement doubled_multiply(const DoubledElement& a,
                                const DoubledElement& b);

/// A minimal twist of a finite triple: the twisting operator T (a selfadjoint
/// involution, not ±I, commuting with the represented algebra), its
/// eigenprojections, and the doubled representation
///   π'(a1, a2) = p+ π(a1) + p- π(a2)
/// with the flip as twisting automorphism. The Hilbert space and the operator
/// D are untouched.
///
/// symbol_generators carries extra one-form generators for fiber models whose
/// operator stands in for a first-order operator: products with constants
/// cannot see the derivative directions, so those directions are supplied as
/// explicit matrices and enter the one-form span alongside the twisted
/// commutators.
struct MinimalTwist {
  FiniteTriple base;
  ComplexMatrix t_op;
  ComplexMatrix p_plus;
  ComplexMatrix p_minus;
  std::vector<ComplexMatrix> symbol_generators;
};

/// Validates every twisting-operator invariant and the faithfulness of the
/// doubled representation. Throws InvalidTwistOperator (message names the
/// violated invariant) or NotFaithful.
MinimalTwist build_minimal_twist(const FiniteTriple& st, const ComplexMatrix& t,
                                 Tolerance tol = {},
                                 std::vector<ComplexMatrix> symbol_generators = {});

/// The grading, which always qualifies as a twisting operator. Throws
/// NoGrading when the triple is not graded.
ComplexMatrix grading_as_twist(const FiniteTriple& st);

/// π'(a1, a2). Throws SpecMismatch when components do not match the algebra.
ComplexMatrix doubled_represent(const MinimalTwist& mt,
                                const DoubledElement& d);

/// Real-vector-space basis of the doubled algebra: (e, 0) and (0, e) over the
/// base algebra basis.
std::vector<DoubledElement> doubled_basis(const MinimalTwist& mt);

/// D π'(d) - π'(flip d) D.
ComplexMatrix twisted_commutator(const MinimalTwist& mt,
                                 const DoubledElement& d);

/// Twisted first-order condition over all doubled basis pairs, with the inner
/// twist acting on the conjugated factor through the flip:
///   X Y - Y' X = 0  where X = [D, π'(a')]_ρ, Y = J π'(b') J⁻¹ and
///   Y' = J π'(ρ(b')) J⁻¹.
bool check_twisted_first_order(const MinimalTwist& mt, Tolerance tol = {});
double twisted_first_order_residual(const MinimalTwist& mt);

/// Hilbert-Schmidt-orthonormal basis of the span of π'(a') G over the doubled
/// basis, where G runs over the twisted commutators of the doubled basis and
/// the model's symbol generators. dimension counts complex dimensions.
struct TwistedOneFormSpace {
  std::vector<ComplexMatrix> basis;
  int dimension = 0;
};

TwistedOneFormSpace twisted_one_form_space(const MinimalTwist& mt,
                                           Tolerance tol = {});

struct FluctuationResult {
  ComplexMatrix op;  // D + A + J A J⁻¹
  bool hermitian = false;
  double hermiticity_residual = 0.0;
};

/// Requires a real structure and A inside the one-form span (checked by
/// projection residual; NotAOneForm otherwise). Hermiticity of the result is
/// reported, not enforced.
FluctuationResult twisted_fluctuate(const MinimalTwist& mt,
                                    const ComplexMatrix& a,
                                    Tolerance tol = {});

/// Real-vector-space basis of {A in the one-form span :
/// D + A + J A J⁻¹ Hermitian}.
struct RealSpace {
  std::vector<ComplexMatrix> basis;
  int real_dimension = 0;
};

RealSpace selfadjoint_fluctuation_space(const MinimalTwist& mt,
                                        Tolerance tol = {});

/// Transparency of a fixed block: commutation with the represented algebra
/// (untwisted) or twist-commutation M π'(d) = π'(flip d) M over the doubled
/// basis (twisted).
bool check_transparency(const MinimalTwist& mt, const ComplexMatrix& m,
                        bool twisted, Tolerance tol = {});
double transparency_residual(const MinimalTwist& mt, const ComplexMatrix& m,
                             bool twisted);

}  // namespace mintwist
