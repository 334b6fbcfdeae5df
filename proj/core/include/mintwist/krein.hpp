#pragma once

#include <optional>

#include "mintwist/twist.hpp"

namespace mintwist {

/// Solutions R of the linear system {R, T} = 0, [R, π(a)] = 0 over the
/// algebra basis, as a real vector space. Implementers conjugate the doubled
/// representation into its flip, which requires invertibility; when the
/// solution span of the linear system contains no invertible element the
/// twist has no implementer at all and the space is reported empty.
struct ImplementerSpace {
  std::vector<ComplexMatrix> basis;  // real-vector-space basis
  int real_dimension = 0;

  bool empty() const { return basis.empty(); }
};

ImplementerSpace solve_implementers(const MinimalTwist& mt, Tolerance tol = {});

/// The two cheap necessary conditions for an implementer to exist: equal
/// eigenspace dimensions of T, and equal traces of the two half
/// representations on every basis element.
struct ExpandabilityReport {
  bool dims_equal = false;
  bool traces_equal = false;
  Eigen::Index dim_plus = 0;
  Eigen::Index dim_minus = 0;
  double trace_residual = 0.0;
};

ExpandabilityReport expandability_necessary(const MinimalTwist& mt,
                                            Tolerance tol = {});

/// Returns the preference when it lies in the span and is Hermitian and
/// invertible; otherwise searches the Hermitian slice of the span for an
/// invertible element with a bounded number of seeded random draws. Throws
/// NoHermitianInvertible when the budget is exhausted (or the space empty).
ComplexMatrix select_hermitian_invertible(
    const ImplementerSpace& space,
    const std::optional<ComplexMatrix>& preference, Tolerance tol = {});

/// (psi, phi)_R = <psi, R phi>, conjugate-linear in the first slot.
Complex twisted_product(const ComplexMatrix& r, const ComplexVector& psi,
                        const ComplexVector& phi);

/// R = R† within tolerance; equivalent to conjugate symmetry of the product.
bool check_hermitian_product(const ComplexMatrix& r, Tolerance tol = {});

/// Spectral decomposition of the indefinite product: H splits into the
/// positive and negative eigenspaces of R, with the fundamental symmetry
/// F = P+ - P- and lambda_min the smallest |eigenvalue|.
struct KreinAnalysis {
  ComplexMatrix r_op;
  Eigen::Index p = 0;  // positive eigenvalues
  Eigen::Index q = 0;  // negative eigenvalues
  ComplexMatrix h_plus_basis;
  ComplexMatrix h_minus_basis;
  double lambda_min = 0.0;
  ComplexMatrix fundamental_symmetry;

  /// p >= 1 and q >= 1; products coming from a twist are never definite.
  bool indefinite() const { return p >= 1 && q >= 1; }
};

/// Throws NotHermitian / Singular.
KreinAnalysis krein_decompose(const ComplexMatrix& r, Tolerance tol = {});

/// F² = I, F symmetric for the R-product, and (·, F·) positive definite
/// (checked through positive definiteness of the Hermitian matrix R F).
bool verify_fundamental_symmetry(const ComplexMatrix& r,
                                 const ComplexMatrix& f, Tolerance tol = {});

/// <psi, phi> = (psi, R⁻¹ phi)_R on a full basis of vector pairs.
bool recover_hilbert_product(const ComplexMatrix& r, Tolerance tol = {});

/// u† R u = R.
bool is_twisted_unitary(const ComplexMatrix& r, const ComplexMatrix& u,
                        Tolerance tol = {});

/// Real dimension of {X : X† R + R X = 0}, computed as the nullspace of the
/// real-linear system on vec(X). Equals (p + q)² for Hermitian invertible R.
int twisted_unitary_algebra_dim(const ComplexMatrix& r, Tolerance tol = {});

/// Unitarity of the twisting automorphism in the involutive sense: the
/// R-conjugated star of every doubled basis element agrees with the starred
/// inverse conjugation.
bool check_rho_unitarity(const MinimalTwist& mt, const ComplexMatrix& r,
                         Tolerance tol = {});
double rho_unitarity_residual(const MinimalTwist& mt, const ComplexMatrix& r);

}  // namespace mintwist
