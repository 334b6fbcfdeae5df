#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "mintwist/errors.hpp"

namespace mintwist {

using Complex = std::complex<double>;

/// Dense complex matrix: the carrier type for every operator in the library.
/// Values are small (dimension a few dozen at most) and immutable once built,
/// so everything is stored dense and copied freely.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Absolute entrywise tolerance. All comparisons in the library are
/// max-norm against this bound, independent of dimension.
struct Tolerance {
  double atol = 1e-10;

  Tolerance() = default;
  explicit Tolerance(double a) : atol(a) {
    if (!(a > 0.0)) throw Error("Tolerance: atol must be positive");
  }
};

/// Entrywise max norm (0 for empty matrices).
double max_norm(const ComplexMatrix& m);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  Tolerance tol = {});
bool approx_zero(const ComplexMatrix& a, Tolerance tol = {});
bool is_hermitian(const ComplexMatrix& m, Tolerance tol = {});

/// Residual of unitarity, max |U†U - I|.
double unitarity_residual(const ComplexMatrix& u);

ComplexMatrix identity(Eigen::Index n);

/// Result of a Hermitian eigendecomposition. Eigenvalues are sorted in
/// descending order; eigenvector columns are orthonormal and paired with the
/// eigenvalues. Each eigenvector is phase-fixed (first component above the
/// support threshold made real positive) and degenerate groups are ordered
/// deterministically so repeated runs produce the same basis.
struct Eigendecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Throws NonSquare / NotHermitian when the input violates the preconditions.
Eigendecomposition hermitian_eigendecompose(const ComplexMatrix& m,
                                            Tolerance tol = {});

/// Orthonormal basis of {x : Lx = 0}, returned as the columns of an n-by-k
/// matrix (k = 0 when L is injective). Rank decisions use the singular-value
/// cutoff max(rows, cols) * sigma_max * 1e-12.
ComplexMatrix nullspace(const ComplexMatrix& l, Tolerance tol = {});
RealMatrix nullspace(const RealMatrix& l, Tolerance tol = {});

/// Numerical rank under the same cutoff as nullspace().
Eigen::Index numerical_rank(const ComplexMatrix& m);
Eigen::Index numerical_rank(const RealMatrix& m);

/// Kronecker product, row-major index convention: (A ⊗ B)[i*p+k, j*q+l] =
/// A[i,j] * B[k,l] for B of size p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal assembly.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks);

/// Column-major vec / unvec, matching vec(L X R) = (Rᵀ ⊗ L) vec(X).
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows,
                    Eigen::Index cols);

/// Wire format: a JSON array of rows, each entry a two-element [re, im].
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

/// Deterministic random matrices for property tests and probing. Entries are
/// uniform on [-1, 1] + i[-1, 1]; the generator state is derived from the
/// seed alone.
ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols,
                            std::uint64_t seed);
ComplexMatrix random_hermitian(Eigen::Index n, std::uint64_t seed);
ComplexVector random_vector(Eigen::Index n, std::uint64_t seed);

}  // namespace mintwist
