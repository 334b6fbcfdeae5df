#include "mintwist/krein.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace mintwist {

namespace {

// Accumulate the Gram matrix of the vec-operator sum_i L_i X R_i into g,
// using vec(L X R) = (Rᵀ ⊗ L) vec(X).
void accumulate_gram(ComplexMatrix& g,
                     const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>&
                         terms) {
  for (const auto& [li, ri] : terms) {
    for (const auto& [lj, rj] : terms) {
      g += kron((ri.conjugate() * rj.transpose()).eval(),
                (li.adjoint() * lj).eval());
    }
  }
}

double smallest_singular_value(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().size() > 0
             ? svd.singularValues()(svd.singularValues().size() - 1)
             : 0.0;
}

// Deterministic probe: a span contains an invertible element iff a random
// combination is invertible (the invertible elements form an open dense set
// whenever one exists).
bool span_contains_invertible(const std::vector<ComplexMatrix>& basis,
                              Tolerance tol) {
  if (basis.empty()) return false;
  std::mt19937_64 gen(0xC0FFEEull);
  std::normal_distribution<double> dist(0.0, 1.0);
  const Eigen::Index n = basis.front().rows();
  for (int attempt = 0; attempt < 24; ++attempt) {
    ComplexMatrix combo = ComplexMatrix::Zero(n, n);
    for (const auto& b : basis) combo += dist(gen) * b;
    const double scale = std::max(1.0, max_norm(combo));
    if (smallest_singular_value(combo) > tol.atol * scale) return true;
  }
  return false;
}

}  // namespace

ImplementerSpace solve_implementers(const MinimalTwist& mt, Tolerance tol) {
  const Eigen::Index n = mt.base.rep.total_dim();
  const ComplexMatrix id = identity(n);

  // Gram of the stacked system {R T + T R = 0} ∪ {R π(a) - π(a) R = 0}.
  ComplexMatrix gram = ComplexMatrix::Zero(n * n, n * n);
  accumulate_gram(gram, {{mt.t_op, id}, {id, mt.t_op}});
  std::size_t constraint_count = 1;
  for (const auto& a : algebra_basis(mt.base.rep.algebra)) {
    const ComplexMatrix pa = represent(mt.base.rep, a);
    accumulate_gram(gram, {{pa, id}, {-id, pa}});
    ++constraint_count;
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ((gram + gram.adjoint()) / 2.0).eval());
  const double sigma_max =
      std::sqrt(std::max(0.0, solver.eigenvalues()(n * n - 1)));
  const double cutoff = static_cast<double>(constraint_count) *
                        static_cast<double>(n * n) * sigma_max * 1e-12;

  std::vector<ComplexMatrix> complex_basis;
  for (Eigen::Index k = 0; k < n * n; ++k) {
    if (std::sqrt(std::max(0.0, solver.eigenvalues()(k))) <= cutoff) {
      complex_basis.push_back(unvec(solver.eigenvectors().col(k), n, n));
    } else {
      break;  // eigenvalues ascend; the rest are nonzero
    }
  }

  ImplementerSpace space;
  if (complex_basis.empty()) return space;

  // The solutions are block off-diagonal in the eigenbasis of T.
  for (const auto& b : complex_basis) {
    const double diag_leak =
        std::max(max_norm(mt.p_plus * b * mt.p_plus),
                 max_norm(mt.p_minus * b * mt.p_minus));
    if (diag_leak > 1e-8) {
      throw Error("solve_implementers: solution has diagonal blocks");
    }
  }

  // Implementers must conjugate, hence be invertible; a span without any
  // invertible element implements nothing.
  if (!span_contains_invertible(complex_basis, tol)) return space;

  for (const auto& b : complex_basis) {
    space.basis.push_back(b);
    space.basis.push_back(Complex(0, 1) * b);
  }
  space.real_dimension = static_cast<int>(space.basis.size());
  return space;
}

ExpandabilityReport expandability_necessary(const MinimalTwist& mt,
                                            Tolerance tol) {
  ExpandabilityReport rep;
  rep.dim_plus = static_cast<Eigen::Index>(
      std::llround(mt.p_plus.trace().real()));
  rep.dim_minus = static_cast<Eigen::Index>(
      std::llround(mt.p_minus.trace().real()));
  rep.dims_equal = rep.dim_plus == rep.dim_minus;
  double res = 0.0;
  for (const auto& a : algebra_basis(mt.base.rep.algebra)) {
    const ComplexMatrix pa = represent(mt.base.rep, a);
    res = std::max(res, std::abs((mt.p_plus * pa).trace() -
                                 (mt.p_minus * pa).trace()));
  }
  rep.trace_residual = res;
  rep.traces_equal = res <= tol.atol;
  return rep;
}

ComplexMatrix select_hermitian_invertible(
    const ImplementerSpace& space,
    const std::optional<ComplexMatrix>& preference, Tolerance tol) {
  if (space.empty()) {
    throw NoHermitianInvertible("select_hermitian_invertible: empty space");
  }
  const Eigen::Index n = space.basis.front().rows();

  // Orthonormalize the real span once for projections.
  RealMatrix stacked(2 * n * n, static_cast<Eigen::Index>(space.basis.size()));
  for (std::size_t k = 0; k < space.basis.size(); ++k) {
    const ComplexVector v = vec(space.basis[k]);
    stacked.col(static_cast<Eigen::Index>(k)).head(n * n) = v.real();
    stacked.col(static_cast<Eigen::Index>(k)).tail(n * n) = v.imag();
  }
  Eigen::JacobiSVD<RealMatrix> svd(stacked, Eigen::ComputeThinU);
  const double cutoff = static_cast<double>(std::max(stacked.rows(),
                                                     stacked.cols())) *
                        svd.singularValues()(0) * 1e-12;
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()(rank) > cutoff) {
    ++rank;
  }
  const RealMatrix q = svd.matrixU().leftCols(rank);

  if (preference) {
    const ComplexMatrix& r = *preference;
    if (r.rows() == n && r.cols() == n) {
      RealVector v(2 * n * n);
      const ComplexVector cv = vec(r);
      v.head(n * n) = cv.real();
      v.tail(n * n) = cv.imag();
      const double in_span = (v - q * (q.transpose() * v)).cwiseAbs().maxCoeff();
      const double scale = std::max(1.0, max_norm(r));
      if (in_span <= tol.atol * scale && is_hermitian(r, tol) &&
          smallest_singular_value(r) > tol.atol * scale) {
        return r;
      }
    }
  }

  // Hermitian slice of the span, in real coordinates.
  RealMatrix defect(2 * n * n, static_cast<Eigen::Index>(space.basis.size()));
  for (std::size_t k = 0; k < space.basis.size(); ++k) {
    const ComplexVector d =
        vec((space.basis[k] - space.basis[k].adjoint()).eval());
    defect.col(static_cast<Eigen::Index>(k)).head(n * n) = d.real();
    defect.col(static_cast<Eigen::Index>(k)).tail(n * n) = d.imag();
  }
  const RealMatrix slice = nullspace(defect, tol);
  if (slice.cols() == 0) {
    throw NoHermitianInvertible("no Hermitian element in the span");
  }

  std::mt19937_64 gen(0x5EEDull);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ComplexMatrix candidate = ComplexMatrix::Zero(n, n);
    for (Eigen::Index c = 0; c < slice.cols(); ++c) {
      const double weight = dist(gen);
      for (std::size_t k = 0; k < space.basis.size(); ++k) {
        candidate +=
            weight * slice(static_cast<Eigen::Index>(k), c) * space.basis[k];
      }
    }
    candidate = ((candidate + candidate.adjoint()) / 2.0).eval();
    const double scale = max_norm(candidate);
    if (scale < tol.atol) continue;
    candidate /= scale;
    if (smallest_singular_value(candidate) > tol.atol) {
      // Deterministic presentation: largest entry gets positive real part.
      Eigen::Index bi = 0, bj = 0;
      candidate.cwiseAbs().maxCoeff(&bi, &bj);
      const Complex lead = candidate(bi, bj);
      if (std::abs(lead.real()) > 1e-12 ? lead.real() < 0 : lead.imag() < 0) {
        candidate = -candidate;
      }
      return candidate;
    }
  }
  throw NoHermitianInvertible("no invertible Hermitian combination found");
}

Complex twisted_product(const ComplexMatrix& r, const ComplexVector& psi,
                        const ComplexVector& phi) {
  if (r.rows() != r.cols() || psi.size() != r.rows() ||
      phi.size() != r.cols()) {
    throw DimensionMismatch("twisted_product: dimension mismatch");
  }
  return psi.dot(r * phi);
}

bool check_hermitian_product(const ComplexMatrix& r, Tolerance tol) {
  return is_hermitian(r, tol);
}

KreinAnalysis krein_decompose(const ComplexMatrix& r, Tolerance tol) {
  if (!is_hermitian(r, tol)) {
    throw NotHermitian("krein_decompose: R is not Hermitian");
  }
  const auto eig = hermitian_eigendecompose(r, tol);

  KreinAnalysis out;
  out.r_op = r;
  out.lambda_min = std::numeric_limits<double>::infinity();
  for (double l : eig.eigenvalues) {
    out.lambda_min = std::min(out.lambda_min, std::abs(l));
  }
  if (!(out.lambda_min > tol.atol)) {
    throw Singular("krein_decompose: smallest |eigenvalue| = " +
                   std::to_string(out.lambda_min));
  }
  for (double l : eig.eigenvalues) {
    (l > 0 ? out.p : out.q) += 1;
  }
  out.h_plus_basis = eig.eigenvectors.leftCols(out.p);
  out.h_minus_basis = eig.eigenvectors.rightCols(out.q);
  out.fundamental_symmetry =
      out.h_plus_basis * out.h_plus_basis.adjoint() -
      out.h_minus_basis * out.h_minus_basis.adjoint();
  return out;
}

bool verify_fundamental_symmetry(const ComplexMatrix& r,
                                 const ComplexMatrix& f, Tolerance tol) {
  const Eigen::Index n = r.rows();
  if (f.rows() != n || f.cols() != n) return false;
  if (max_norm(f * f - identity(n)) > tol.atol) return false;
  // Symmetry of F for the R-product is R F = F† R.
  if (max_norm(r * f - f.adjoint() * r) > tol.atol) return false;
  // Positivity of (·, F·)_R: the Hermitian matrix R F is positive definite.
  const ComplexMatrix rf = r * f;
  if (!is_hermitian(rf, tol)) return false;
  const auto eig = hermitian_eigendecompose(rf, tol);
  return eig.eigenvalues.back() > tol.atol;
}

bool recover_hilbert_product(const ComplexMatrix& r, Tolerance tol) {
  if (smallest_singular_value(r) <= tol.atol) {
    throw Singular("recover_hilbert_product: R is singular");
  }
  // (e_i, R⁻¹ e_j)_R = (R R⁻¹)_{ij}, so the recovery identity over a full
  // basis of pairs is exactly R R⁻¹ = I.
  const ComplexMatrix check = r * r.inverse();
  return max_norm(check - identity(r.rows())) <= tol.atol;
}

bool is_twisted_unitary(const ComplexMatrix& r, const ComplexMatrix& u,
                        Tolerance tol) {
  if (u.rows() != r.rows() || u.cols() != r.cols()) {
    throw DimensionMismatch("is_twisted_unitary: dimension mismatch");
  }
  return max_norm(u.adjoint() * r * u - r) <= tol.atol;
}

int twisted_unitary_algebra_dim(const ComplexMatrix& r, Tolerance tol) {
  const Eigen::Index n = r.rows();
  if (r.cols() != n) throw NonSquare("twisted_unitary_algebra_dim");
  if (smallest_singular_value(r) <= tol.atol) {
    throw Singular("twisted_unitary_algebra_dim: R is singular");
  }
  // X ↦ X† is only real-linear, so the system runs over (Re X, Im X).
  RealMatrix system(2 * n * n, 2 * n * n);
  Eigen::Index col = 0;
  for (int part = 0; part < 2; ++part) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        ComplexMatrix x = ComplexMatrix::Zero(n, n);
        x(i, j) = part == 0 ? Complex(1, 0) : Complex(0, 1);
        const ComplexVector img = vec((x.adjoint() * r + r * x).eval());
        system.col(col).head(n * n) = img.real();
        system.col(col).tail(n * n) = img.imag();
        ++col;
      }
    }
  }
  return static_cast<int>(nullspace(system, tol).cols());
}

double rho_unitarity_residual(const MinimalTwist& mt, const ComplexMatrix& r) {
  const ComplexMatrix rinv = r.inverse();
  double res = 0.0;
  for (const auto& d : doubled_basis(mt)) {
    const ComplexMatrix pd = doubled_represent(mt, d);
    const ComplexMatrix lhs = r * pd.adjoint() * rinv;
    const ComplexMatrix rhs = (rinv * pd * r).adjoint();
    res = std::max(res, max_norm(lhs - rhs));
  }
  return res;
}

bool check_rho_unitarity(const MinimalTwist& mt, const ComplexMatrix& r,
                         Tolerance tol) {
  if (smallest_singular_value(r) <= tol.atol) {
    throw Singular("check_rho_unitarity: R is singular");
  }
  return rho_unitarity_residual(mt, r) <= tol.atol;
}

}  // namespace mintwist
