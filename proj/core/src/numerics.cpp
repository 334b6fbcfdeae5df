#include "mintwist/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "json_detail.hpp"

namespace mintwist {

namespace {

constexpr double kRankCutoffFactor = 1e-12;

double rank_cutoff(Eigen::Index rows, Eigen::Index cols, double sigma_max) {
  return static_cast<double>(std::max(rows, cols)) * sigma_max *
         kRankCutoffFactor;
}

// Rotate each column so its first component above the support threshold is
// real positive. Keeps columns orthonormal.
void phase_fix_columns(ComplexMatrix& v) {
  constexpr double support = 1e-12;
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      const double a = std::abs(v(r, c));
      if (a > support) {
        v.col(c) *= std::conj(v(r, c)) / a;
        break;
      }
    }
  }
}

// Deterministic order inside a degenerate eigenvalue group: by index of the
// first supported component, then lexicographically on (re, im) with a small
// comparison slack.
bool column_less(const ComplexMatrix& v, Eigen::Index a, Eigen::Index b) {
  constexpr double support = 1e-12;
  constexpr double slack = 1e-9;
  auto first_support = [&](Eigen::Index c) {
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      if (std::abs(v(r, c)) > support) return r;
    }
    return v.rows();
  };
  const Eigen::Index fa = first_support(a);
  const Eigen::Index fb = first_support(b);
  if (fa != fb) return fa < fb;
  for (Eigen::Index r = 0; r < v.rows(); ++r) {
    const Complex x = v(r, a), y = v(r, b);
    if (std::abs(x.real() - y.real()) > slack) return x.real() > y.real();
    if (std::abs(x.imag() - y.imag()) > slack) return x.imag() > y.imag();
  }
  return false;
}

}  // namespace

double max_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  Tolerance tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_norm(a - b) <= tol.atol;
}

bool approx_zero(const ComplexMatrix& a, Tolerance tol) {
  return max_norm(a) <= tol.atol;
}

bool is_hermitian(const ComplexMatrix& m, Tolerance tol) {
  if (m.rows() != m.cols()) return false;
  return max_norm(m - m.adjoint()) <= tol.atol;
}

double unitarity_residual(const ComplexMatrix& u) {
  return max_norm(u.adjoint() * u -
                  ComplexMatrix::Identity(u.cols(), u.cols()));
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

Eigendecomposition hermitian_eigendecompose(const ComplexMatrix& m,
                                            Tolerance tol) {
  if (m.rows() != m.cols()) {
    throw NonSquare("hermitian_eigendecompose: matrix is " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double herm = max_norm(m - m.adjoint());
  if (herm > tol.atol) {
    throw NotHermitian("hermitian_eigendecompose: |M - M†| = " +
                       std::to_string(herm));
  }

  // Symmetrize so solver noise does not depend on which triangle carried it.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ((m + m.adjoint()) / 2.0).eval());
  const Eigen::Index n = m.rows();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  // Solver returns ascending eigenvalues; flip to descending.
  std::reverse(order.begin(), order.end());

  ComplexMatrix v(n, n);
  std::vector<double> lambda(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    lambda[static_cast<std::size_t>(i)] = solver.eigenvalues()(order[i]);
    v.col(i) = solver.eigenvectors().col(order[i]);
  }
  phase_fix_columns(v);

  // Reorder degenerate groups deterministically.
  const double scale =
      lambda.empty() ? 0.0 : std::max(std::abs(lambda.front()),
                                      std::abs(lambda.back()));
  const double group_tol = std::max(tol.atol, 1e-12 * scale);
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && std::abs(lambda[static_cast<std::size_t>(end)] -
                               lambda[static_cast<std::size_t>(begin)]) <=
                          group_tol) {
      ++end;
    }
    if (end - begin > 1) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = begin; i < end; ++i) idx.push_back(i);
      std::stable_sort(idx.begin(), idx.end(),
                       [&](Eigen::Index a, Eigen::Index b) {
                         return column_less(v, a, b);
                       });
      ComplexMatrix block(n, end - begin);
      for (Eigen::Index i = 0; i < end - begin; ++i) {
        block.col(i) = v.col(idx[static_cast<std::size_t>(i)]);
      }
      v.middleCols(begin, end - begin) = block;
    }
    begin = end;
  }

  return Eigendecomposition{std::move(lambda), std::move(v)};
}

namespace {

// Kernel extraction for tall stacked systems via the normal matrix: the
// eigenvectors of L†L below the (squared) cutoff are the kernel. Avoids an
// SVD of the full stack; singular values here have a large gap in every use.
ComplexMatrix nullspace_via_gram(const ComplexMatrix& l, double factor_rows) {
  const Eigen::Index n = l.cols();
  ComplexMatrix gram = l.adjoint() * l;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ((gram + gram.adjoint()) / 2.0).eval());
  const double sigma_max =
      std::sqrt(std::max(0.0, solver.eigenvalues()(n - 1)));
  const double cutoff = factor_rows * sigma_max * kRankCutoffFactor;
  Eigen::Index kernel = 0;
  while (kernel < n &&
         std::sqrt(std::max(0.0, solver.eigenvalues()(kernel))) <= cutoff) {
    ++kernel;
  }
  ComplexMatrix basis = solver.eigenvectors().leftCols(kernel);
  phase_fix_columns(basis);
  return basis;
}

}  // namespace

ComplexMatrix nullspace(const ComplexMatrix& l, Tolerance) {
  const Eigen::Index n = l.cols();
  if (l.rows() == 0 || n == 0) return ComplexMatrix::Identity(n, n);
  if (n >= 256) {
    return nullspace_via_gram(
        l, static_cast<double>(std::max(l.rows(), l.cols())));
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(l, Eigen::ComputeFullV);
  const double sigma_max = svd.singularValues().size() > 0
                               ? svd.singularValues()(0)
                               : 0.0;
  const double cutoff = rank_cutoff(l.rows(), l.cols(), sigma_max);
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()(rank) > cutoff) {
    ++rank;
  }
  ComplexMatrix basis = svd.matrixV().rightCols(n - rank);
  phase_fix_columns(basis);
  return basis;
}

RealMatrix nullspace(const RealMatrix& l, Tolerance) {
  const Eigen::Index n = l.cols();
  if (l.rows() == 0 || n == 0) return RealMatrix::Identity(n, n);
  if (n >= 256) {
    RealMatrix gram = l.transpose() * l;
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(
        ((gram + gram.transpose()) / 2.0).eval());
    const double sigma_max =
        std::sqrt(std::max(0.0, solver.eigenvalues()(n - 1)));
    const double cutoff = rank_cutoff(l.rows(), l.cols(), sigma_max);
    Eigen::Index kernel = 0;
    while (kernel < n &&
           std::sqrt(std::max(0.0, solver.eigenvalues()(kernel))) <= cutoff) {
      ++kernel;
    }
    return solver.eigenvectors().leftCols(kernel);
  }
  Eigen::JacobiSVD<RealMatrix> svd(l, Eigen::ComputeFullV);
  const double sigma_max = svd.singularValues().size() > 0
                               ? svd.singularValues()(0)
                               : 0.0;
  const double cutoff = rank_cutoff(l.rows(), l.cols(), sigma_max);
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()(rank) > cutoff) {
    ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

Eigen::Index numerical_rank(const ComplexMatrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const double cutoff =
      rank_cutoff(m.rows(), m.cols(), svd.singularValues()(0));
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()(rank) > cutoff) {
    ++rank;
  }
  return rank;
}

Eigen::Index numerical_rank(const RealMatrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const double cutoff =
      rank_cutoff(m.rows(), m.cols(), svd.singularValues()(0));
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()(rank) > cutoff) {
    ++rank;
  }
  return rank;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(),
                                          a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
  Eigen::Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows,
                    Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionMismatch("unvec: size mismatch");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

std::string matrix_to_json(const ComplexMatrix& m) {
  return detail::to_json(m).dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw MatrixShapeError("matrix_from_json: bad JSON");
  return detail::matrix_from_json(j, "matrix");
}

ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols,
                            std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      m(i, j) = Complex(dist(gen), dist(gen));
    }
  }
  return m;
}

ComplexMatrix random_hermitian(Eigen::Index n, std::uint64_t seed) {
  ComplexMatrix m = random_matrix(n, n, seed);
  return ((m + m.adjoint()) / 2.0).eval();
}

ComplexVector random_vector(Eigen::Index n, std::uint64_t seed) {
  return random_matrix(n, 1, seed).col(0);
}

}  // namespace mintwist
