#pragma once

// Test-side oracles, independent of the implementation paths they check.

#include <utility>
#include <vector>

#include "mintwist/krein.hpp"
#include "mintwist/twist.hpp"

namespace mintwist::testing {

// Literal stacked constraint matrix of the implementer system, solved with
// the SVD-based kernel (the production solver goes through the normal
// matrix). Returns the complex kernel dimension.
inline Eigen::Index implementer_nullity_oracle(const MinimalTwist& mt) {
  const Eigen::Index n = mt.base.rep.total_dim();
  std::vector<ComplexMatrix> reps;
  for (const auto& a : algebra_basis(mt.base.rep.algebra)) {
    reps.push_back(represent(mt.base.rep, a));
  }
  const Eigen::Index rows =
      static_cast<Eigen::Index>(1 + reps.size()) * n * n;
  ComplexMatrix stacked(rows, n * n);
  Eigen::Index col = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, j) = Complex(1, 0);
      Eigen::Index row = 0;
      stacked.col(col).segment(row, n * n) =
          vec((e * mt.t_op + mt.t_op * e).eval());
      row += n * n;
      for (const auto& pa : reps) {
        stacked.col(col).segment(row, n * n) = vec((e * pa - pa * e).eval());
        row += n * n;
      }
      ++col;
    }
  }
  return nullspace(stacked).cols();
}

// The opposite-sign vector pair attached to a Hermitian off-diagonal
// implementer: psi = phi_plus + phi_minus and its sign-flipped partner.
struct SignPair {
  ComplexVector psi;
  ComplexVector psi_tilde;
};

inline SignPair opposite_sign_pair(const MinimalTwist& mt,
                                   const ComplexMatrix& r) {
  const Eigen::Index n = mt.base.rep.total_dim();
  for (Eigen::Index k = 0; k < n; ++k) {
    const ComplexVector x = mt.p_minus * ComplexVector::Unit(n, k);
    if (x.norm() < 0.5) continue;
    const ComplexVector up = mt.p_plus * (r * x);
    if (up.norm() > 1e-8) {
      return SignPair{up + x, up - x};
    }
  }
  throw Error("opposite_sign_pair: no coupling column found");
}

// Max-norm residual of the HS-projection of m onto the real span of basis
// (assumed orthonormal as real vectors).
inline double real_span_residual(const std::vector<ComplexMatrix>& basis,
                                 const ComplexMatrix& m) {
  const Eigen::Index len = m.size();
  RealVector v(2 * len);
  const ComplexVector cv = vec(m);
  v.head(len) = cv.real();
  v.tail(len) = cv.imag();
  RealVector proj = RealVector::Zero(2 * len);
  for (const auto& b : basis) {
    RealVector bv(2 * len);
    const ComplexVector cb = vec(b);
    bv.head(len) = cb.real();
    bv.tail(len) = cb.imag();
    proj += bv.dot(v) * bv;
  }
  return (v - proj).cwiseAbs().maxCoeff();
}

}  // namespace mintwist::testing
