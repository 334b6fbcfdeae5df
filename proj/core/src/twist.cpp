#include "mintwist/twist.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace mintwist {

DoubledElement flip(const DoubledElement& d) { return {d.second, d.first}; }

DoubledElement doubled_multiply(const DoubledElement& a,
                                const DoubledElement& b) {
  return {multiply(a.first, b.first), multiply(a.second, b.second)};
}

namespace {

// Real rank of the span of the given matrices, viewed over the reals.
Eigen::Index real_span_rank(const std::vector<ComplexMatrix>& mats) {
  if (mats.empty()) return 0;
  const Eigen::Index len = mats.front().size();
  RealMatrix stacked(2 * len, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const ComplexVector v = vec(mats[k]);
    stacked.col(static_cast<Eigen::Index>(k)).head(len) = v.real();
    stacked.col(static_cast<Eigen::Index>(k)).tail(len) = v.imag();
  }
  return numerical_rank(stacked);
}

}  // namespace

MinimalTwist build_minimal_twist(const FiniteTriple& st, const ComplexMatrix& t,
                                 Tolerance tol,
                                 std::vector<ComplexMatrix> symbol_generators) {
  const Eigen::Index n = st.rep.total_dim();
  if (t.rows() != n || t.cols() != n) {
    throw InvalidTwistOperator("twisting operator has wrong dimension");
  }
  if (max_norm(t - t.adjoint()) > tol.atol) {
    throw InvalidTwistOperator("twisting operator is not selfadjoint");
  }
  if (max_norm(t * t - identity(n)) > tol.atol) {
    throw InvalidTwistOperator("twisting operator does not square to I");
  }
  if (max_norm(t - identity(n)) <= tol.atol ||
      max_norm(t + identity(n)) <= tol.atol) {
    throw InvalidTwistOperator("twisting operator is a multiple of I");
  }
  for (const auto& a : algebra_basis(st.rep.algebra)) {
    const ComplexMatrix pa = represent(st.rep, a);
    if (max_norm(t * pa - pa * t) > tol.atol) {
      throw InvalidTwistOperator(
          "twisting operator does not commute with the algebra");
    }
  }

  MinimalTwist mt;
  mt.base = st;
  mt.t_op = t;
  mt.p_plus = (identity(n) + t) / 2.0;
  mt.p_minus = (identity(n) - t) / 2.0;
  mt.symbol_generators = std::move(symbol_generators);

  // Faithfulness of the doubled representation.
  std::vector<ComplexMatrix> images;
  for (const auto& d : doubled_basis(mt)) {
    images.push_back(doubled_represent(mt, d));
  }
  if (real_span_rank(images) != static_cast<Eigen::Index>(images.size())) {
    throw NotFaithful("doubled representation is not faithful");
  }
  return mt;
}

ComplexMatrix grading_as_twist(const FiniteTriple& st) {
  if (!st.grading) throw NoGrading("grading_as_twist: triple has no grading");
  return *st.grading;
}

ComplexMatrix doubled_represent(const MinimalTwist& mt,
                                const DoubledElement& d) {
  return mt.p_plus * represent(mt.base.rep, d.first) +
         mt.p_minus * represent(mt.base.rep, d.second);
}

std::vector<DoubledElement> doubled_basis(const MinimalTwist& mt) {
  const auto basis = algebra_basis(mt.base.rep.algebra);
  const AlgebraElement zero = zero_element(mt.base.rep.algebra);
  std::vector<DoubledElement> out;
  out.reserve(2 * basis.size());
  for (const auto& e : basis) out.push_back({e, zero});
  for (const auto& e : basis) out.push_back({zero, e});
  return out;
}

ComplexMatrix twisted_commutator(const MinimalTwist& mt,
                                 const DoubledElement& d) {
  return mt.base.dirac * doubled_represent(mt, d) -
         doubled_represent(mt, flip(d)) * mt.base.dirac;
}

double twisted_first_order_residual(const MinimalTwist& mt) {
  if (!mt.base.real) {
    throw NoRealStructure("twisted first-order check: no real structure");
  }
  const auto basis = doubled_basis(mt);
  double res = 0.0;
  for (const auto& b : basis) {
    const ComplexMatrix y = conjugate_by_real(mt.base, doubled_represent(mt, b));
    const ComplexMatrix y_twisted =
        conjugate_by_real(mt.base, doubled_represent(mt, flip(b)));
    for (const auto& a : basis) {
      const ComplexMatrix x = twisted_commutator(mt, a);
      res = std::max(res, max_norm(x * y - y_twisted * x));
    }
  }
  return res;
}

bool check_twisted_first_order(const MinimalTwist& mt, Tolerance tol) {
  return twisted_first_order_residual(mt) <= tol.atol;
}

TwistedOneFormSpace twisted_one_form_space(const MinimalTwist& mt,
                                           Tolerance) {
  const auto basis = doubled_basis(mt);
  std::vector<ComplexMatrix> generators;
  for (const auto& b : basis) generators.push_back(twisted_commutator(mt, b));
  for (const auto& g : mt.symbol_generators) generators.push_back(g);

  const Eigen::Index n = mt.base.rep.total_dim();
  std::vector<ComplexVector> columns;
  for (const auto& a : basis) {
    const ComplexMatrix pa = doubled_represent(mt, a);
    for (const auto& g : generators) {
      columns.push_back(vec((pa * g).eval()));
    }
  }
  ComplexMatrix stacked(n * n, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    stacked.col(static_cast<Eigen::Index>(k)) = columns[k];
  }

  TwistedOneFormSpace space;
  if (stacked.cols() == 0) return space;
  Eigen::JacobiSVD<ComplexMatrix> svd(stacked, Eigen::ComputeThinU);
  const double sigma_max = svd.singularValues().size() > 0
                               ? svd.singularValues()(0)
                               : 0.0;
  const double cutoff = static_cast<double>(std::max(stacked.rows(),
                                                     stacked.cols())) *
                        sigma_max * 1e-12;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()(k) > cutoff) {
      space.basis.push_back(unvec(svd.matrixU().col(k), n, n));
    }
  }
  space.dimension = static_cast<int>(space.basis.size());
  return space;
}

namespace {

// Complex projection residual of m against the span of the (orthonormal in
// Hilbert-Schmidt) basis.
double one_form_projection_residual(const TwistedOneFormSpace& space,
                                    const ComplexMatrix& m) {
  ComplexVector v = vec(m);
  ComplexVector proj = ComplexVector::Zero(v.size());
  for (const auto& b : space.basis) {
    const ComplexVector bv = vec(b);
    proj += bv.dot(v) * bv;  // dot conjugates the left factor
  }
  return (v - proj).cwiseAbs().maxCoeff();
}

}  // namespace

FluctuationResult twisted_fluctuate(const MinimalTwist& mt,
                                    const ComplexMatrix& a, Tolerance tol) {
  if (!mt.base.real) {
    throw NoRealStructure("twisted_fluctuate: no real structure");
  }
  const Eigen::Index n = mt.base.rep.total_dim();
  if (a.rows() != n || a.cols() != n) {
    throw DimensionMismatch("twisted_fluctuate: one-form dimension");
  }
  const auto space = twisted_one_form_space(mt, tol);
  const double membership = one_form_projection_residual(space, a);
  if (membership > tol.atol) {
    throw NotAOneForm("twisted_fluctuate: projection residual " +
                      std::to_string(membership));
  }
  FluctuationResult out;
  out.op = mt.base.dirac + a + conjugate_by_real(mt.base, a);
  out.hermiticity_residual = max_norm(out.op - out.op.adjoint());
  out.hermitian = out.hermiticity_residual <= tol.atol;
  return out;
}

RealSpace selfadjoint_fluctuation_space(const MinimalTwist& mt,
                                        Tolerance tol) {
  if (!mt.base.real) {
    throw NoRealStructure("selfadjoint_fluctuation_space: no real structure");
  }
  const auto space = twisted_one_form_space(mt, tol);
  RealSpace out;
  if (space.basis.empty()) return out;

  // Real coordinates over {B_k, i B_k}; the Hermiticity defect of
  // A + J A J⁻¹ is real-linear in them.
  std::vector<ComplexMatrix> real_basis;
  for (const auto& b : space.basis) {
    real_basis.push_back(b);
    real_basis.push_back(Complex(0, 1) * b);
  }
  const Eigen::Index n = mt.base.rep.total_dim();
  RealMatrix system(2 * n * n, static_cast<Eigen::Index>(real_basis.size()));
  for (std::size_t k = 0; k < real_basis.size(); ++k) {
    const ComplexMatrix fluct =
        real_basis[k] + conjugate_by_real(mt.base, real_basis[k]);
    const ComplexVector defect = vec((fluct - fluct.adjoint()).eval());
    system.col(static_cast<Eigen::Index>(k)).head(n * n) = defect.real();
    system.col(static_cast<Eigen::Index>(k)).tail(n * n) = defect.imag();
  }
  const RealMatrix kernel = nullspace(system, tol);
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    ComplexMatrix combo = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < real_basis.size(); ++k) {
      combo += kernel(static_cast<Eigen::Index>(k), c) * real_basis[k];
    }
    out.basis.push_back(combo);
  }
  out.real_dimension = static_cast<int>(out.basis.size());
  return out;
}

double transparency_residual(const MinimalTwist& mt, const ComplexMatrix& m,
                             bool twisted) {
  double res = 0.0;
  if (twisted) {
    for (const auto& d : doubled_basis(mt)) {
      res = std::max(res, max_norm(m * doubled_represent(mt, d) -
                                   doubled_represent(mt, flip(d)) * m));
    }
  } else {
    for (const auto& a : algebra_basis(mt.base.rep.algebra)) {
      const ComplexMatrix pa = represent(mt.base.rep, a);
      res = std::max(res, max_norm(m * pa - pa * m));
    }
  }
  return res;
}

bool check_transparency(const MinimalTwist& mt, const ComplexMatrix& m,
                        bool twisted, Tolerance tol) {
  if (m.rows() != mt.base.rep.total_dim() ||
      m.cols() != mt.base.rep.total_dim()) {
    throw DimensionMismatch("check_transparency: block dimension");
  }
  return transparency_residual(mt, m, twisted) <= tol.atol;
}

}  // namespace mintwist
