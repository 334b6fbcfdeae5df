#include "mintwist/triple.hpp"

#include <algorithm>

namespace mintwist {

bool ValidationReport::pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& it) { return it.pass; });
}

double ValidationReport::max_residual() const {
  double r = 0.0;
  for (const auto& it : items) r = std::max(r, it.residual);
  return r;
}

ValidationReport validate_triple(const FiniteTriple& st, Tolerance tol) {
  ValidationReport report;
  const Eigen::Index n = st.rep.total_dim();
  auto item = [&](const std::string& name, double residual,
                  const std::string& detail) {
    report.items.push_back(
        CheckItem{name, residual <= tol.atol, residual, detail});
  };

  if (st.dirac.rows() != n || st.dirac.cols() != n) {
    report.items.push_back(CheckItem{
        "dirac-shape", false, 1.0,
        "dirac must be square of the representation dimension"});
    return report;
  }
  item("dirac-hermitian", max_norm(st.dirac - st.dirac.adjoint()),
       "D = D†");

  const auto basis = algebra_basis(st.rep.algebra);

  if (st.grading) {
    const ComplexMatrix& g = *st.grading;
    if (g.rows() != n || g.cols() != n) {
      report.items.push_back(
          CheckItem{"grading-shape", false, 1.0, "grading dimension"});
    } else {
      item("grading-hermitian", max_norm(g - g.adjoint()), "Γ = Γ†");
      item("grading-involutive", max_norm(g * g - identity(n)), "Γ² = I");
      item("grading-anticommutes-dirac", max_norm(g * st.dirac + st.dirac * g),
           "{Γ, D} = 0");
      double res = 0.0;
      for (const auto& a : basis) {
        const ComplexMatrix pa = represent(st.rep, a);
        res = std::max(res, max_norm(g * pa - pa * g));
      }
      item("grading-commutes-algebra", res, "[Γ, π(a)] = 0 over the basis");
    }
  }

  if (st.real) {
    const RealStructure& rs = *st.real;
    const ComplexMatrix& j = rs.j_matrix;
    if (j.rows() != n || j.cols() != n) {
      report.items.push_back(
          CheckItem{"real-shape", false, 1.0, "j_matrix dimension"});
      return report;
    }
    item("real-antiunitary", unitarity_residual(j), "j unitary");
    item("real-squares-to-eps",
         max_norm(j * j.conjugate() -
                  static_cast<double>(rs.eps) * identity(n)),
         "J² = εI");
    item("real-dirac-sign",
         max_norm(j * st.dirac.conjugate() -
                  static_cast<double>(rs.eps_prime) * st.dirac * j),
         "JD = ε′DJ");
    if (st.grading) {
      item("real-grading-sign",
           max_norm(j * st.grading->conjugate() -
                    static_cast<double>(rs.eps_second) * (*st.grading) * j),
           "JΓ = ε″ΓJ");
    }
  }

  return report;
}

ComplexMatrix conjugate_by_real(const FiniteTriple& st,
                                const ComplexMatrix& m) {
  if (!st.real) throw NoRealStructure("conjugate_by_real: no real structure");
  const ComplexMatrix& j = st.real->j_matrix;
  if (m.rows() != j.rows() || m.cols() != j.cols()) {
    throw DimensionMismatch("conjugate_by_real: operator dimension");
  }
  return j * m.conjugate() * j.adjoint();
}

double order_zero_residual(const FiniteTriple& st) {
  if (!st.real) throw NoRealStructure("check_order_zero: no real structure");
  const auto basis = algebra_basis(st.rep.algebra);
  double res = 0.0;
  for (const auto& b : basis) {
    const ComplexMatrix jb = conjugate_by_real(st, represent(st.rep, b));
    for (const auto& a : basis) {
      const ComplexMatrix pa = represent(st.rep, a);
      res = std::max(res, max_norm(pa * jb - jb * pa));
    }
  }
  return res;
}

bool check_order_zero(const FiniteTriple& st, Tolerance tol) {
  return order_zero_residual(st) <= tol.atol;
}

double first_order_residual(const FiniteTriple& st) {
  if (!st.real) throw NoRealStructure("check_first_order: no real structure");
  const auto basis = algebra_basis(st.rep.algebra);
  double res = 0.0;
  for (const auto& b : basis) {
    const ComplexMatrix jb = conjugate_by_real(st, represent(st.rep, b));
    for (const auto& a : basis) {
      const ComplexMatrix pa = represent(st.rep, a);
      const ComplexMatrix da = st.dirac * pa - pa * st.dirac;
      res = std::max(res, max_norm(da * jb - jb * da));
    }
  }
  return res;
}

bool check_first_order(const FiniteTriple& st, Tolerance tol) {
  return first_order_residual(st) <= tol.atol;
}

}  // namespace mintwist
