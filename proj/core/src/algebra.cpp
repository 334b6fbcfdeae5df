#include "mintwist/algebra.hpp"

#include <random>

namespace mintwist {

namespace {

ComplexMatrix quaternion_matrix(Complex alpha, Complex beta) {
  ComplexMatrix q(2, 2);
  q << alpha, beta, -std::conj(beta), std::conj(alpha);
  return q;
}

bool quaternion_pattern_ok(const ComplexMatrix& q, double atol) {
  if (q.rows() != 2 || q.cols() != 2) return false;
  return std::abs(q(1, 1) - std::conj(q(0, 0))) <= atol &&
         std::abs(q(1, 0) + std::conj(q(0, 1))) <= atol;
}

}  // namespace

int Summand::dim() const {
  switch (kind) {
    case SummandKind::Complex:
      return 1;
    case SummandKind::Quaternion:
      return 2;
    case SummandKind::FullMatrix:
      return n;
  }
  return 0;
}

std::string Summand::label() const {
  switch (kind) {
    case SummandKind::Complex:
      return "C";
    case SummandKind::Quaternion:
      return "H";
    case SummandKind::FullMatrix:
      return "M(" + std::to_string(n) + ")";
  }
  return "?";
}

Summand complex_summand() { return Summand{SummandKind::Complex, 1}; }
Summand quaternion_summand() { return Summand{SummandKind::Quaternion, 2}; }

Summand full_matrix_summand(int n) {
  if (n < 1) throw SpecMismatch("full_matrix_summand: n must be >= 1");
  return Summand{SummandKind::FullMatrix, n};
}

Summand summand_from_label(const std::string& label) {
  if (label == "C") return complex_summand();
  if (label == "H") return quaternion_summand();
  if (label.size() >= 4 && label.substr(0, 2) == "M(" &&
      label.back() == ')') {
    return full_matrix_summand(std::stoi(label.substr(2, label.size() - 3)));
  }
  throw SchemaError("unknown summand label '" + label + "'");
}

int AlgebraSpec::real_dimension() const {
  int d = 0;
  for (const auto& s : summands) {
    switch (s.kind) {
      case SummandKind::Complex:
        d += 2;
        break;
      case SummandKind::Quaternion:
        d += 4;
        break;
      case SummandKind::FullMatrix:
        d += 2 * s.n * s.n;
        break;
    }
  }
  return d;
}

AlgebraSpec make_algebra(std::vector<Summand> summands) {
  if (summands.empty()) {
    throw SpecMismatch("make_algebra: at least one summand required");
  }
  for (const auto& s : summands) {
    if (s.kind == SummandKind::FullMatrix && s.n < 1) {
      throw SpecMismatch("make_algebra: FullMatrix size must be >= 1");
    }
  }
  return AlgebraSpec{std::move(summands)};
}

bool element_matches(const AlgebraSpec& spec, const AlgebraElement& x,
                     Tolerance tol) {
  if (x.components.size() != spec.summands.size()) return false;
  for (std::size_t i = 0; i < spec.summands.size(); ++i) {
    const auto& s = spec.summands[i];
    const auto& c = x.components[i];
    if (c.rows() != s.dim() || c.cols() != s.dim()) return false;
    if (s.kind == SummandKind::Quaternion &&
        !quaternion_pattern_ok(c, tol.atol)) {
      return false;
    }
  }
  return true;
}

AlgebraElement identity_element(const AlgebraSpec& spec) {
  AlgebraElement x;
  for (const auto& s : spec.summands) {
    x.components.push_back(ComplexMatrix::Identity(s.dim(), s.dim()));
  }
  return x;
}

AlgebraElement zero_element(const AlgebraSpec& spec) {
  AlgebraElement x;
  for (const auto& s : spec.summands) {
    x.components.push_back(ComplexMatrix::Zero(s.dim(), s.dim()));
  }
  return x;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.components.size() != b.components.size()) {
    throw SpecMismatch("multiply: component counts differ");
  }
  AlgebraElement out;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    out.components.push_back(a.components[i] * b.components[i]);
  }
  return out;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.components.size() != b.components.size()) {
    throw SpecMismatch("add: component counts differ");
  }
  AlgebraElement out;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    out.components.push_back(a.components[i] + b.components[i]);
  }
  return out;
}

AlgebraElement scale(double s, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& c : a.components) out.components.push_back(s * c);
  return out;
}

AlgebraElement star(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& c : a.components) {
    out.components.push_back(c.adjoint().eval());
  }
  return out;
}

Eigen::Index Representation::total_dim() const {
  Eigen::Index d = 0;
  for (const auto& b : blocks) {
    d += static_cast<Eigen::Index>(b.multiplicity) *
         algebra.summands[static_cast<std::size_t>(b.summand_index)].dim();
  }
  return d;
}

Representation make_representation(AlgebraSpec algebra,
                                   std::vector<RepBlock> blocks) {
  if (blocks.empty()) {
    throw SpecMismatch("make_representation: at least one block required");
  }
  for (const auto& b : blocks) {
    if (b.summand_index < 0 ||
        b.summand_index >= static_cast<int>(algebra.summands.size())) {
      throw SpecMismatch("make_representation: summand index out of range");
    }
    if (b.multiplicity < 1) {
      throw SpecMismatch("make_representation: multiplicity must be >= 1");
    }
  }
  return Representation{std::move(algebra), std::move(blocks)};
}

ComplexMatrix represent(const Representation& rep, const AlgebraElement& x) {
  if (!element_matches(rep.algebra, x)) {
    throw SpecMismatch("represent: element does not match the algebra");
  }
  std::vector<ComplexMatrix> parts;
  parts.reserve(rep.blocks.size());
  for (const auto& b : rep.blocks) {
    const ComplexMatrix& c =
        x.components[static_cast<std::size_t>(b.summand_index)];
    ComplexMatrix piece = b.conjugated ? c.conjugate().eval() : c;
    parts.push_back(
        kron(ComplexMatrix::Identity(b.multiplicity, b.multiplicity), piece));
  }
  return direct_sum(parts);
}

std::vector<AlgebraElement> algebra_basis(const AlgebraSpec& spec) {
  std::vector<AlgebraElement> basis;
  for (std::size_t s = 0; s < spec.summands.size(); ++s) {
    const auto& summand = spec.summands[s];
    auto push = [&](const ComplexMatrix& m) {
      AlgebraElement e = zero_element(spec);
      e.components[s] = m;
      basis.push_back(std::move(e));
    };
    switch (summand.kind) {
      case SummandKind::Complex: {
        ComplexMatrix one(1, 1), im(1, 1);
        one << Complex(1, 0);
        im << Complex(0, 1);
        push(one);
        push(im);
        break;
      }
      case SummandKind::Quaternion: {
        push(quaternion_matrix(Complex(1, 0), Complex(0, 0)));
        push(quaternion_matrix(Complex(0, 1), Complex(0, 0)));
        push(quaternion_matrix(Complex(0, 0), Complex(1, 0)));
        push(quaternion_matrix(Complex(0, 0), Complex(0, 1)));
        break;
      }
      case SummandKind::FullMatrix: {
        const int n = summand.n;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(n, n);
            e(i, j) = Complex(1, 0);
            push(e);
            e(i, j) = Complex(0, 1);
            push(e);
          }
        }
        break;
      }
    }
  }
  return basis;
}

bool check_faithful(const Representation& rep, Tolerance) {
  const auto basis = algebra_basis(rep.algebra);
  const Eigen::Index n = rep.total_dim();
  // Real rank of the real-linear map x -> represent(x), evaluated on the
  // real basis: stack re/im of vec(represent(e)) as columns.
  RealMatrix stacked(2 * n * n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const ComplexVector v = vec(represent(rep, basis[k]));
    stacked.col(static_cast<Eigen::Index>(k)).head(n * n) = v.real();
    stacked.col(static_cast<Eigen::Index>(k)).tail(n * n) = v.imag();
  }
  return numerical_rank(stacked) == static_cast<Eigen::Index>(basis.size());
}

AlgebraElement random_element(const AlgebraSpec& spec, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto draw = [&] { return Complex(dist(gen), dist(gen)); };
  AlgebraElement x;
  for (const auto& s : spec.summands) {
    switch (s.kind) {
      case SummandKind::Complex: {
        ComplexMatrix c(1, 1);
        c << draw();
        x.components.push_back(c);
        break;
      }
      case SummandKind::Quaternion:
        x.components.push_back(quaternion_matrix(draw(), draw()));
        break;
      case SummandKind::FullMatrix: {
        ComplexMatrix m(s.n, s.n);
        for (int i = 0; i < s.n; ++i) {
          for (int j = 0; j < s.n; ++j) m(i, j) = draw();
        }
        x.components.push_back(m);
        break;
      }
    }
  }
  return x;
}

}  // namespace mintwist
