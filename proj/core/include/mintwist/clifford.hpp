#pragma once

#include <array>
#include <map>
#include <string>

#include "mintwist/numerics.hpp"

namespace mintwist {

/// Euclidean Dirac matrices on C^4 in the chiral basis,
///   gamma^mu = [[0, sigma^mu], [sigmat^mu, 0]]
/// with sigma^mu = {I, -i sigma_j} and sigmat^mu = {I, +i sigma_j}, together
/// with the chirality operator diag(I2, -I2) and the Pauli matrices. All
/// entries are exact values in {0, ±1, ±i}.
struct GammaSet {
  std::array<ComplexMatrix, 4> gammas;
  ComplexMatrix chirality;
  std::array<ComplexMatrix, 3> pauli;
};

GammaSet build_gammas();

/// Phase relating the ordered product to the chirality operator:
/// chirality = chirality_product_phase() * g0 g1 g2 g3. Computed once from
/// the fixed basis and pinned as a regression constant.
Complex chirality_product_phase();

/// gammaL^0 = gamma^0, gammaL^j = i gamma^j; these square to -I for j >= 1
/// and satisfy the signature (+,-,-,-) anticommutation table.
std::array<ComplexMatrix, 4> lorentzian_gammas(const GammaSet& gs);

/// The indefinite-fiber operator i^(k(k+1)/2) gL^1 ... gL^k on C^4.
/// Only n = 4 is implemented; k must lie in [0, n]. For k = 3 this is the
/// Hermitian involution i * [[0, I2], [-I2, 0]].
ComplexMatrix krein_operator(int n, int k);

/// Unitary W with W gamma^0 W† = krein_operator(4, 3), derived from the
/// basis-change matrix (1/sqrt 2) [[I2, I2], [-i I2, i I2]].
ComplexMatrix krein_gamma0_witness();

/// Constant-coefficient form on flat R^4. Coefficients are stored on
/// strictly increasing multi-indices only, encoded as 4-bit masks (bit mu set
/// when dx^mu is a factor); antisymmetry is structural.
struct ConstantForm {
  int degree = 0;
  std::map<unsigned, Complex> coefficients;  // popcount(key) == degree
};

ConstantForm zero_form(int degree);
ConstantForm scalar_form(Complex value);
ConstantForm one_form(const std::array<double, 4>& f);
ConstantForm monomial_form(std::initializer_list<int> indices,
                           Complex coeff = Complex(1, 0));
ConstantForm add(const ConstantForm& a, const ConstantForm& b);
ConstantForm scale(Complex s, const ConstantForm& a);
bool form_approx_equal(const ConstantForm& a, const ConstantForm& b,
                       Tolerance tol = {});
double form_max_norm(const ConstantForm& a);

/// JSON wire format: {"degree": k, "coefficients": {"013": [re, im], ...}}
/// with the empty string keying the degree-0 coefficient.
std::string form_to_json(const ConstantForm& w);
ConstantForm form_from_json(const std::string& text);

/// Clifford action: increasing-index monomials map to the plain gamma
/// products, c(dx^{m1} ^ ... ^ dx^{mk}) = g^{m1} ... g^{mk}, extended
/// linearly; a 0-form acts as scalar * I.
ComplexMatrix clifford_action(const GammaSet& gs, const ConstantForm& w);

/// Hodge star for the orientation dx^0 ^ dx^1 ^ dx^2 ^ dx^3 = +vol.
/// Satisfies star(star(w)) = (-1)^(k(4-k)) w.
ConstantForm hodge_star(const ConstantForm& w);

struct TorsionFluctuation {
  ComplexMatrix matrix;  // -i f_mu gamma^mu chirality, Hermitian for real f
  ConstantForm torsion;  // -star(f_mu dx^mu)
};

TorsionFluctuation torsion_fluctuation(const GammaSet& gs,
                                       const std::array<double, 4>& f);

/// Proportionality constant in the identity
///   -i f_mu gamma^mu chirality = torsion_identity_constant() * c(star(f dx))
/// under this module's conventions. Pinned by computation, verified in tests
/// on all coordinate directions.
Complex torsion_identity_constant();

/// Max-norm residual of the identity above for the given coefficients.
double clifford_identity_residual(const GammaSet& gs,
                                  const std::array<double, 4>& f);

}  // namespace mintwist
