// Gamma-matrix algebra in the standard representation, the spinor boost,
// Dirac spinors with covariant normalization psi^dag gamma^0 psi = 2 (times
// the energy sign), and the Dirac spin tensor/vector and dipole operators.
//
// The rest-frame spin tensor is the standard boost generator
// (i/4)[gamma_a, gamma_k]; its axial extraction gives the rest spin
// (1/2) diag(sigma, sigma). Boosting its covariant components with the boost
// matrix itself is identical to conjugating each entry by the spinor boost,
// and both reproduce the closed-form three-vector operator
//   S = gamma S~ - gamma^2 beta (beta . S~)/(gamma+1) + i gamma gamma5 (S~ x beta).
#pragma once

#include <utility>

#include "covsg/classical_spin.hpp"
#include "covsg/tensor.hpp"

namespace covsg {

using OperatorTriple4 = std::array<Mat4c, 3>;

struct GammaSet {
    std::array<Mat4c, 4> gamma;  // gamma^0 .. gamma^3 (upper index)
    Mat4c gamma5;                // i gamma^0 gamma^1 gamma^2 gamma^3

    // gamma with the index lowered: gamma_0 = gamma^0, gamma_i = -gamma^i.
    Mat4c lower(int mu) const { return mu == 0 ? gamma[0] : Mat4c(-gamma[mu]); }
};

const GammaSet& gamma_matrices();

// Rest-frame Dirac spin (1/2) diag(sigma, sigma).
OperatorTriple4 dirac_rest_spin_ops();

struct SpinorBoost {
    Mat4c matrix = Mat4c::Identity();
    Vec3 beta = Vec3::Zero();

    // Analytic inverse: cosh(xi/2) I - sinh(xi/2) gamma^0 (gamma . beta_hat).
    SpinorBoost inverse() const;
};

// cosh(xi/2) I + sinh(xi/2) block-off-diagonal(sigma . beta_hat); Hermitian,
// and D gamma^0 D = gamma^0.
SpinorBoost spinor_boost(const Vec3& beta);

struct DiracSpinor {
    Vec4c components = Vec4c::Zero();
    int energy_sign = +1;  // +1 positive-energy, -1 negative-energy
    FourVector momentum{1.0, 0.0, 0.0, 0.0};

    double mass() const;
    // psi^dag gamma^0 psi (real part; imaginary part is zero by construction).
    double covariant_norm() const;
};

enum class SpinSide { up, down };

// Rest-frame spinor whose Pauli part is the (sigma . direction) eigenvector,
// scaled so the covariant norm is 2 * energy_sign. The global phase is fixed
// by making the first non-negligible component real positive.
DiracSpinor rest_spinor(const Vec3& direction, SpinSide side, int energy_sign,
                        double mass = 1.0);

// psi = D(L) psi_rest with the momentum carried to L p~. Requires a spinor at
// rest. Preserves the covariant norm and the Dirac-equation residual.
DiracSpinor boost_spinor(const DiracSpinor& psi_rest, const Vec3& beta);

// ||(p^mu gamma_mu - energy_sign * m) psi||_2
double dirac_residual(const DiracSpinor& psi);

// Closed-form Dirac spin three-vector operator in the moving frame.
OperatorTriple4 dirac_spin_vector(const Vec3& beta);

// Same operator by conjugation, D(L) S~^i D(L)^{-1}.
OperatorTriple4 dirac_spin_vector_conjugated(const Vec3& beta);

// Full antisymmetric spin tensor, boosted covariant components of
// (i/4)[gamma_a, gamma_k]; extract_axial_vector reproduces the closed form.
TensorOf<Mat4c> dirac_spin_tensor(const Vec3& beta);

// Electric and magnetic dipole operators of the Dirac spin,
//   d  = alpha (S~ x beta) - i alpha gamma5 [S~ - gamma beta (beta . S~)/(gamma+1)]
//   mu = alpha [S~ - gamma beta (beta . S~)/(gamma+1)] + i alpha gamma5 (S~ x beta)
// At beta = 0 the magnetic dipole is alpha S~ and the electric dipole is the
// purely gamma5-proportional -i alpha gamma5 S~.
std::pair<OperatorTriple4, OperatorTriple4> dirac_dipole_operators(const Vec3& beta,
                                                                   double alpha);

struct CovariantExpectation {
    cplx value{0.0, 0.0};
    bool real_guaranteed = false;  // gamma^0 * op is Hermitian
};

// energy_sign * psi^dag gamma^0 op psi. Real whenever gamma^0 op is Hermitian.
CovariantExpectation covariant_expectation(const Mat4c& op, const DiracSpinor& psi);

}  // namespace covsg
