// The classical dipole tensor, the relativistic spin operator built from it,
// and the classical Stern-Gerlach Hamiltonians in the laboratory and particle
// rest frames, including the azimuth angles theta (rest-field direction) and
// xi (required by the vanishing transverse lab expectation).
//
// Expectation values on this two-spinor side are reported with the state norm
// scaled to 2, matching the covariant normalization used for Dirac spinors,
// so numbers are directly comparable across the two spin models.
#pragma once

#include <utility>

#include "covsg/fields.hpp"
#include "covsg/tensor.hpp"

namespace covsg {

using OperatorTriple2 = std::array<Mat2c, 3>;

const Mat2c& pauli(int i);  // i in {0,1,2} -> sigma^{x,y,z}

// Rest-frame spin operator sigma/2.
OperatorTriple2 rest_spin_ops();

// Antisymmetric covariant dipole tensor with scalar electric dipole d and
// magnetic dipole mu: D_{0i} = gamma d^i, spatial block gamma eps_{jkl} mu^l.
struct DipoleTensor {
    Rank2Tensor tensor{Mat4c::Zero(), Variance::covariant};
    double gamma = 1.0;
};

// Same layout with operator-valued (2x2) entries; scalar dipoles are the
// special case of multiples of the identity.
struct SpinDipoleTensor {
    TensorOf<Mat2c> tensor = TensorOf<Mat2c>::zero();
    double gamma = 1.0;
};

DipoleTensor dipole_tensor(const Vec3& d, const Vec3& mu, double gamma);
std::pair<Vec3, Vec3> extract_dipoles(const DipoleTensor& D, double tol = 1e-9);

SpinDipoleTensor operator_dipole_tensor(const OperatorTriple2& d, const OperatorTriple2& mu,
                                        double gamma);
std::pair<OperatorTriple2, OperatorTriple2> extract_operator_dipoles(const SpinDipoleTensor& D);

// Carries a rest-frame dipole tensor (gamma == 1) to the frame where the
// particle moves with velocity beta. Covariant components ride the boost
// matrix itself (the inverse-transformation convention; the same one that
// maps the lab field tensor to the rest frame keeps the scalar contraction
// F^{ak} D_{ak} frame-invariant).
DipoleTensor boost_dipole_tensor(const DipoleTensor& rest, const Vec3& beta);
SpinDipoleTensor boost_spin_dipole_tensor(const SpinDipoleTensor& rest, const Vec3& beta);

// Closed-form dipole transforms, rest -> moving frame:
//   d  = d~ + (mu~ x beta) - gamma beta (beta . d~) / (gamma+1)
//   mu = mu~ + (beta x d~) - gamma beta (beta . mu~) / (gamma+1)
// Agrees with the tensor route above.
std::pair<Vec3, Vec3> transform_dipoles(const Vec3& d_rest, const Vec3& mu_rest,
                                        const Vec3& beta);

// Relativistic spin tensor S_{mu nu} = D_{mu nu} / alpha with rest content
// mu~ = alpha sigma/2 and d~ = 0, boosted to velocity beta.
SpinDipoleTensor relativistic_spin_tensor(const Vec3& beta, double alpha);

// Closed form S = gamma S~ - gamma^2 beta (beta . S~) / (gamma+1), S~ = sigma/2.
OperatorTriple2 relativistic_spin_vector(const Vec3& beta);

// Max over (i,j) of the sup-norm of [S^i, S^j] - i eps^{ijk} S^k.
template <typename Mat>
double spin_algebra_residual(const std::array<Mat, 3>& S) {
    if (S[0].rows() != S[1].rows() || S[1].rows() != S[2].rows() ||
        S[0].rows() != S[0].cols())
        throw DimensionMismatchError("spin triple components must be square and same-sized");
    const cplx i_unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Mat comm = S[i] * S[j] - S[j] * S[i];
            if (i != j) {
                const double eps = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
                comm -= i_unit * eps * S[3 - i - j];
            }
            worst = std::max(worst, max_abs(comm));
        }
    return worst;
}

// Lab Hamiltonian -(alpha/gamma) S^y B and its rest-frame counterpart
// -alpha (S~ . B_rest); both 2x2. gamma * classical_sg_lab == classical_sg_rest
// entrywise (frame invariance of the scalar contraction).
Mat2c classical_sg_lab(const FieldConfig& cfg, double alpha);
Mat2c classical_sg_rest(const FieldConfig& cfg, double alpha);

// Azimuth of the rest-frame magnetic field in the x-y plane, quadrant aware.
double theta_angle(double phi, double gamma);

// Azimuth required by a vanishing transverse spin expectation in the lab.
double xi_consistency_angle(double phi, double gamma);

struct PlanarState {
    Vec2c amplitudes = Vec2c::Zero();
    double theta = 0.0;
};

// Up/down eigenstates of S~^theta = S~^x cos(theta) + S~^y sin(theta), with
// eigenvalues +1/2 and -1/2.
std::pair<PlanarState, PlanarState> planar_eigenstates(double theta);

// Norm-2 expectation 2 <u|op|u> for a unit two-spinor.
double expectation_norm2(const Mat2c& op, const Vec2c& u);

// <S^x> in the up eigenstate of the rest-field direction, computed by matrix
// algebra; equals (1-gamma^2) sin(phi)cos(phi) / sqrt(sin^2(phi)+gamma^2 cos^2(phi)).
double lab_sx_expectation(double phi, double gamma);
double lab_sx_closed_form(double phi, double gamma);

}  // namespace covsg
