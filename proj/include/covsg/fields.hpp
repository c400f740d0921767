// Electromagnetic field tensor: construction from (E, B), extraction, boost
// transformation, Lorentz invariants, and the uniform Stern-Gerlach field
// configuration (lab magnetic field along +y, particle moving in the x-y
// plane at azimuth phi).
#pragma once

#include <utility>

#include "covsg/tensor.hpp"

namespace covsg {

// Antisymmetric contravariant tensor with F^{0i} = -E^i and the magnetic
// components placed so that F^{13} = B^y.
struct FieldTensor {
    Rank2Tensor tensor{Mat4c::Zero(), Variance::contravariant};
};

// Uniform-field experiment geometry: |B| along lab +y, flight azimuth phi
// from the x-axis in the x-y plane, speed beta_magnitude.
struct FieldConfig {
    double B_magnitude = 1.0;
    double phi = 0.0;            // radians
    double beta_magnitude = 0.0;

    Vec3 beta_vector() const {
        return beta_magnitude * Vec3(std::cos(phi), std::sin(phi), 0.0);
    }
    Vec3 lab_B() const { return Vec3(0.0, B_magnitude, 0.0); }

    void validate() const;
};

FieldTensor field_tensor_from_EB(const Vec3& E, const Vec3& B);

// Inverse of the layout above. Throws MalformedTensorError when the input is
// not antisymmetric.
std::pair<Vec3, Vec3> extract_EB(const FieldTensor& F, double tol = 1e-9);

// Congruence transform of the field tensor. The project convention (fixed by
// the closed-form rest-frame fields below, which have E_z < 0 for
// 0 < phi < pi/2): applying pure_boost(beta) directly, inverse=false, carries
// lab components to the frame comoving with the particle. inverse=true
// applies L^{-1} and goes the other way.
FieldTensor boost_fields(const FieldTensor& F, const LorentzBoost& L, bool inverse = false);

// Closed-form fields seen in the particle rest frame:
//   E_rest = -gamma v cos(phi) B zhat
//   B_rest = ((1-gamma) sin(phi)cos(phi) B, (sin^2(phi)+gamma cos^2(phi)) B, 0)
// Must agree with boost_fields applied to the lab tensor.
std::pair<Vec3, Vec3> rest_frame_fields(const FieldConfig& cfg);

// The two Lorentz invariants (B^2 - E^2, E . B).
std::pair<double, double> field_invariants(const FieldTensor& F);

}  // namespace covsg
