#include "covsg/fields.hpp"

namespace covsg {

void FieldConfig::validate() const {
    if (beta_magnitude < 0.0)
        throw std::invalid_argument("beta_magnitude must be non-negative");
    if (beta_magnitude >= 1.0)
        throw SuperluminalError("beta_magnitude must be below 1");
}

FieldTensor field_tensor_from_EB(const Vec3& E, const Vec3& B) {
    Mat4c F = Mat4c::Zero();
    for (int i = 0; i < 3; ++i) {
        F(0, i + 1) = -E[i];
        F(i + 1, 0) = E[i];
    }
    F(1, 2) = -B[2];
    F(2, 1) = B[2];
    F(1, 3) = B[1];
    F(3, 1) = -B[1];
    F(2, 3) = -B[0];
    F(3, 2) = B[0];
    return FieldTensor{Rank2Tensor{F, Variance::contravariant}};
}

std::pair<Vec3, Vec3> extract_EB(const FieldTensor& F, double tol) {
    if (F.tensor.antisymmetry_defect() > tol)
        throw MalformedTensorError("field tensor is not antisymmetric");
    const Mat4c& m = F.tensor.matrix;
    Vec3 E, B;
    for (int i = 0; i < 3; ++i) E[i] = -m(0, i + 1).real();
    B[0] = m(3, 2).real();
    B[1] = m(1, 3).real();
    B[2] = m(2, 1).real();
    return {E, B};
}

FieldTensor boost_fields(const FieldTensor& F, const LorentzBoost& L, bool inverse) {
    return FieldTensor{transform_rank2(L, F.tensor, inverse)};
}

std::pair<Vec3, Vec3> rest_frame_fields(const FieldConfig& cfg) {
    cfg.validate();
    const double gamma = lorentz_factor(cfg.beta_vector());
    const double v = cfg.beta_magnitude;
    const double s = std::sin(cfg.phi);
    const double c = std::cos(cfg.phi);
    const double B = cfg.B_magnitude;
    const Vec3 E_rest(0.0, 0.0, -gamma * v * c * B);
    const Vec3 B_rest((1.0 - gamma) * s * c * B, (s * s + gamma * c * c) * B, 0.0);
    return {E_rest, B_rest};
}

std::pair<double, double> field_invariants(const FieldTensor& F) {
    const auto [E, B] = extract_EB(F);
    return {B.squaredNorm() - E.squaredNorm(), E.dot(B)};
}

}  // namespace covsg
