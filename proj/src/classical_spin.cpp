#include "covsg/classical_spin.hpp"

namespace covsg {

namespace {

const cplx kI(0.0, 1.0);

void require_gamma(double gamma) {
    if (gamma < 1.0)
        throw InvalidFactorError("Lorentz factor must be >= 1, got " + std::to_string(gamma));
}

// Spatial cross-product matrix entries eps_{jkl} v^l used by the dipole layout.
template <typename Entry>
void fill_dipole_layout(TensorOf<Entry>& T, const std::array<Entry, 3>& d,
                        const std::array<Entry, 3>& mu, double gamma) {
    for (int i = 0; i < 3; ++i) {
        T.at[0][i + 1] = gamma * d[i];
        T.at[i + 1][0] = -gamma * d[i];
    }
    T.at[1][2] = gamma * mu[2];
    T.at[2][1] = -gamma * mu[2];
    T.at[1][3] = -gamma * mu[1];
    T.at[3][1] = gamma * mu[1];
    T.at[2][3] = gamma * mu[0];
    T.at[3][2] = -gamma * mu[0];
}

}  // namespace

const Mat2c& pauli(int i) {
    static const std::array<Mat2c, 3> sigma = {
        (Mat2c() << 0, 1, 1, 0).finished(),
        (Mat2c() << 0, -kI, kI, 0).finished(),
        (Mat2c() << 1, 0, 0, -1).finished()};
    return sigma.at(static_cast<std::size_t>(i));
}

OperatorTriple2 rest_spin_ops() {
    return {0.5 * pauli(0), 0.5 * pauli(1), 0.5 * pauli(2)};
}

DipoleTensor dipole_tensor(const Vec3& d, const Vec3& mu, double gamma) {
    require_gamma(gamma);
    Mat4c m = Mat4c::Zero();
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = gamma * d[i];
        m(i + 1, 0) = -gamma * d[i];
    }
    m(1, 2) = gamma * mu[2];
    m(2, 1) = -gamma * mu[2];
    m(1, 3) = -gamma * mu[1];
    m(3, 1) = gamma * mu[1];
    m(2, 3) = gamma * mu[0];
    m(3, 2) = -gamma * mu[0];
    return DipoleTensor{Rank2Tensor{m, Variance::covariant}, gamma};
}

std::pair<Vec3, Vec3> extract_dipoles(const DipoleTensor& D, double tol) {
    if (D.tensor.antisymmetry_defect() > tol)
        throw MalformedTensorError("dipole tensor is not antisymmetric");
    const Mat4c& m = D.tensor.matrix;
    const double g = D.gamma;
    Vec3 d, mu;
    for (int i = 0; i < 3; ++i) d[i] = m(0, i + 1).real() / g;
    mu[0] = 0.5 * (m(2, 3) - m(3, 2)).real() / g;
    mu[1] = 0.5 * (m(3, 1) - m(1, 3)).real() / g;
    mu[2] = 0.5 * (m(1, 2) - m(2, 1)).real() / g;
    return {d, mu};
}

SpinDipoleTensor operator_dipole_tensor(const OperatorTriple2& d, const OperatorTriple2& mu,
                                        double gamma) {
    require_gamma(gamma);
    SpinDipoleTensor D;
    D.gamma = gamma;
    D.tensor = TensorOf<Mat2c>::zero();
    fill_dipole_layout(D.tensor, d, mu, gamma);
    return D;
}

std::pair<OperatorTriple2, OperatorTriple2> extract_operator_dipoles(const SpinDipoleTensor& D) {
    OperatorTriple2 d, mu;
    const auto& T = D.tensor.at;
    const double g = D.gamma;
    for (int i = 0; i < 3; ++i) d[i] = T[0][i + 1] / g;
    const auto axial = extract_axial_vector(D.tensor);
    for (int i = 0; i < 3; ++i) mu[i] = axial[i] / g;
    return {d, mu};
}

DipoleTensor boost_dipole_tensor(const DipoleTensor& rest, const Vec3& beta) {
    // Covariant components with the inverse flag ride the boost matrix itself.
    const Rank2Tensor moved = transform_rank2(pure_boost(beta), rest.tensor, /*inverse=*/true);
    return DipoleTensor{moved, rest.gamma * lorentz_factor(beta)};
}

SpinDipoleTensor boost_spin_dipole_tensor(const SpinDipoleTensor& rest, const Vec3& beta) {
    SpinDipoleTensor out;
    out.tensor = congruence(pure_boost(beta).matrix, rest.tensor);
    out.gamma = rest.gamma * lorentz_factor(beta);
    return out;
}

std::pair<Vec3, Vec3> transform_dipoles(const Vec3& d_rest, const Vec3& mu_rest,
                                        const Vec3& beta) {
    const double gamma = lorentz_factor(beta);
    const Vec3 d = d_rest + mu_rest.cross(beta) - gamma * beta * beta.dot(d_rest) / (gamma + 1.0);
    const Vec3 mu = mu_rest + beta.cross(d_rest) - gamma * beta * beta.dot(mu_rest) / (gamma + 1.0);
    return {d, mu};
}

SpinDipoleTensor relativistic_spin_tensor(const Vec3& beta, double alpha) {
    if (alpha == 0.0) throw InvalidRatioError("gyromagnetic ratio must be nonzero");
    const OperatorTriple2 S = rest_spin_ops();
    OperatorTriple2 d_rest{Mat2c::Zero(), Mat2c::Zero(), Mat2c::Zero()};
    OperatorTriple2 mu_rest{alpha * S[0], alpha * S[1], alpha * S[2]};
    SpinDipoleTensor D = boost_spin_dipole_tensor(operator_dipole_tensor(d_rest, mu_rest, 1.0), beta);
    for (auto& row : D.tensor.at)
        for (auto& e : row) e /= alpha;
    return D;
}

OperatorTriple2 relativistic_spin_vector(const Vec3& beta) {
    const double gamma = lorentz_factor(beta);
    const OperatorTriple2 rest = rest_spin_ops();
    Mat2c beta_dot_S = Mat2c::Zero();
    for (int i = 0; i < 3; ++i) beta_dot_S += beta[i] * rest[i];
    OperatorTriple2 out;
    for (int i = 0; i < 3; ++i)
        out[i] = gamma * rest[i] - gamma * gamma / (gamma + 1.0) * beta[i] * beta_dot_S;
    return out;
}

Mat2c classical_sg_lab(const FieldConfig& cfg, double alpha) {
    cfg.validate();
    const double gamma = lorentz_factor(cfg.beta_vector());
    const OperatorTriple2 S = relativistic_spin_vector(cfg.beta_vector());
    return -(alpha / gamma) * cfg.B_magnitude * S[1];
}

Mat2c classical_sg_rest(const FieldConfig& cfg, double alpha) {
    const auto [E_rest, B_rest] = rest_frame_fields(cfg);
    const OperatorTriple2 S = rest_spin_ops();
    Mat2c H = Mat2c::Zero();
    for (int i = 0; i < 3; ++i) H -= alpha * B_rest[i] * S[i];
    return H;
}

double theta_angle(double phi, double gamma) {
    require_gamma(gamma);
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return std::atan2(s * s + gamma * c * c, (1.0 - gamma) * s * c);
}

double xi_consistency_angle(double phi, double gamma) {
    require_gamma(gamma);
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return std::atan2(c * c + gamma * s * s, (gamma - 1.0) * c * s);
}

std::pair<PlanarState, PlanarState> planar_eigenstates(double theta) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx lo = std::exp(-kI * theta / 2.0) * inv_sqrt2;
    const cplx hi = std::exp(kI * theta / 2.0) * inv_sqrt2;
    PlanarState up{Vec2c(lo, hi), theta};
    PlanarState down{Vec2c(lo, -hi), theta};
    return {up, down};
}

double expectation_norm2(const Mat2c& op, const Vec2c& u) {
    return 2.0 * (u.adjoint() * op * u)(0, 0).real();
}

double lab_sx_expectation(double phi, double gamma) {
    require_gamma(gamma);
    const double beta = std::sqrt(1.0 - 1.0 / (gamma * gamma));
    const Vec3 beta_vec = beta * Vec3(std::cos(phi), std::sin(phi), 0.0);
    const OperatorTriple2 S = relativistic_spin_vector(beta_vec);
    const auto [up, down] = planar_eigenstates(theta_angle(phi, gamma));
    return expectation_norm2(S[0], up.amplitudes);
}

double lab_sx_closed_form(double phi, double gamma) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return (1.0 - gamma * gamma) * s * c / std::sqrt(s * s + gamma * gamma * c * c);
}

}  // namespace covsg
