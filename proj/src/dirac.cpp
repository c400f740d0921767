#include "covsg/dirac.hpp"

namespace covsg {

namespace {

const cplx kI(0.0, 1.0);

Mat4c block_diag(const Mat2c& a, const Mat2c& b) {
    Mat4c m = Mat4c::Zero();
    m.topLeftCorner<2, 2>() = a;
    m.bottomRightCorner<2, 2>() = b;
    return m;
}

Mat4c block_off_diag(const Mat2c& upper, const Mat2c& lower) {
    Mat4c m = Mat4c::Zero();
    m.topRightCorner<2, 2>() = upper;
    m.bottomLeftCorner<2, 2>() = lower;
    return m;
}

// sigma . n
Mat2c sigma_dot(const Vec3& n) {
    Mat2c m = Mat2c::Zero();
    for (int i = 0; i < 3; ++i) m += n[i] * pauli(i);
    return m;
}

// Pauli eigenvector of sigma . direction with eigenvalue +1 (up) or -1
// (down), phase fixed so the first non-negligible component is real positive.
Vec2c pauli_eigenvector(const Vec3& direction, SpinSide side) {
    const Vec3 n = direction.normalized();
    const double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
    const double phi = std::atan2(n[1], n[0]);
    Vec2c v;
    if (side == SpinSide::up)
        v = Vec2c(std::cos(theta / 2.0), std::sin(theta / 2.0) * std::exp(kI * phi));
    else
        v = Vec2c(std::sin(theta / 2.0), -std::cos(theta / 2.0) * std::exp(kI * phi));
    for (int i = 0; i < 2; ++i) {
        if (std::abs(v[i]) > 1e-12) {
            v *= std::conj(v[i]) / std::abs(v[i]);
            break;
        }
    }
    return v;
}

}  // namespace

const GammaSet& gamma_matrices() {
    static const GammaSet set = [] {
        GammaSet g;
        const Mat2c I2 = Mat2c::Identity();
        g.gamma[0] = block_diag(I2, -I2);
        for (int i = 0; i < 3; ++i)
            g.gamma[i + 1] = block_off_diag(pauli(i), -pauli(i));
        g.gamma5 = kI * g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
        return g;
    }();
    return set;
}

OperatorTriple4 dirac_rest_spin_ops() {
    OperatorTriple4 S;
    for (int i = 0; i < 3; ++i) S[i] = 0.5 * block_diag(pauli(i), pauli(i));
    return S;
}

SpinorBoost spinor_boost(const Vec3& beta) {
    const double gamma = lorentz_factor(beta);
    const double ch = std::sqrt((gamma + 1.0) / 2.0);  // cosh(xi/2)
    const double sh = std::sqrt((gamma - 1.0) / 2.0);  // sinh(xi/2)
    Mat4c D = ch * Mat4c::Identity();
    if (beta.norm() > 0.0) {
        const Mat2c sp = sigma_dot(beta.normalized());
        D += sh * block_off_diag(sp, sp);
    }
    return SpinorBoost{D, beta};
}

SpinorBoost SpinorBoost::inverse() const {
    const GammaSet& g = gamma_matrices();
    return SpinorBoost{g.gamma[0] * matrix * g.gamma[0], -beta};
}

double DiracSpinor::mass() const {
    return std::sqrt(std::max(0.0, minkowski_inner(momentum, momentum)));
}

double DiracSpinor::covariant_norm() const {
    return (components.adjoint() * gamma_matrices().gamma[0] * components)(0, 0).real();
}

DiracSpinor rest_spinor(const Vec3& direction, SpinSide side, int energy_sign, double mass) {
    if (energy_sign != 1 && energy_sign != -1)
        throw std::invalid_argument("energy_sign must be +1 or -1");
    const Vec2c chi = std::sqrt(2.0) * pauli_eigenvector(direction, side);
    DiracSpinor psi;
    psi.energy_sign = energy_sign;
    psi.momentum = FourVector(mass, 0.0, 0.0, 0.0);
    if (energy_sign > 0)
        psi.components << chi[0], chi[1], 0.0, 0.0;
    else
        psi.components << 0.0, 0.0, chi[0], chi[1];
    return psi;
}

DiracSpinor boost_spinor(const DiracSpinor& psi_rest, const Vec3& beta) {
    if (psi_rest.momentum.spatial().norm() > 1e-9)
        throw std::invalid_argument("boost_spinor expects a rest-frame spinor");
    DiracSpinor psi;
    psi.energy_sign = psi_rest.energy_sign;
    psi.components = spinor_boost(beta).matrix * psi_rest.components;
    psi.momentum = pure_boost(beta).apply(psi_rest.momentum);
    return psi;
}

double dirac_residual(const DiracSpinor& psi) {
    const GammaSet& g = gamma_matrices();
    Mat4c slash = Mat4c::Zero();
    for (int mu = 0; mu < 4; ++mu) slash += psi.momentum[mu] * g.lower(mu);
    const Vec4c r = (slash - double(psi.energy_sign) * psi.mass() * Mat4c::Identity()) *
                    psi.components;
    return r.norm();
}

OperatorTriple4 dirac_spin_vector(const Vec3& beta) {
    const double gamma = lorentz_factor(beta);
    const GammaSet& g = gamma_matrices();
    const OperatorTriple4 rest = dirac_rest_spin_ops();
    Mat4c beta_dot_S = Mat4c::Zero();
    for (int i = 0; i < 3; ++i) beta_dot_S += beta[i] * rest[i];
    OperatorTriple4 out;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const Mat4c cross = rest[j] * beta[k] - rest[k] * beta[j];  // (S~ x beta)^i
        out[i] = gamma * rest[i] - gamma * gamma / (gamma + 1.0) * beta[i] * beta_dot_S +
                 kI * gamma * g.gamma5 * cross;
    }
    return out;
}

OperatorTriple4 dirac_spin_vector_conjugated(const Vec3& beta) {
    const SpinorBoost D = spinor_boost(beta);
    const Mat4c Dinv = D.inverse().matrix;
    const OperatorTriple4 rest = dirac_rest_spin_ops();
    OperatorTriple4 out;
    for (int i = 0; i < 3; ++i) out[i] = D.matrix * rest[i] * Dinv;
    return out;
}

TensorOf<Mat4c> dirac_spin_tensor(const Vec3& beta) {
    const GammaSet& g = gamma_matrices();
    TensorOf<Mat4c> rest = TensorOf<Mat4c>::zero();
    for (int a = 0; a < 4; ++a)
        for (int k = 0; k < 4; ++k)
            rest.at[a][k] =
                kI / 4.0 * (g.lower(a) * g.lower(k) - g.lower(k) * g.lower(a));
    return congruence(pure_boost(beta).matrix, rest);
}

std::pair<OperatorTriple4, OperatorTriple4> dirac_dipole_operators(const Vec3& beta,
                                                                   double alpha) {
    if (alpha == 0.0) throw InvalidRatioError("gyromagnetic ratio must be nonzero");
    const double gamma = lorentz_factor(beta);
    const GammaSet& g = gamma_matrices();
    const OperatorTriple4 rest = dirac_rest_spin_ops();
    Mat4c beta_dot_S = Mat4c::Zero();
    for (int i = 0; i < 3; ++i) beta_dot_S += beta[i] * rest[i];
    OperatorTriple4 d, mu;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const Mat4c cross = rest[j] * beta[k] - rest[k] * beta[j];
        const Mat4c projected = rest[i] - gamma / (gamma + 1.0) * beta[i] * beta_dot_S;
        d[i] = alpha * cross - kI * alpha * g.gamma5 * projected;
        mu[i] = alpha * projected + kI * alpha * g.gamma5 * cross;
    }
    return {d, mu};
}

CovariantExpectation covariant_expectation(const Mat4c& op, const DiracSpinor& psi) {
    const Mat4c pairing = gamma_matrices().gamma[0] * op;
    CovariantExpectation out;
    out.value = double(psi.energy_sign) *
                (psi.components.adjoint() * pairing * psi.components)(0, 0);
    out.real_guaranteed = max_abs(Mat4c(pairing - pairing.adjoint())) < 1e-12;
    return out;
}

}  // namespace covsg
