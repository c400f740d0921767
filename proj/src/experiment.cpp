#include "covsg/experiment.hpp"

#include <sstream>

namespace covsg {

namespace {

const cplx kI(0.0, 1.0);

void require_model(const ExperimentConfig& cfg, SpinModel expected, const char* op) {
    if (cfg.model != expected)
        throw WrongModelError(std::string(op) + " requires model=" + to_string(expected) +
                              ", got " + to_string(cfg.model));
}

// Rayleigh quotient and relative eigen-residual of a (possibly non-Hermitian)
// matrix on a state.
struct EigenProbe {
    cplx rayleigh;
    double residual;
};

EigenProbe eigen_probe(const Eigen::MatrixXcd& H, const Eigen::VectorXcd& v) {
    const double n2 = v.squaredNorm();
    const cplx lambda = (v.adjoint() * H * v)(0, 0) / n2;
    const double res = (H * v - lambda * v).norm() / std::sqrt(n2);
    return {lambda, res};
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

std::string to_string(SpinModel m) {
    return m == SpinModel::relativistic ? "relativistic" : "dirac";
}

std::string to_string(Detector d) { return d == Detector::upper ? "upper" : "lower"; }

void ExperimentConfig::validate() const {
    field_config().validate();
    if (tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (energy_sign != 1 && energy_sign != -1)
        throw std::invalid_argument("energy_sign must be +1 or -1");
}

Mat4c quantum_sg_lab(const ExperimentConfig& cfg) {
    require_model(cfg, SpinModel::dirac, "quantum_sg_lab");
    cfg.validate();
    const double gamma = lorentz_factor(cfg.beta_vector());
    const OperatorTriple4 S = dirac_spin_vector(cfg.beta_vector());
    return -(cfg.alpha / gamma) * cfg.B_magnitude * S[1];
}

Mat4c quantum_sg_rest(const ExperimentConfig& cfg) {
    require_model(cfg, SpinModel::dirac, "quantum_sg_rest");
    cfg.validate();
    const auto [E_rest, B_rest] = rest_frame_fields(cfg.field_config());
    const OperatorTriple4 S = dirac_rest_spin_ops();
    const Mat4c& g5 = gamma_matrices().gamma5;
    Mat4c H = Mat4c::Zero();
    for (int i = 0; i < 3; ++i) {
        H -= cfg.alpha * B_rest[i] * S[i];
        H += kI * cfg.alpha * g5 * S[i] * E_rest[i];
    }
    return H;
}

ParadoxReport paradox_check(const ExperimentConfig& cfg) {
    require_model(cfg, SpinModel::relativistic, "paradox_check");
    cfg.validate();
    const double gamma = lorentz_factor(cfg.beta_vector());
    ParadoxReport r;
    r.theta = theta_angle(cfg.phi, gamma);
    r.xi_consistency = xi_consistency_angle(cfg.phi, gamma);
    r.angular_gap = ray_angle_gap(r.theta, r.xi_consistency);
    r.paradox = r.angular_gap > cfg.tolerance;
    return r;
}

Vec3 rest_frame_dirac_expectations(const ExperimentConfig& cfg) {
    require_model(cfg, SpinModel::dirac, "rest_frame_dirac_expectations");
    cfg.validate();
    const DiracSpinor psi =
        boost_spinor(rest_spinor(Vec3::UnitY(), SpinSide::up, cfg.energy_sign),
                     cfg.beta_vector());
    const OperatorTriple4 S = dirac_rest_spin_ops();
    Vec3 out;
    for (int i = 0; i < 3; ++i) out[i] = covariant_expectation(S[i], psi).value.real();
    return out;
}

ElectricDipoleExpectation electric_dipole_expectation(const ExperimentConfig& cfg) {
    require_model(cfg, SpinModel::dirac, "electric_dipole_expectation");
    cfg.validate();
    const auto [E_rest, B_rest] = rest_frame_fields(cfg.field_config());
    const DiracSpinor psi =
        boost_spinor(rest_spinor(Vec3::UnitY(), SpinSide::up, cfg.energy_sign),
                     cfg.beta_vector());
    const Mat4c op = kI * cfg.alpha * gamma_matrices().gamma5 *
                     dirac_rest_spin_ops()[2] * E_rest[2];
    ElectricDipoleExpectation out;
    out.value = covariant_expectation(op, psi).value.real();
    const double gamma = lorentz_factor(cfg.beta_vector());
    const double c = std::cos(cfg.phi);
    out.reference_value = (gamma * gamma - 1.0) * c * c * cfg.B_magnitude;
    out.ratio = std::abs(out.reference_value) > 1e-12 ? out.value / out.reference_value : 0.0;
    return out;
}

double ray_angle_gap(double a, double b) {
    const double pi = M_PI;
    double r = std::fmod(a - b, pi);
    if (r > pi / 2.0) r -= pi;
    if (r <= -pi / 2.0) r += pi;
    return std::abs(r);
}

namespace {

void run_dirac_branch(const ExperimentConfig& cfg, ExperimentReport& rep) {
    const Vec3 beta = cfg.beta_vector();
    const Mat4c H_lab = quantum_sg_lab(cfg);
    const Mat4c H_rest = quantum_sg_rest(cfg);
    const DiracSpinor psi =
        boost_spinor(rest_spinor(Vec3::UnitY(), SpinSide::up, cfg.energy_sign), beta);
    const OperatorTriple4 S = dirac_spin_vector(beta);

    rep.hamiltonian_lab = H_lab;
    rep.hamiltonian_rest = H_rest;
    rep.initial_state = psi.components;

    rep.sx_lab_expectation = covariant_expectation(S[0], psi).value.real();
    rep.sz_lab_expectation = covariant_expectation(S[2], psi).value.real();
    rep.consistency_ok = std::abs(rep.sx_lab_expectation) < cfg.tolerance &&
                         std::abs(rep.sz_lab_expectation) < cfg.tolerance;

    const EigenProbe lab = eigen_probe(H_lab, psi.components);
    const EigenProbe rest = eigen_probe(H_rest, psi.components);
    rep.lab_eigenvalue = lab.rayleigh.real();
    rep.lab_eigen_residual = lab.residual;
    rep.rest_eigen_residual = rest.residual;
    rep.covariance_ok = rest.residual < cfg.tolerance;

    rep.detector = covariant_expectation(S[1], psi).value.real() > 0.0 ? Detector::upper
                                                                       : Detector::lower;
    rep.rest_expectations = rest_frame_dirac_expectations(cfg);
    rep.lab_hamiltonian_expectation = covariant_expectation(H_lab, psi).value.real();

    rep.notes.push_back("initial state is the boosted +y rest spinor; lab eigenvalue " +
                        fmt(lab.rayleigh.real()) + ", rest eigenvalue " +
                        fmt(rest.rayleigh.real()));
}

void run_relativistic_branch(const ExperimentConfig& cfg, ExperimentReport& rep) {
    const Vec3 beta = cfg.beta_vector();
    const Mat2c H_lab = classical_sg_lab(cfg.field_config(), cfg.alpha);
    const Mat2c H_rest = classical_sg_rest(cfg.field_config(), cfg.alpha);
    const OperatorTriple2 S = relativistic_spin_vector(beta);

    const auto [u_theta, d_theta] = planar_eigenstates(rep.theta);
    const auto [u_xi, d_xi] = planar_eigenstates(rep.xi_consistency);

    rep.hamiltonian_lab = H_lab;
    rep.hamiltonian_rest = H_rest;
    rep.initial_state = u_theta.amplitudes;

    // theta branch: eigenstate of the rest Hamiltonian by construction.
    rep.sx_lab_expectation = expectation_norm2(S[0], u_theta.amplitudes);
    rep.sz_lab_expectation = expectation_norm2(S[2], u_theta.amplitudes);
    rep.consistency_ok = std::abs(rep.sx_lab_expectation) < cfg.tolerance &&
                         std::abs(rep.sz_lab_expectation) < cfg.tolerance;

    const EigenProbe lab = eigen_probe(H_lab, u_theta.amplitudes);
    const EigenProbe rest_theta = eigen_probe(H_rest, u_theta.amplitudes);
    rep.lab_eigenvalue = lab.rayleigh.real();
    rep.lab_eigen_residual = lab.residual;
    rep.rest_eigen_residual = rest_theta.residual;
    rep.covariance_ok = rest_theta.residual < cfg.tolerance;

    rep.detector = expectation_norm2(S[1], u_theta.amplitudes) > 0.0 ? Detector::upper
                                                                     : Detector::lower;
    const OperatorTriple2 rest_ops = rest_spin_ops();
    for (int i = 0; i < 3; ++i)
        rep.rest_expectations[i] = expectation_norm2(rest_ops[i], u_theta.amplitudes);
    rep.lab_hamiltonian_expectation = expectation_norm2(H_lab, u_theta.amplitudes);

    // xi branch: satisfies the lab consistency condition instead.
    const double sx_xi = expectation_norm2(S[0], u_xi.amplitudes);
    const EigenProbe rest_xi = eigen_probe(H_rest, u_xi.amplitudes);
    rep.notes.push_back("theta branch: rest-frame eigenstate (residual " +
                        fmt(rest_theta.residual) + "), lab <Sx> " +
                        fmt(rep.sx_lab_expectation));
    rep.notes.push_back("xi branch: lab <Sx> " + fmt(sx_xi) +
                        ", rest-frame eigen-residual " + fmt(rest_xi.residual));
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentReport rep;
    rep.model = cfg.model;
    rep.energy_sign = cfg.energy_sign;
    rep.beta = cfg.beta_magnitude;
    rep.phi = cfg.phi;
    rep.B = cfg.B_magnitude;
    rep.alpha = cfg.alpha;
    rep.tolerance = cfg.tolerance;

    rep.gamma = lorentz_factor(cfg.beta_vector());
    std::tie(rep.rest_E, rep.rest_B) = rest_frame_fields(cfg.field_config());
    rep.theta = theta_angle(cfg.phi, rep.gamma);
    rep.xi_consistency = xi_consistency_angle(cfg.phi, rep.gamma);
    rep.angular_gap = ray_angle_gap(rep.theta, rep.xi_consistency);

    if (cfg.model == SpinModel::dirac)
        run_dirac_branch(cfg, rep);
    else
        run_relativistic_branch(cfg, rep);

    rep.paradox = !(rep.consistency_ok && rep.covariance_ok);
    return rep;
}

}  // namespace covsg
