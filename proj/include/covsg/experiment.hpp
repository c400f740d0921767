// Orchestrates the covariant Stern-Gerlach run for either spin model:
// computes both frames' Hamiltonians, evaluates the consistency condition
// (vanishing transverse lab spin expectation) and the covariance condition
// (the lab initial state is an eigenstate of the rest-frame Hamiltonian),
// and renders the paradox verdict.
#pragma once

#include <string>
#include <vector>

#include "covsg/dirac.hpp"

namespace covsg {

enum class SpinModel { relativistic, dirac };
enum class Detector { upper, lower };

std::string to_string(SpinModel m);
std::string to_string(Detector d);

struct ExperimentConfig {
    double beta_magnitude = 0.0;
    double phi = 0.0;  // radians
    double B_magnitude = 1.0;
    double alpha = 1.0;
    SpinModel model = SpinModel::dirac;
    int energy_sign = +1;
    double tolerance = 1e-8;

    FieldConfig field_config() const { return FieldConfig{B_magnitude, phi, beta_magnitude}; }
    Vec3 beta_vector() const { return field_config().beta_vector(); }
    void validate() const;
};

struct ExperimentReport {
    SpinModel model = SpinModel::dirac;
    int energy_sign = +1;
    double beta = 0.0;
    double phi = 0.0;
    double B = 1.0;
    double alpha = 1.0;
    double tolerance = 1e-8;

    double gamma = 1.0;
    Vec3 rest_E = Vec3::Zero();
    Vec3 rest_B = Vec3::Zero();
    double theta = 0.0;
    double xi_consistency = 0.0;
    double angular_gap = 0.0;

    Eigen::MatrixXcd hamiltonian_lab;
    Eigen::MatrixXcd hamiltonian_rest;
    Eigen::VectorXcd initial_state;

    Detector detector = Detector::upper;
    double sx_lab_expectation = 0.0;
    double sz_lab_expectation = 0.0;
    Vec3 rest_expectations = Vec3::Zero();  // rest-frame spin expectations (x,y,z)

    double lab_eigenvalue = 0.0;        // Rayleigh quotient of H_lab on the initial state
    double lab_eigen_residual = 0.0;
    double rest_eigen_residual = 0.0;   // covariance diagnostic
    double lab_hamiltonian_expectation = 0.0;  // norm-2 convention

    bool consistency_ok = false;
    bool covariance_ok = false;
    bool paradox = false;
    std::vector<std::string> notes;
};

struct ParadoxReport {
    double theta = 0.0;
    double xi_consistency = 0.0;
    double angular_gap = 0.0;  // |theta - xi| reduced mod pi, radians
    bool paradox = false;
};

// Lab-frame quantum SG Hamiltonian -(alpha/gamma) S^y B with the Dirac spin
// operator. Requires model == dirac.
Mat4c quantum_sg_lab(const ExperimentConfig& cfg);

// Rest-frame quantum SG Hamiltonian -alpha S~ . B_rest + i alpha gamma5 S~ . E_rest.
// Equals gamma * quantum_sg_lab entrywise.
Mat4c quantum_sg_rest(const ExperimentConfig& cfg);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Gap between the rest-field azimuth and the consistency azimuth; spin axes
// are rays, so the gap is reduced mod pi. Requires model == relativistic.
ParadoxReport paradox_check(const ExperimentConfig& cfg);

// Covariant expectations of the rest-frame Dirac spin components in the
// boosted +y spinor; equals ((1-gamma) cos(phi) sin(phi),
// sin^2(phi)+gamma cos^2(phi), 0) for the positive-energy state.
Vec3 rest_frame_dirac_expectations(const ExperimentConfig& cfg);

struct ElectricDipoleExpectation {
    double value = 0.0;            // matrix-route covariant expectation
    double reference_value = 0.0;  // closed form (gamma^2 - 1) cos^2(phi) B
    double ratio = 0.0;            // value / reference (0 when reference ~ 0)
};

// Expectation of the rest-frame electric-dipole interaction
// i alpha gamma5 S~^z E_rest^z in the boosted +y spinor. The matrix value is
// alpha * (gamma^2 - 1) cos^2(phi) B; the reference omits alpha.
ElectricDipoleExpectation electric_dipole_expectation(const ExperimentConfig& cfg);

// |a - b| reduced mod pi into [0, pi/2].
double ray_angle_gap(double a, double b);

}  // namespace covsg
