#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <covsg/experiment.hpp>

#include "support/rng.hpp"

using namespace covsg;

namespace {

ExperimentConfig canonical_dirac() {
    ExperimentConfig cfg;
    cfg.beta_magnitude = std::sqrt(3.0) / 2.0;  // gamma = 2
    cfg.phi = M_PI / 4.0;
    return cfg;
}

const std::vector<double> kGammaGrid = {1.0, 1.25, 2.0, 5.0};
const std::vector<double> kPhiGrid = [] {
    std::vector<double> v;
    for (int i = 0; i <= 6; ++i) v.push_back(i * M_PI / 12.0);
    return v;
}();

double beta_of_gamma(double gamma) { return std::sqrt(1.0 - 1.0 / (gamma * gamma)); }

}  // namespace

TEST_CASE("quantum SG Hamiltonian in the lab") {
    SUBCASE("rest limit") {
        ExperimentConfig cfg;
        cfg.alpha = 1.3;
        cfg.B_magnitude = 2.0;
        const Mat4c H = quantum_sg_lab(cfg);
        const Mat4c expected = -cfg.alpha * cfg.B_magnitude * dirac_rest_spin_ops()[1];
        CHECK(max_abs(Mat4c(H - expected)) < 1e-15);
    }
    SUBCASE("boosted +y spinor is an eigenvector with -alpha B / (2 gamma)") {
        const ExperimentConfig cfg = canonical_dirac();
        const Mat4c H = quantum_sg_lab(cfg);
        const DiracSpinor psi =
            boost_spinor(rest_spinor(Vec3::UnitY(), SpinSide::up, +1), cfg.beta_vector());
        const Vec4c expect = -cfg.alpha * cfg.B_magnitude / 2.0 / 2.0 * psi.components;
        CHECK((H * psi.components - expect).norm() < 1e-12);
    }
    SUBCASE("wrong model throws") {
        ExperimentConfig cfg;
        cfg.model = SpinModel::relativistic;
        CHECK_THROWS_AS(quantum_sg_lab(cfg), WrongModelError);
    }
}

TEST_CASE("quantum SG Hamiltonian in the rest frame") {
    SUBCASE("no electric term for motion parallel to B") {
        ExperimentConfig cfg;
        cfg.beta_magnitude = 0.8;
        cfg.phi = M_PI / 2.0;
        const Mat4c H = quantum_sg_rest(cfg);
        const Mat4c expected = -cfg.B_magnitude * dirac_rest_spin_ops()[1];
        CHECK(max_abs(Mat4c(H - expected)) < 1e-12);
    }
    SUBCASE("electric term carries the rest-frame E_z") {
        const ExperimentConfig cfg = canonical_dirac();
        const Mat4c H = quantum_sg_rest(cfg);
        const auto [E_rest, B_rest] = rest_frame_fields(cfg.field_config());
        Mat4c magnetic = Mat4c::Zero();
        const OperatorTriple4 S = dirac_rest_spin_ops();
        for (int i = 0; i < 3; ++i) magnetic -= B_rest[i] * S[i];
        const Mat4c electric = H - magnetic;
        const Mat4c expected =
            cplx(0, 1) * gamma_matrices().gamma5 * S[2] * (-1.2247449);
        CHECK(max_abs(Mat4c(electric - expected)) < 1e-6);
    }
    SUBCASE("equals gamma times the lab Hamiltonian on the grid") {
        for (double gamma : kGammaGrid)
            for (double phi : kPhiGrid) {
                ExperimentConfig cfg;
                cfg.beta_magnitude = beta_of_gamma(gamma);
                cfg.phi = phi;
                cfg.alpha = 0.9;
                CHECK(max_abs(Mat4c(gamma * quantum_sg_lab(cfg) - quantum_sg_rest(cfg))) <
                      1e-12);
            }
    }
    SUBCASE("boosted spinor is an eigenvector") {
        const ExperimentConfig cfg = canonical_dirac();
        const Mat4c H = quantum_sg_rest(cfg);
        const DiracSpinor psi =
            boost_spinor(rest_spinor(Vec3::UnitY(), SpinSide::up, +1), cfg.beta_vector());
        const Vec4c v = psi.components;
        const cplx lambda = (v.adjoint() * H * v)(0, 0) / v.squaredNorm();
        CHECK((H * v - lambda * v).norm() / v.norm() < 1e-10);
        CHECK(lambda.real() == doctest::Approx(-0.5).epsilon(1e-12));  // -alpha B / 2
        CHECK(std::abs(lambda.imag()) < 1e-12);
    }
}

TEST_CASE("run_experiment: dirac model resolves the paradox") {
    const ExperimentReport rep = run_experiment(canonical_dirac());
    CHECK(rep.consistency_ok);
    CHECK(rep.covariance_ok);
    CHECK_FALSE(rep.paradox);
    CHECK(rep.detector == Detector::upper);
    CHECK(rep.gamma == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.rest_expectations[0] == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(rep.rest_expectations[1] == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(std::abs(rep.rest_expectations[2]) < 1e-12);
    CHECK(std::abs(rep.sx_lab_expectation) < 1e-12);
    CHECK(rep.lab_eigenvalue == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(rep.lab_eigen_residual < 1e-12);
    CHECK(rep.rest_eigen_residual < 1e-12);
}

TEST_CASE("run_experiment: relativistic model hits the paradox") {
    ExperimentConfig cfg = canonical_dirac();
    cfg.model = SpinModel::relativistic;
    const ExperimentReport rep = run_experiment(cfg);
    CHECK(rep.paradox);
    CHECK(rep.covariance_ok);        // theta state diagonalizes the rest Hamiltonian
    CHECK_FALSE(rep.consistency_ok); // but the lab transverse expectation survives
    CHECK(rep.sx_lab_expectation == doctest::Approx(-0.9486833).epsilon(1e-6));
    CHECK(rep.detector == Detector::upper);
    CHECK(rep.angular_gap > 1e-6);
    CHECK(rep.notes.size() == 2);
}

TEST_CASE("run_experiment: no paradox in the non-relativistic limit") {
    ExperimentConfig cfg;
    cfg.model = SpinModel::relativistic;
    cfg.beta_magnitude = 0.0;
    cfg.phi = 1.0;
    const ExperimentReport rep = run_experiment(cfg);
    CHECK_FALSE(rep.paradox);
    CHECK(rep.consistency_ok);
    CHECK(rep.covariance_ok);
}

TEST_CASE("paradox_check") {
    ExperimentConfig cfg = canonical_dirac();
    cfg.model = SpinModel::relativistic;
    SUBCASE("canonical point") {
        const ParadoxReport r = paradox_check(cfg);
        CHECK(r.theta == doctest::Approx(std::atan2(1.5, -0.5)).epsilon(1e-12));
        CHECK(r.xi_consistency == doctest::Approx(std::atan2(1.5, 0.5)).epsilon(1e-12));
        CHECK(r.angular_gap > 0.0);
        CHECK(r.paradox);
    }
    SUBCASE("axis-aligned motion") {
        cfg.phi = 0.0;
        const ParadoxReport r = paradox_check(cfg);
        CHECK(r.angular_gap < 1e-12);
        CHECK_FALSE(r.paradox);
    }
    SUBCASE("no boost") {
        cfg.beta_magnitude = 0.0;
        cfg.phi = 1.0;
        const ParadoxReport r = paradox_check(cfg);
        CHECK(r.angular_gap < 1e-12);
        CHECK_FALSE(r.paradox);
    }
    SUBCASE("wrong model throws") {
        cfg.model = SpinModel::dirac;
        CHECK_THROWS_AS(paradox_check(cfg), WrongModelError);
    }
}

TEST_CASE("rest-frame dirac expectations") {
    CHECK(rest_frame_dirac_expectations(canonical_dirac())
              .isApprox(Vec3(-0.5, 1.5, 0.0), 1e-10));

    ExperimentConfig rest;
    CHECK(rest_frame_dirac_expectations(rest).isApprox(Vec3(0.0, 1.0, 0.0), 1e-12));

    const Vec3 e = rest_frame_dirac_expectations(canonical_dirac());
    CHECK(std::atan2(e[1], e[0]) ==
          doctest::Approx(theta_angle(M_PI / 4, 2.0)).epsilon(1e-12));
}

TEST_CASE("electric dipole expectation") {
    SUBCASE("vanishes at rest and for motion parallel to B") {
        ExperimentConfig cfg;
        CHECK(electric_dipole_expectation(cfg).value == doctest::Approx(0.0));
        cfg.beta_magnitude = 0.9;
        cfg.phi = M_PI / 2.0;
        CHECK(std::abs(electric_dipole_expectation(cfg).value) < 1e-12);
    }
    SUBCASE("canonical point matches the closed form") {
        const ElectricDipoleExpectation e = electric_dipole_expectation(canonical_dirac());
        CHECK(e.value == doctest::Approx(1.5).epsilon(1e-10));
        CHECK(e.reference_value == doctest::Approx(1.5).epsilon(1e-10));
        CHECK(e.ratio == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("the ratio to the reference form is the coupling alpha") {
        for (double gamma : {1.25, 2.0, 5.0})
            for (double phi : {M_PI / 12, M_PI / 4, M_PI / 3}) {
                ExperimentConfig cfg;
                cfg.beta_magnitude = beta_of_gamma(gamma);
                cfg.phi = phi;
                cfg.alpha = 2.5;
                CHECK(electric_dipole_expectation(cfg).ratio ==
                      doctest::Approx(2.5).epsilon(1e-10));
            }
    }
    SUBCASE("negative-energy state flips the raw pairing, not the reported sign") {
        ExperimentConfig cfg = canonical_dirac();
        cfg.energy_sign = -1;
        const ElectricDipoleExpectation e = electric_dipole_expectation(cfg);
        CHECK(std::abs(e.value) == doctest::Approx(1.5).epsilon(1e-10));
    }
}

TEST_CASE("model contrast across the grid") {
    for (double gamma : kGammaGrid)
        for (double phi : kPhiGrid) {
            ExperimentConfig cfg;
            cfg.beta_magnitude = beta_of_gamma(gamma);
            cfg.phi = phi;

            cfg.model = SpinModel::dirac;
            const ExperimentReport dirac_rep = run_experiment(cfg);
            CHECK_FALSE(dirac_rep.paradox);

            cfg.model = SpinModel::relativistic;
            const ExperimentReport rel_rep = run_experiment(cfg);
            const bool oblique =
                gamma > 1.0 && std::abs(std::sin(phi) * std::cos(phi)) > 1e-12;
            CHECK(rel_rep.paradox == oblique);

            // both observers report the same detector for the same settings
            CHECK(dirac_rep.detector == rel_rep.detector);
            CHECK(dirac_rep.detector == Detector::upper);
        }
}

TEST_CASE("report numbers are invariant under a global phase of the spinor") {
    const ExperimentConfig cfg = canonical_dirac();
    DiracSpinor psi =
        boost_spinor(rest_spinor(Vec3::UnitY(), SpinSide::up, +1), cfg.beta_vector());
    DiracSpinor phased = psi;
    phased.components *= std::exp(cplx(0.0, 1.234));

    const OperatorTriple4 S = dirac_spin_vector(cfg.beta_vector());
    for (int i = 0; i < 3; ++i)
        CHECK(covariant_expectation(S[i], phased).value.real() ==
              doctest::Approx(covariant_expectation(S[i], psi).value.real())
                  .epsilon(1e-12));
    CHECK(phased.covariant_norm() == doctest::Approx(psi.covariant_norm()).epsilon(1e-12));
    CHECK(dirac_residual(phased) < 1e-12);
}

TEST_CASE("negative-energy run keeps the verdicts") {
    ExperimentConfig cfg = canonical_dirac();
    cfg.energy_sign = -1;
    const ExperimentReport rep = run_experiment(cfg);
    CHECK(rep.consistency_ok);
    CHECK(rep.covariance_ok);
    CHECK_FALSE(rep.paradox);
    CHECK(rep.detector == Detector::upper);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg;
    cfg.beta_magnitude = 1.2;
    CHECK_THROWS_AS(run_experiment(cfg), SuperluminalError);
    cfg.beta_magnitude = 0.5;
    cfg.tolerance = 0.0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg.tolerance = 1e-8;
    cfg.energy_sign = 3;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("ray angle gap folds mod pi") {
    CHECK(ray_angle_gap(0.2, 0.2 + M_PI) < 1e-12);
    CHECK(ray_angle_gap(0.0, M_PI / 2) == doctest::Approx(M_PI / 2));
    CHECK(ray_angle_gap(2.9, 0.1) == doctest::Approx(M_PI - 2.8).epsilon(1e-12));
}
