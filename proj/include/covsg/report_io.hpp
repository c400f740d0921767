// Deterministic report serialization. Every floating-point number is rounded
// to 12 significant digits before it is written, JSON keys keep a fixed
// order, and the CSV encoders reuse the same rounding, so JSON and CSV carry
// identical numbers and repeated runs are byte-identical.
#pragma once

#include <json.hpp>

#include "covsg/experiment.hpp"
#include "covsg/verify.hpp"

namespace covsg {

using ordered_json = nlohmann::ordered_json;

// "%.12g" formatting and the double it parses back to.
std::string format_g12(double x);
double round_g12(double x);

ordered_json to_json(const ExperimentReport& rep);
ordered_json to_json(const ParadoxReport& rep);
ordered_json to_json(const std::vector<CheckResult>& checks);

// Flat key,value listing of the scalar report fields (matrices and states are
// JSON-only).
std::string report_csv(const ExperimentReport& rep);
std::string checks_csv(const std::vector<CheckResult>& checks);

struct SweepRow {
    double gamma = 1.0;
    double phi_deg = 0.0;
    double theta_deg = 0.0;
    double xi_deg = 0.0;
    double angular_gap_deg = 0.0;
    double sx_expectation = 0.0;
    bool paradox = false;
    SpinModel model = SpinModel::dirac;
};

struct SweepSpec {
    std::vector<double> beta_values;
    std::vector<double> phi_deg_values;
    std::vector<SpinModel> models;
    double B = 1.0;
    double alpha = 1.0;
    double tolerance = 1e-8;
};

// One row per grid point per model, ordered model-major, then phi, then beta.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepCsvHeader =
    "gamma,phi_deg,theta_deg,xi_deg,angular_gap,sx_expectation,paradox,model";

std::string sweep_csv(const std::vector<SweepRow>& rows);
ordered_json sweep_json(const std::vector<SweepRow>& rows);

}  // namespace covsg
