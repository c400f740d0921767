#include "covsg/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace covsg {

namespace {

ordered_json json_number(double x) { return round_g12(x); }

ordered_json json_vec3(const Vec3& v) {
    return ordered_json::array({json_number(v[0]), json_number(v[1]), json_number(v[2])});
}

// Complex entries as [re, im] pairs.
ordered_json json_complex(const cplx& z) {
    return ordered_json::array({json_number(z.real()), json_number(z.imag())});
}

ordered_json json_matrix(const Eigen::MatrixXcd& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json_complex(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json json_vector(const Eigen::VectorXcd& v) {
    ordered_json out = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(json_complex(v[i]));
    return out;
}

double deg(double rad) { return rad * 180.0 / M_PI; }

}  // namespace

std::string format_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double round_g12(double x) { return std::strtod(format_g12(x).c_str(), nullptr); }

ordered_json to_json(const ExperimentReport& rep) {
    ordered_json j;
    j["model"] = to_string(rep.model);
    j["energy_sign"] = rep.energy_sign;
    j["beta"] = json_number(rep.beta);
    j["phi_deg"] = json_number(deg(rep.phi));
    j["B"] = json_number(rep.B);
    j["alpha"] = json_number(rep.alpha);
    j["tolerance"] = json_number(rep.tolerance);
    j["gamma"] = json_number(rep.gamma);
    j["rest_fields"] = ordered_json{{"E", json_vec3(rep.rest_E)}, {"B", json_vec3(rep.rest_B)}};
    j["theta_deg"] = json_number(deg(rep.theta));
    j["xi_deg"] = json_number(deg(rep.xi_consistency));
    j["angular_gap_deg"] = json_number(deg(rep.angular_gap));
    j["hamiltonian_lab"] = json_matrix(rep.hamiltonian_lab);
    j["hamiltonian_rest"] = json_matrix(rep.hamiltonian_rest);
    j["initial_state"] = json_vector(rep.initial_state);
    j["detector"] = to_string(rep.detector);
    j["sx_lab_expectation"] = json_number(rep.sx_lab_expectation);
    j["sz_lab_expectation"] = json_number(rep.sz_lab_expectation);
    j["rest_expectations"] = json_vec3(rep.rest_expectations);
    j["lab_eigenvalue"] = json_number(rep.lab_eigenvalue);
    j["lab_eigen_residual"] = json_number(rep.lab_eigen_residual);
    j["rest_eigen_residual"] = json_number(rep.rest_eigen_residual);
    j["lab_hamiltonian_expectation"] = json_number(rep.lab_hamiltonian_expectation);
    j["consistency_ok"] = rep.consistency_ok;
    j["covariance_ok"] = rep.covariance_ok;
    j["paradox"] = rep.paradox;
    j["notes"] = rep.notes;
    return j;
}

ordered_json to_json(const ParadoxReport& rep) {
    ordered_json j;
    j["theta_deg"] = json_number(deg(rep.theta));
    j["xi_deg"] = json_number(deg(rep.xi_consistency));
    j["angular_gap_deg"] = json_number(deg(rep.angular_gap));
    j["verdict"] = rep.paradox ? "paradox" : "none";
    return j;
}

ordered_json to_json(const std::vector<CheckResult>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json j;
        j["name"] = c.name;
        j["max_error"] = json_number(c.max_error);
        j["threshold"] = json_number(c.threshold);
        j["passed"] = c.passed;
        j["informational"] = c.informational;
        j["note"] = c.note;
        arr.push_back(j);
    }
    ordered_json out;
    out["checks"] = arr;
    out["all_passed"] = all_passed(checks);
    return out;
}

std::string report_csv(const ExperimentReport& rep) {
    std::ostringstream os;
    os << "key,value\n";
    os << "model," << to_string(rep.model) << "\n";
    os << "energy_sign," << rep.energy_sign << "\n";
    os << "beta," << format_g12(rep.beta) << "\n";
    os << "phi_deg," << format_g12(deg(rep.phi)) << "\n";
    os << "B," << format_g12(rep.B) << "\n";
    os << "alpha," << format_g12(rep.alpha) << "\n";
    os << "gamma," << format_g12(rep.gamma) << "\n";
    os << "theta_deg," << format_g12(deg(rep.theta)) << "\n";
    os << "xi_deg," << format_g12(deg(rep.xi_consistency)) << "\n";
    os << "angular_gap_deg," << format_g12(deg(rep.angular_gap)) << "\n";
    os << "detector," << to_string(rep.detector) << "\n";
    os << "sx_lab_expectation," << format_g12(rep.sx_lab_expectation) << "\n";
    os << "sz_lab_expectation," << format_g12(rep.sz_lab_expectation) << "\n";
    os << "rest_expectation_x," << format_g12(rep.rest_expectations[0]) << "\n";
    os << "rest_expectation_y," << format_g12(rep.rest_expectations[1]) << "\n";
    os << "rest_expectation_z," << format_g12(rep.rest_expectations[2]) << "\n";
    os << "lab_eigenvalue," << format_g12(rep.lab_eigenvalue) << "\n";
    os << "consistency_ok," << (rep.consistency_ok ? "true" : "false") << "\n";
    os << "covariance_ok," << (rep.covariance_ok ? "true" : "false") << "\n";
    os << "paradox," << (rep.paradox ? "true" : "false") << "\n";
    return os.str();
}

std::string checks_csv(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    os << "name,max_error,threshold,passed,informational,note\n";
    for (const auto& c : checks) {
        std::string note = c.note;
        for (auto& ch : note)
            if (ch == ',') ch = ';';
        os << c.name << ',' << format_g12(c.max_error) << ',' << format_g12(c.threshold) << ','
           << (c.passed ? "true" : "false") << ',' << (c.informational ? "true" : "false") << ','
           << note << "\n";
    }
    return os.str();
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    std::vector<SweepRow> rows;
    rows.reserve(spec.models.size() * spec.phi_deg_values.size() * spec.beta_values.size());
    for (SpinModel model : spec.models)
        for (double phi_deg : spec.phi_deg_values)
            for (double beta : spec.beta_values) {
                ExperimentConfig cfg;
                cfg.beta_magnitude = beta;
                cfg.phi = phi_deg * M_PI / 180.0;
                cfg.B_magnitude = spec.B;
                cfg.alpha = spec.alpha;
                cfg.model = model;
                cfg.tolerance = spec.tolerance;
                const ExperimentReport rep = run_experiment(cfg);
                SweepRow row;
                row.gamma = rep.gamma;
                row.phi_deg = phi_deg;
                row.theta_deg = deg(rep.theta);
                row.xi_deg = deg(rep.xi_consistency);
                row.angular_gap_deg = deg(rep.angular_gap);
                row.sx_expectation = rep.sx_lab_expectation;
                row.paradox = rep.paradox;
                row.model = model;
                rows.push_back(row);
            }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << kSweepCsvHeader << "\n";
    for (const auto& r : rows)
        os << format_g12(r.gamma) << ',' << format_g12(r.phi_deg) << ','
           << format_g12(r.theta_deg) << ',' << format_g12(r.xi_deg) << ','
           << format_g12(r.angular_gap_deg) << ',' << format_g12(r.sx_expectation) << ','
           << (r.paradox ? "true" : "false") << ',' << to_string(r.model) << "\n";
    return os.str();
}

ordered_json sweep_json(const std::vector<SweepRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["gamma"] = round_g12(r.gamma);
        j["phi_deg"] = round_g12(r.phi_deg);
        j["theta_deg"] = round_g12(r.theta_deg);
        j["xi_deg"] = round_g12(r.xi_deg);
        j["angular_gap"] = round_g12(r.angular_gap_deg);
        j["sx_expectation"] = round_g12(r.sx_expectation);
        j["paradox"] = r.paradox;
        j["model"] = to_string(r.model);
        arr.push_back(j);
    }
    return arr;
}

}  // namespace covsg
