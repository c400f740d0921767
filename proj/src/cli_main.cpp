#include "covsg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "covsg/report_io.hpp"

namespace covsg {

namespace {

void load_config_file(const std::string& path, CliConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file " + path + " is not valid JSON: " + e.what());
    }
    try {
        if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
        if (j.contains("phi_deg")) cfg.phi_deg = j["phi_deg"].get<double>();
        if (j.contains("B")) cfg.B = j["B"].get<double>();
        if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
        if (j.contains("model")) cfg.model = j["model"].get<std::string>();
        if (j.contains("energy_sign")) cfg.energy_sign = j["energy_sign"].get<int>();
        if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (j.contains("output")) cfg.output = j["output"].get<std::string>();
        if (j.contains("beta_list")) cfg.beta_list = j["beta_list"].get<std::vector<double>>();
        if (j.contains("phi_deg_list"))
            cfg.phi_deg_list = j["phi_deg_list"].get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file " + path + ": " + e.what());
    }
}

void add_common_options(CLI::App* cmd, CliConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "flat JSON config file; flags override it");
    cmd->add_option("--tolerance", cfg.tolerance, "verdict tolerance");
    cmd->add_option("--format", cfg.format, "output format: json or csv");
    cmd->add_option("-o,--output", cfg.output, "output file (default: stdout)");
}

void add_run_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--beta", cfg.beta, "particle speed, 0 <= beta < 1");
    cmd->add_option("--phi-deg", cfg.phi_deg, "flight azimuth from the x-axis, degrees");
    cmd->add_option("-B,--B", cfg.B, "magnetic field magnitude along lab +y");
    cmd->add_option("--alpha", cfg.alpha, "gyromagnetic ratio");
    cmd->add_option("--model", cfg.model, "spin model: relativistic or dirac");
    cmd->add_option("--energy-sign", cfg.energy_sign, "+1 or -1 (dirac model)");
}

SpinModel parse_model(const std::string& name) {
    if (name == "relativistic") return SpinModel::relativistic;
    if (name == "dirac") return SpinModel::dirac;
    throw UsageError("unknown model '" + name + "' (expected relativistic or dirac)");
}

std::vector<SpinModel> parse_models(const std::string& name) {
    if (name == "both") return {SpinModel::relativistic, SpinModel::dirac};
    return {parse_model(name)};
}

void write_output(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw UsageError("cannot write output file: " + cfg.output);
    f << text;
    if (!f.good()) throw UsageError("failed writing output file: " + cfg.output);
}

ExperimentConfig experiment_config(const CliConfig& cfg) {
    ExperimentConfig ec;
    ec.beta_magnitude = cfg.beta;
    ec.phi = cfg.phi_deg * M_PI / 180.0;
    ec.B_magnitude = cfg.B;
    ec.alpha = cfg.alpha;
    ec.model = parse_model(cfg.model);
    ec.energy_sign = cfg.energy_sign;
    ec.tolerance = cfg.tolerance;
    return ec;
}

int cmd_run(const CliConfig& cfg, std::ostream& out) {
    const ExperimentReport rep = run_experiment(experiment_config(cfg));
    if (cfg.format == "csv")
        write_output(cfg, report_csv(rep), out);
    else
        write_output(cfg, to_json(rep).dump(2) + "\n", out);
    return 0;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out) {
    SweepSpec spec;
    spec.beta_values = cfg.beta_list;
    spec.phi_deg_values = cfg.phi_deg_list;
    if (spec.beta_values.empty())
        for (double gamma : gamma_grid()) spec.beta_values.push_back(beta_of_gamma(gamma));
    if (spec.phi_deg_values.empty())
        for (int i = 0; i <= 6; ++i) spec.phi_deg_values.push_back(15.0 * i);
    for (double b : spec.beta_values)
        if (b < 0.0 || b >= 1.0)
            throw UsageError("sweep beta value " + format_g12(b) + " is not in [0, 1)");
    spec.models = parse_models(cfg.model);
    spec.B = cfg.B;
    spec.alpha = cfg.alpha;
    spec.tolerance = cfg.tolerance;
    const std::vector<SweepRow> rows = run_sweep(spec);
    if (cfg.format == "csv")
        write_output(cfg, sweep_csv(rows), out);
    else
        write_output(cfg, sweep_json(rows).dump(2) + "\n", out);
    return 0;
}

int cmd_check_algebra(const CliConfig& cfg, std::ostream& out) {
    std::vector<double> speeds = cfg.beta_list;
    if (speeds.empty()) speeds = {0.0, 0.1, 0.3, 0.6, 0.9};
    for (double b : speeds)
        if (b < 0.0 || b >= 1.0)
            throw UsageError("beta value " + format_g12(b) + " is not in [0, 1)");
    const auto rows = algebra_residual_table(speeds);

    bool ok = true;
    for (const auto& r : rows) {
        if (r.dirac_residual >= cfg.tolerance) ok = false;
        if (r.beta > 0.0 && r.relativistic_residual <= cfg.tolerance) ok = false;
    }

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "beta,gamma,relativistic_residual,dirac_residual\n";
        for (const auto& r : rows)
            os << format_g12(r.beta) << ',' << format_g12(r.gamma) << ','
               << format_g12(r.relativistic_residual) << ',' << format_g12(r.dirac_residual)
               << "\n";
        write_output(cfg, os.str(), out);
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["beta"] = round_g12(r.beta);
            j["gamma"] = round_g12(r.gamma);
            j["relativistic_residual"] = round_g12(r.relativistic_residual);
            j["dirac_residual"] = round_g12(r.dirac_residual);
            arr.push_back(j);
        }
        ordered_json doc;
        doc["rows"] = arr;
        doc["dirac_closes"] = ok;
        write_output(cfg, doc.dump(2) + "\n", out);
    }
    return ok ? 0 : 1;
}

int cmd_verify_paper(const CliConfig& cfg, std::ostream& out) {
    const std::vector<CheckResult> checks = run_paper_checks();
    if (cfg.format == "csv")
        write_output(cfg, checks_csv(checks), out);
    else
        write_output(cfg, to_json(checks).dump(2) + "\n", out);
    return all_passed(checks) ? 0 : 1;
}

}  // namespace

void CliConfig::validate() const {
    if (beta < 0.0 || beta >= 1.0)
        throw UsageError("--beta " + format_g12(beta) +
                         " is superluminal or negative (need 0 <= beta < 1)");
    if (tolerance <= 0.0) throw UsageError("--tolerance must be positive");
    if (format != "json" && format != "csv")
        throw UsageError("--format must be json or csv, got '" + format + "'");
    if (energy_sign != 1 && energy_sign != -1)
        throw UsageError("--energy-sign must be +1 or -1");
    if (subcommand == "run") parse_model(model);  // 'both' only makes sense for sweep
    if (subcommand == "sweep") parse_models(model);
}

CliConfig parse_cli(const std::vector<std::string>& argv) {
    CliConfig cfg;

    // The config file provides defaults, so it is applied before CLI11 parses
    // the explicit flags.
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i] == "--config" && i + 1 < argv.size()) load_config_file(argv[i + 1], cfg);
        else if (argv[i].rfind("--config=", 0) == 0) load_config_file(argv[i].substr(9), cfg);
    }

    CLI::App app{"covariant Stern-Gerlach spin toolkit"};
    app.require_subcommand(1);
    std::string config_path;

    CLI::App* run = app.add_subcommand("run", "run a single experiment and print the report");
    add_common_options(run, cfg, config_path);
    add_run_options(run, cfg);

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a (beta, phi) grid");
    add_common_options(sweep, cfg, config_path);
    add_run_options(sweep, cfg);
    sweep->add_option("--beta-list", cfg.beta_list, "grid speeds")->delimiter(',');
    sweep->add_option("--phi-deg-list", cfg.phi_deg_list, "grid azimuths, degrees")
        ->delimiter(',');

    CLI::App* algebra =
        app.add_subcommand("check-algebra", "residuals of both spin algebras over a speed grid");
    add_common_options(algebra, cfg, config_path);
    algebra->add_option("--beta-list", cfg.beta_list, "speeds to probe")->delimiter(',');

    CLI::App* verify =
        app.add_subcommand("verify-paper", "run every closed-form and two-route self-check");
    add_common_options(verify, cfg, config_path);

    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(int(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& e) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n\n" + app.help());
    }

    for (CLI::App* sub : {run, sweep, algebra, verify})
        if (sub->parsed()) cfg.subcommand = sub->get_name();
    cfg.validate();
    return cfg;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv, argv + argc);
    try {
        const CliConfig cfg = parse_cli(args);
        if (cfg.subcommand == "run") return cmd_run(cfg, out);
        if (cfg.subcommand == "sweep") return cmd_sweep(cfg, out);
        if (cfg.subcommand == "check-algebra") return cmd_check_algebra(cfg, out);
        if (cfg.subcommand == "verify-paper") return cmd_verify_paper(cfg, out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace covsg
