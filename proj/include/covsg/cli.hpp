// Command-line front end. Subcommands: run, sweep, check-algebra,
// verify-paper. Values may come from a flat JSON config file (--config);
// explicit flags override it. Exit status contract: 0 = success / all checks
// pass, 1 = a physics check failed, 2 = usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covsg {

struct CliConfig {
    std::string subcommand;
    double beta = 0.0;
    double phi_deg = 0.0;
    double B = 1.0;
    double alpha = 1.0;
    std::string model = "dirac";
    int energy_sign = 1;
    double tolerance = 1e-8;
    std::string format = "json";  // json | csv
    std::string output;           // file path; empty writes to stdout
    std::vector<double> beta_list;
    std::vector<double> phi_deg_list;

    void validate() const;  // throws UsageError
};

// Thrown when the user asked for --help; carries the text to print.
struct HelpRequested {
    std::string text;
};

// Parses argv (program name included); loads --config defaults first. Throws
// UsageError on invalid values and HelpRequested for --help.
CliConfig parse_cli(const std::vector<std::string>& argv);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace covsg
