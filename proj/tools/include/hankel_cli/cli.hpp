#ifndef HANKEL_CLI_CLI_HPP
#define HANKEL_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hankel_lab/weights.hpp"

namespace hankel_cli {

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kConfigError = 2, kNumericalError = 3 };

/// "fock:1", "bergman:0.5"; ConfigError otherwise.
hankel_lab::WeightModel parse_space(const std::string& text);

/// "power:p" with p > 0; returns p.
double parse_rho(const std::string& text);

/// Line-oriented key=value; '#' starts a comment, blank lines are skipped.
/// Keys must be flag names (without dashes); anything else is a ConfigError.
std::map<std::string, std::string> read_config(std::istream& is);

/// Flag names accepted in config files.
const std::vector<std::string>& config_keys();

/// Full command line entry point. argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace hankel_cli

#endif
