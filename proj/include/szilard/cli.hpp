#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace szilard::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kUndefinedQuantity = 3,
    kOracleFailure = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "A:B[:step]", inclusive, step defaults to 1. Throws std::invalid_argument.
std::vector<long> parse_particle_range(const std::string& text);

/// "A:B:step" in kelvin, inclusive up to rounding. Throws std::invalid_argument.
std::vector<double> parse_temperature_range(const std::string& text);

}  // namespace szilard::cli
