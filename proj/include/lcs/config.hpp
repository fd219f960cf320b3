#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcs {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadratic target description: either a diagonal spectrum or a matrix file
// (row-major text), plus an optional center (default origin).
struct TargetSpec {
    long dim = 0;
    std::vector<double> spectrum;
    std::string matrix_file;
    std::vector<double> center;
};

struct ExperimentConfig {
    std::string experiment;
    std::uint64_t seed = 0;
    std::string output_path;
    TargetSpec target;
    std::map<std::string, double> params;
    std::map<std::string, double> constants;
};

extern const std::vector<std::string> kExperimentNames;

// INI-style grammar: [run] experiment/seed/out, [target] dim/spectrum/
// matrix/center, [params] and [constants] free key = value pairs.  '#' and
// ';' start comments.  Throws ConfigError with a line number.
ExperimentConfig parse_config(std::istream& is);
ExperimentConfig load_config_file(const std::string& path);

double param_or(const ExperimentConfig& cfg, const std::string& key,
                double fallback);

}  // namespace lcs
