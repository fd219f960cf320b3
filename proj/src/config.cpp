#include "lcs/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lcs {

const std::vector<std::string> kExperimentNames = {
    "pabi-verify",       "regularity-verify", "ulmc-bias-scaling",
    "ulmc-contraction",  "mala-stationarity", "prox-contraction",
    "pipeline-weak",     "pipeline-full",     "orlicz-closed-forms",
};

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(long line, const std::string& msg) {
    throw ConfigError("parse error at line " + std::to_string(line) + ": " +
                      msg);
}

double parse_double(long line, const std::string& s) {
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) fail(line, "trailing characters in number '" + s + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a number, got '" + s + "'");
    }
}

std::vector<double> parse_list(long line, const std::string& s) {
    std::vector<double> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(line, "empty list entry");
        out.push_back(parse_double(line, item));
    }
    if (out.empty()) fail(line, "empty list");
    return out;
}

}  // namespace

ExperimentConfig parse_config(std::istream& is) {
    ExperimentConfig cfg;
    std::string section;
    std::string raw;
    long line = 0;
    bool seed_seen = false;
    while (std::getline(is, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string s = raw;
        const auto hash = s.find_first_of("#;");
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section != "run" && section != "target" &&
                section != "params" && section != "constants")
                fail(line, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        if (value.empty()) fail(line, "empty value for '" + key + "'");
        if (section.empty()) fail(line, "key outside any section");

        if (section == "run") {
            if (key == "experiment") {
                if (std::find(kExperimentNames.begin(), kExperimentNames.end(),
                              value) == kExperimentNames.end())
                    fail(line, "unknown experiment '" + value + "'");
                cfg.experiment = value;
            } else if (key == "seed") {
                try {
                    size_t used = 0;
                    cfg.seed = std::stoull(value, &used);
                    if (used != value.size()) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    fail(line, "seed must be an unsigned integer");
                }
                seed_seen = true;
            } else if (key == "out") {
                cfg.output_path = value;
            } else {
                fail(line, "unknown key '" + key + "' in [run]");
            }
        } else if (section == "target") {
            if (key == "dim") {
                cfg.target.dim = static_cast<long>(parse_double(line, value));
                if (cfg.target.dim < 1) fail(line, "dim must be >= 1");
            } else if (key == "spectrum") {
                cfg.target.spectrum = parse_list(line, value);
            } else if (key == "matrix") {
                cfg.target.matrix_file = value;
            } else if (key == "center") {
                cfg.target.center = parse_list(line, value);
            } else {
                fail(line, "unknown key '" + key + "' in [target]");
            }
        } else if (section == "params") {
            cfg.params[key] = parse_double(line, value);
        } else {
            cfg.constants[key] = parse_double(line, value);
        }
    }
    if (cfg.experiment.empty()) fail(line + 1, "missing experiment name");
    if (!seed_seen) fail(line + 1, "missing mandatory seed");
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

double param_or(const ExperimentConfig& cfg, const std::string& key,
                double fallback) {
    const auto it = cfg.params.find(key);
    return it == cfg.params.end() ? fallback : it->second;
}

}  // namespace lcs
