#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcs/config.hpp"
#include "lcs/csv.hpp"
#include "lcs/experiments.hpp"
#include "lcs/version.hpp"

namespace {

std::string default_out_path(const lcs::ExperimentConfig& cfg) {
    const char* dir = std::getenv("LCS_OUT_DIR");
    const std::string base = dir && *dir ? std::string(dir) : std::string(".");
    return base + "/" + cfg.experiment + ".csv";
}

int run_command(const std::string& config_path, bool seed_set,
                std::uint64_t seed, const std::string& out_override,
                int jobs) {
    lcs::ExperimentConfig cfg;
    try {
        cfg = lcs::load_config_file(config_path);
    } catch (const lcs::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (seed_set) cfg.seed = seed;
    if (!out_override.empty()) cfg.output_path = out_override;
    if (cfg.output_path.empty()) cfg.output_path = default_out_path(cfg);
    std::ofstream out(cfg.output_path);
    if (!out) {
        std::cerr << "cannot open output file '" << cfg.output_path << "'\n";
        return 2;
    }
    lcs::ExperimentOutcome outcome;
    try {
        outcome = lcs::run_experiment(cfg, out, jobs);
    } catch (const std::exception& e) {
        std::cerr << "experiment failed: " << e.what() << "\n";
        return 2;
    }
    std::cout << cfg.experiment << ": " << outcome.rows << " rows, "
              << outcome.failures << " failures -> " << cfg.output_path
              << "\n";
    return outcome.failures > 0 ? 1 : 0;
}

int report_command(const std::vector<std::string>& files) {
    bool any_fail = false;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open '" << path << "'\n";
            return 2;
        }
        const lcs::CsvTable t = lcs::CsvTable::load(in);
        const long pass_col = t.column("pass");
        const long margin_col = t.column("margin");
        if (pass_col < 0 || t.rows.empty()) {
            std::cerr << path << ": not a result file\n";
            return 2;
        }
        long passed = 0, failed = 0;
        bool have_margin = false;
        double worst = 0.0;
        for (const auto& row : t.rows) {
            if (row[static_cast<size_t>(pass_col)] == "1")
                ++passed;
            else
                ++failed;
            if (margin_col >= 0 &&
                !row[static_cast<size_t>(margin_col)].empty()) {
                const double m =
                    std::stod(row[static_cast<size_t>(margin_col)]);
                worst = have_margin ? std::min(worst, m) : m;
                have_margin = true;
            }
        }
        const std::string experiment = t.rows[0][0];
        std::cout << path << ": " << experiment << ", " << passed
                  << " passed, " << failed << " failed";
        if (have_margin) std::cout << ", worst margin " << worst;
        std::cout << "\n";

        if (experiment == "ulmc-bias-scaling") {
            const long check_col = t.column("check");
            const long h_col = t.column("h");
            const long meas_col = t.column("measured");
            double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
            for (const auto& row : t.rows) {
                if (check_col < 0 || row[static_cast<size_t>(check_col)] != "r2")
                    continue;
                const double x =
                    std::log(std::stod(row[static_cast<size_t>(h_col)]));
                const double y =
                    std::log(std::stod(row[static_cast<size_t>(meas_col)]));
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
                n += 1;
            }
            if (n >= 2) {
                const double slope =
                    (n * sxy - sx * sy) / (n * sxx - sx * sx);
                const bool ok = slope >= 1.7 && slope <= 2.3;
                std::cout << "  log-log slope " << slope << " ("
                          << (ok ? "within" : "OUTSIDE") << " [1.7, 2.3])\n";
                if (!ok) any_fail = true;
            }
        }
        if (failed > 0) any_fail = true;
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"log-concave sampling toolkit: experiment runner"};
    app.set_version_flag("--version", lcs::kVersion);
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run one experiment from a config file");
    std::string config_path;
    run->add_option("config", config_path, "config file path")->required();
    std::uint64_t seed = 0;
    auto* seed_opt = run->add_option("--seed", seed, "override the config seed");
    std::string out_path;
    run->add_option("--out", out_path, "override the output path");
    int jobs = 1;
    run->add_option("--jobs", jobs, "worker threads (0 = hardware default)");

    auto* rep = app.add_subcommand("report", "summarize result files");
    std::vector<std::string> files;
    rep->add_option("files", files, "result CSV files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (run->parsed())
        return run_command(config_path, seed_opt->count() > 0, seed, out_path,
                           jobs);
    return report_command(files);
}
