#pragma once

#include <iosfwd>

#include "lcs/config.hpp"

namespace lcs {

struct ExperimentOutcome {
    long rows = 0;
    long failures = 0;  // rows whose pass flag is 0
};

// Runs one configured experiment and streams its CSV to out.  Sweep points
// use RNG streams derived from (seed, point index) and rows are emitted in
// point order, so output is identical for any jobs value.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg,
                                 std::ostream& out, int jobs = 1);

}  // namespace lcs
