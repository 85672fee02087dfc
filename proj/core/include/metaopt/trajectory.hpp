#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metaopt/types.hpp"

namespace metaopt {

// One recorded iteration of a search path. For single-agent methods
// `state` is the current point; for population methods it is the best
// agent of the current iteration.
struct Checkpoint {
    std::size_t t = 0;
    Vector state;
    double f = 0.0;
    double f_best = 0.0;

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct TrajectoryRecord {
    std::uint64_t run_id = 0;
    std::uint64_t seed = 0;
    std::vector<Checkpoint> checkpoints;  // ascending t, f_best non-increasing
    std::uint64_t evaluations = 0;

    friend bool operator==(const TrajectoryRecord&, const TrajectoryRecord&) = default;
};

struct RunResult {
    std::uint64_t seed = 0;
    Vector best_x;
    double best_f = 0.0;
    std::uint64_t evaluations = 0;
    // best_history[t] is the best-so-far value after iteration t; entry 0
    // is the initial state.
    std::vector<double> best_history;
    TrajectoryRecord trajectory;
};

// Decimal text that round-trips bit-exactly (17 significant digits).
std::string format_real(double value);

}  // namespace metaopt
