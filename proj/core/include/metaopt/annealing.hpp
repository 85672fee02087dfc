#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "metaopt/boundary.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/rng.hpp"
#include "metaopt/stochastic.hpp"
#include "metaopt/trajectory.hpp"

namespace metaopt::annealing {

// T(t) = d / ln(t + t_offset - 1). The offset keeps T(1) = d / ln(t_offset)
// finite; with the default offset of 2, T(1) = d / ln 2.
struct Logarithmic {
    double d = 1.0;
    int t_offset = 2;

    friend bool operator==(const Logarithmic&, const Logarithmic&) = default;
};

// T(t) = T0 * ratio^t.
struct Geometric {
    double t0 = 1.0;
    double ratio = 0.995;

    friend bool operator==(const Geometric&, const Geometric&) = default;
};

using CoolingSchedule = std::variant<Logarithmic, Geometric>;

void validate(const CoolingSchedule& schedule);

// Temperature at iteration t >= 1. Never returns zero: a geometric
// schedule that underflows is held at the smallest normal double.
double temperature(const CoolingSchedule& schedule, std::size_t t);

// Metropolis acceptance min(1, exp(-delta_e / (k_b * T))). Throws
// std::domain_error unless T > 0 and k_b > 0.
double acceptance_probability(double delta_e, double temperature, double k_b = 1.0);

struct AnnealingParams {
    CoolingSchedule schedule = Geometric{};
    double k_b = 1.0;
    stochastic::StepDistribution proposal = stochastic::StepDistribution::gaussian(0.0, 0.3);
    // Multiplies every proposal draw; zero freezes the chain in place.
    double step_scale = 1.0;
    std::size_t max_iters = 5000;
    BoundaryPolicy boundary = BoundaryPolicy::clamp;
    // Initial guess; drawn uniformly in the bounds when absent.
    std::optional<Vector> x0;
    // Record one AnnealStep per iteration in AnnealResult::steps.
    bool record_steps = false;

    void validate(const problems::Problem& problem) const;
};

// One Metropolis iteration as exported to CSV (t, T, x..., f, f_best,
// accepted). Row t = 0 is the initial state.
struct AnnealStep {
    std::size_t t = 0;
    double temperature = 0.0;
    Vector x;
    double f = 0.0;
    double f_best = 0.0;
    bool accepted = false;

    friend bool operator==(const AnnealStep&, const AnnealStep&) = default;
};

struct AnnealResult {
    RunResult run;
    std::vector<AnnealStep> steps;
};

// The Markov chain behind anneal(). The next state depends only on the
// current state and the random stream; copying a chain copies the stream,
// so a copy taken at iteration t replays the identical suffix.
class AnnealChain {
public:
    // Evaluates the initial point once.
    AnnealChain(problems::Problem& problem, const AnnealingParams& params, std::uint64_t seed);

    // Advances one iteration (one evaluation) and returns the step record.
    AnnealStep step(problems::Problem& problem);

    std::size_t iteration() const { return t_; }
    const Vector& x() const { return x_; }
    double f() const { return f_; }
    const Vector& best_x() const { return best_x_; }
    double best_f() const { return best_f_; }
    const Rng& rng() const { return rng_; }

private:
    AnnealingParams params_;
    Rng rng_;
    std::size_t t_ = 0;
    Vector x_;
    double f_ = 0.0;
    Vector best_x_;
    double best_f_ = 0.0;
    Vector proposal_;
};

AnnealResult anneal(problems::Problem& problem, const AnnealingParams& params,
                    std::uint64_t seed);

struct PowerLawFit {
    double a_hat;
    double alpha_hat;
};

// Empirical P(x(t) in S*) at each checkpoint, plus a least-squares fit of
// log P = log A - alpha log t over checkpoints with P > 0. The fit is
// absent when no run ever hits the set; with a single positive checkpoint
// it degenerates to alpha = 0, A = P.
struct ConvergenceBoundFit {
    std::vector<std::pair<std::size_t, double>> curve;
    std::optional<PowerLawFit> fit;
};

// Runs n_runs independent chains (seed derive_seed(seed, i)) on copies of
// `problem` and reports the hit fraction of the *current* state. Requires
// n_runs >= 30, checkpoints in [0, max_iters].
ConvergenceBoundFit estimate_hitting_probability(const problems::Problem& problem,
                                                 const AnnealingParams& params,
                                                 const problems::OptimalSet& optimal_set,
                                                 std::size_t n_runs,
                                                 const std::vector<std::size_t>& checkpoints,
                                                 std::uint64_t seed);

}  // namespace metaopt::annealing
