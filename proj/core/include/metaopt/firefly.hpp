#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "metaopt/boundary.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/special.hpp"
#include "metaopt/stochastic.hpp"
#include "metaopt/trajectory.hpp"

namespace metaopt::firefly {

// beta0 * exp(-gamma * r^2).
double attractiveness(double beta0, double gamma, double r);

enum class MoveStrategy {
    full_loop,       // move toward every brighter firefly in turn
    brightest_only,  // one move toward the current best
};

std::string_view to_string(MoveStrategy strategy);
MoveStrategy parse_move_strategy(std::string_view name);

struct FireflyParams {
    double beta0 = 1.0;   // attractiveness at r = 0
    double gamma = 1.0;   // light absorption
    double alpha = 0.2;   // randomization strength at t = 0
    // alpha_t = alpha * alpha_decay^t unless alpha_schedule is set.
    double alpha_decay = 0.97;
    std::function<double(std::size_t)> alpha_schedule;
    // beta0_t = beta0 * beta0_decay^t; 1 disables the decay.
    double beta0_decay = 1.0;
    MoveStrategy strategy = MoveStrategy::full_loop;
    std::size_t population = 25;
    std::size_t max_iters = 500;
    stochastic::StepDistribution noise = stochastic::StepDistribution::gaussian(0.0, 1.0);
    BoundaryPolicy boundary = BoundaryPolicy::clamp;
    std::vector<Vector> initial_positions;
    bool record_rows = false;

    double alpha_at(std::size_t t) const;
    double beta0_at(std::size_t t) const;
    void validate(const problems::Problem& problem) const;
};

// CSV row: t, firefly id, x..., f, f_best.
struct FireflyRow {
    std::size_t t = 0;
    std::size_t firefly = 0;
    Vector x;
    double f = 0.0;
    double f_best = 0.0;

    friend bool operator==(const FireflyRow&, const FireflyRow&) = default;
};

struct FireflyResult {
    RunResult run;
    std::vector<Vector> final_positions;
    std::vector<FireflyRow> rows;
};

// Minimizes the problem; lower objective means brighter. Each generation
// sorts the population by brightness (stable, so ties keep their order),
// then moves firefly i toward each brighter j in ascending index order,
// re-reading positions and distances after every sub-move. After its
// attraction moves each firefly takes one noise step alpha_t * eps, so with
// beta0 = 0 every firefly is a plain random walk. Objectives are refreshed
// once per generation.
FireflyResult firefly_optimize(problems::Problem& problem, const FireflyParams& params,
                               std::uint64_t seed);

// u (1 - beta0 exp(-u^2)).
double reduced_map_step(double beta0, double u);

// lambda u (1 - u).
double logistic_step(double lambda, double u);

// A one-parameter map of the real line with its analytic derivative.
class ScalarMap {
public:
    enum class Kind { firefly_reduced, logistic };

    static ScalarMap firefly_reduced(double beta0);
    static ScalarMap logistic(double lambda);

    Kind kind() const { return kind_; }
    double parameter() const { return parameter_; }
    std::string name() const;

    double value(double u) const;
    double derivative(double u) const;
    double operator()(double u) const { return value(u); }

private:
    ScalarMap(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}
    Kind kind_;
    double parameter_;
};

}  // namespace metaopt::firefly
