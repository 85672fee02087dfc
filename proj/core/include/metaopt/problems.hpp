#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metaopt/types.hpp"

namespace metaopt::problems {

using Objective = std::function<double(std::span<const double>)>;

struct KnownOptimum {
    Vector location;
    double value;
};

// An objective with box bounds and an evaluation counter. Problems are
// cheap to copy; ensemble runs take one copy each so counters never race.
// Objectives are total: evaluating outside the bounds is allowed and the
// boundary policy belongs to the optimizer.
class Problem {
public:
    Problem(std::string name, Bounds bounds, Objective objective,
            std::optional<KnownOptimum> optimum = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return bounds_.size(); }
    const Bounds& bounds() const { return bounds_; }
    const std::optional<KnownOptimum>& known_optimum() const { return optimum_; }

    // Throws std::invalid_argument on dimension mismatch. Increments the
    // evaluation counter by exactly one.
    double evaluate(std::span<const double> x);

    std::uint64_t eval_count() const { return eval_count_; }
    void reset_eval_count() { eval_count_ = 0; }

private:
    std::string name_;
    Bounds bounds_;
    Objective objective_;
    std::optional<KnownOptimum> optimum_;
    std::uint64_t eval_count_ = 0;
};

Problem sphere(std::size_t dimension);
Problem rosenbrock(std::size_t dimension);
Problem ackley(std::size_t dimension);
Problem rastrigin(std::size_t dimension);

// Looks up a suite problem by name; throws std::invalid_argument for
// unknown names or dimension 0 (rosenbrock needs dimension >= 2).
Problem make_problem(const std::string& name, std::size_t dimension);

std::vector<std::string> builtin_names();
std::vector<Problem> builtin_suite(std::size_t dimension = 2);

// Solutions whose objective is within epsilon of the known optimum value.
class OptimalSet {
public:
    // Throws std::invalid_argument if epsilon <= 0 or the problem has no
    // known optimum.
    OptimalSet(const Problem& problem, double epsilon);

    double epsilon() const { return epsilon_; }
    double threshold() const { return threshold_; }
    bool contains_value(double f) const { return f <= threshold_; }

private:
    double epsilon_;
    double threshold_;
};

// Evaluates x (counted) and tests membership in the set.
bool in_optimal_set(Problem& problem, const OptimalSet& set, std::span<const double> x);

}  // namespace metaopt::problems
