#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "metaopt/firefly.hpp"

namespace metaopt::chaos {

using firefly::ScalarMap;

// Raised when an orbit leaves the finite doubles.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t step, double value);
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

// Post-transient orbit u_{discard+1} .. u_n of u_{t+1} = f(u_t).
// Requires n > discard.
std::vector<double> iterate_map(const ScalarMap& map, double u0, std::size_t n,
                                std::size_t discard);

// Steps whose |f'(u_t)| falls below this are skipped by the estimator.
inline constexpr double kDerivativeFloor = 1e-300;

// Mean of ln|f'(u_t)| over the post-transient orbit. If every step lands
// on a critical point (a superstable orbit hit exactly) the estimate is
// ln(kDerivativeFloor). Requires n - discard >= 1000.
double lyapunov_exponent(const ScalarMap& map, double u0, std::size_t n, std::size_t discard);

// Same estimator over an already computed orbit.
double lyapunov_of_orbit(const ScalarMap& map, const std::vector<double>& orbit);

enum class OrbitKind { fixed_point, periodic, chaotic, unresolved };

std::string_view to_string(OrbitKind kind);

inline constexpr double kChaosThreshold = 0.01;

struct OrbitSummary {
    OrbitKind kind = OrbitKind::unresolved;
    double fixed_point = 0.0;      // valid for fixed_point
    std::size_t period = 1;        // >= 2 for periodic
    std::vector<double> cycle;     // the last `period` orbit values
    double lyapunov = 0.0;
    std::vector<double> samples;   // post-transient orbit
};

struct OrbitOptions {
    double tol = 1e-6;
    std::size_t max_period = 64;
    std::size_t n = 1500;
    std::size_t discard = 500;
};

// Fixed point if the post-transient orbit varies by less than tol (and
// |f(u*) - u*| < tol); otherwise periodic with the smallest k <= max_period
// such that the orbit is k-cyclic within tol; otherwise chaotic when the
// Lyapunov estimate exceeds kChaosThreshold; otherwise unresolved.
OrbitSummary classify_orbit(const ScalarMap& map, double u0, const OrbitOptions& options = {});

using MapFamily = std::function<ScalarMap(double)>;

struct BifurcationScan {
    std::string parameter_name;
    std::vector<double> grid;
    std::vector<std::vector<double>> samples;  // samples[i].size() is uniform
    std::vector<double> lyapunov;
    // Set for grid points whose orbit diverged; their samples are NaN.
    std::vector<std::optional<std::string>> errors;
};

struct ScanOptions {
    std::size_t n = 1500;
    std::size_t discard = 500;
    std::size_t samples = 200;
    // Record |u| to fold the odd firefly map's mirror-image attractors.
    bool fold_abs = false;
};

// Iterates map(p) from u0 for each p in the (strictly ascending) grid.
BifurcationScan bifurcation_scan(const MapFamily& family, std::string parameter_name,
                                 std::vector<double> grid, double u0,
                                 const ScanOptions& options = {});

// Parses "lo:hi:step" into lo, lo + step, ... up to hi inclusive (a point
// within 1e-9 steps of hi counts). "0:4.5:0.01" has 451 points.
std::vector<double> parse_grid(const std::string& spec);
std::vector<double> make_grid(double lo, double hi, double step);

// Number of clusters among the values when gaps larger than tol separate
// clusters; NaNs are ignored.
std::size_t distinct_values(std::vector<double> values, double tol);

// First grid parameter with Lyapunov estimate above the threshold.
std::optional<double> first_chaotic_parameter(const BifurcationScan& scan,
                                              double threshold = kChaosThreshold);

}  // namespace metaopt::chaos
