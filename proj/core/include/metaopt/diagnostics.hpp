#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "metaopt/trajectory.hpp"

namespace metaopt::diagnostics {

// Least-squares fit of log y = intercept + exponent * log x.
struct ExponentFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t points = 0;
    // False when r^2 < 0.95 or, for ensemble fits, when a single walk
    // carries more than 10% of the spread at some checkpoint (the
    // signature of heavy-tailed steps).
    bool reliable = true;
};

// Requires >= 3 points with x, y > 0.
ExponentFit fit_power_law(std::span<const double> xs, std::span<const double> ys);

struct EnsembleMoment {
    std::size_t step = 0;
    double variance = 0.0;          // central variance across walks
    double mean_square = 0.0;       // E[(x_N - x_0)^2]
    double max_share = 0.0;         // largest single-walk share of the variance
};

// Moments of x_N across the ensemble for each checkpoint N. Each walk is
// a position sequence x_0 .. x_steps.
std::vector<EnsembleMoment> ensemble_moments(std::span<const std::vector<double>> walks,
                                             std::span<const std::size_t> checkpoints);

// Growth exponent of the central variance. Requires >= 100 walks and
// >= 3 checkpoints spanning >= 2 decades; throws std::domain_error on a
// zero-variance checkpoint.
ExponentFit variance_growth_exponent(std::span<const std::vector<double>> walks,
                                     std::span<const std::size_t> checkpoints);

// Growth exponent of the mean-square displacement E[(x_N - x_0)^2], which
// keeps the ballistic |v0|^2 t^2 term of a drifting walk visible.
ExponentFit msd_growth_exponent(std::span<const std::vector<double>> walks,
                                std::span<const std::size_t> checkpoints);

// Hill estimate of the density tail exponent 1 + beta from the k largest
// magnitudes (survival ~ s^-beta). Requires 50 <= k <= n / 10 and at least
// k + 1 positive samples.
double tail_index(std::span<const double> magnitudes, std::size_t k);
// Uses k = n / 20.
double tail_index(std::span<const double> magnitudes);

// A reference law on (0, 1) given by its CDF; bins of equal reference
// probability are [F^-1(i/b), F^-1((i+1)/b)), so only F is needed.
struct ReferenceDistribution {
    std::string name;
    std::function<double(double)> cdf;
};

ReferenceDistribution beta_half_reference();  // Beta(1/2, 1/2): (2/pi) asin(sqrt(u))
ReferenceDistribution uniform_reference();

struct DensityTest {
    double statistic = 0.0;
    double critical = 0.0;  // 1% upper quantile of chi-square(bins - 1)
    std::size_t bins = 0;
    bool pass = false;
};

// Chi-square goodness of fit over equal-probability bins. Requires
// >= 1e4 samples, bins >= 10, every sample in (0, 1).
DensityTest density_test(std::span<const double> samples, const ReferenceDistribution& reference,
                         std::size_t bins);

struct KsTest {
    double statistic = 0.0;
    double critical = 0.0;  // asymptotic 1% critical value
    bool pass = false;
};

KsTest ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);
KsTest ks_two_sample(std::span<const double> a, std::span<const double> b);

// Number of distinct cubic cells of side `cell` visited by a path.
std::size_t coverage_cells(std::span<const Vector> positions, double cell);

// CSV: run_id,seed,evaluations,t,x0..x{d-1},f,f_best, one row per
// checkpoint, 17 significant digits, LF line endings.
void write_trajectory_csv(const TrajectoryRecord& record, std::ostream& out);
TrajectoryRecord read_trajectory_csv(std::istream& in);

// File variants; I/O failures raise std::runtime_error naming the path.
void export_trajectory(const TrajectoryRecord& record, const std::filesystem::path& path);
TrajectoryRecord import_trajectory(const std::filesystem::path& path);

}  // namespace metaopt::diagnostics
