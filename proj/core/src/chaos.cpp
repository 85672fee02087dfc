#include "metaopt/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace metaopt::chaos {

DivergenceError::DivergenceError(std::size_t step, double value)
    : std::runtime_error("orbit diverged at step " + std::to_string(step) + " (u = " +
                         std::to_string(value) + ")"),
      step_(step) {}

std::vector<double> iterate_map(const ScalarMap& map, double u0, std::size_t n,
                                std::size_t discard) {
    if (!(n > discard)) {
        throw std::invalid_argument("iterate_map: require n > discard");
    }
    if (!std::isfinite(u0)) throw DivergenceError(0, u0);
    std::vector<double> orbit;
    orbit.reserve(n - discard);
    double u = u0;
    for (std::size_t t = 1; t <= n; ++t) {
        u = map(u);
        if (!std::isfinite(u)) throw DivergenceError(t, u);
        if (t > discard) orbit.push_back(u);
    }
    return orbit;
}

double lyapunov_of_orbit(const ScalarMap& map, const std::vector<double>& orbit) {
    double sum = 0.0;
    std::size_t used = 0;
    for (double u : orbit) {
        const double slope = std::abs(map.derivative(u));
        if (slope < kDerivativeFloor) continue;
        sum += std::log(slope);
        ++used;
    }
    if (used == 0) return std::log(kDerivativeFloor);
    return sum / static_cast<double>(used);
}

double lyapunov_exponent(const ScalarMap& map, double u0, std::size_t n, std::size_t discard) {
    if (n < discard + 1000) {
        throw std::invalid_argument("lyapunov_exponent: need n - discard >= 1000");
    }
    return lyapunov_of_orbit(map, iterate_map(map, u0, n, discard));
}

std::string_view to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::fixed_point: return "fixed_point";
        case OrbitKind::periodic: return "periodic";
        case OrbitKind::chaotic: return "chaotic";
        case OrbitKind::unresolved: return "unresolved";
    }
    return "unresolved";
}

namespace {

bool is_k_cyclic(const std::vector<double>& orbit, std::size_t k, double tol) {
    for (std::size_t i = k; i < orbit.size(); ++i) {
        if (!(std::abs(orbit[i] - orbit[i - k]) < tol)) return false;
    }
    return true;
}

}  // namespace

OrbitSummary classify_orbit(const ScalarMap& map, double u0, const OrbitOptions& options) {
    if (!(options.tol > 0.0)) {
        throw std::invalid_argument("classify_orbit: tol must be > 0");
    }
    if (options.max_period < 1) {
        throw std::invalid_argument("classify_orbit: max_period must be >= 1");
    }
    if (options.n < options.discard + 4 * options.max_period) {
        throw std::invalid_argument("classify_orbit: need n - discard >= 4 * max_period");
    }

    OrbitSummary summary;
    summary.samples = iterate_map(map, u0, options.n, options.discard);
    const auto& orbit = summary.samples;
    summary.lyapunov = lyapunov_of_orbit(map, orbit);

    const auto [lo, hi] = std::minmax_element(orbit.begin(), orbit.end());
    const double last = orbit.back();
    if (*hi - *lo < options.tol && std::abs(map(last) - last) < options.tol) {
        summary.kind = OrbitKind::fixed_point;
        summary.fixed_point = last;
        summary.cycle = {last};
        return summary;
    }
    for (std::size_t k = 2; k <= options.max_period; ++k) {
        if (is_k_cyclic(orbit, k, options.tol)) {
            summary.kind = OrbitKind::periodic;
            summary.period = k;
            summary.cycle.assign(orbit.end() - static_cast<std::ptrdiff_t>(k), orbit.end());
            return summary;
        }
    }
    summary.kind = summary.lyapunov > kChaosThreshold ? OrbitKind::chaotic : OrbitKind::unresolved;
    return summary;
}

BifurcationScan bifurcation_scan(const MapFamily& family, std::string parameter_name,
                                 std::vector<double> grid, double u0,
                                 const ScanOptions& options) {
    if (grid.empty()) {
        throw std::invalid_argument("bifurcation_scan: empty grid");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("bifurcation_scan: grid must be strictly ascending");
        }
    }
    if (!(options.n > options.discard) || options.samples > options.n - options.discard) {
        throw std::invalid_argument("bifurcation_scan: need samples <= n - discard");
    }

    BifurcationScan scan;
    scan.parameter_name = std::move(parameter_name);
    scan.grid = std::move(grid);
    scan.samples.reserve(scan.grid.size());
    for (double p : scan.grid) {
        const ScalarMap map = family(p);
        try {
            auto orbit = iterate_map(map, u0, options.n, options.discard);
            scan.lyapunov.push_back(lyapunov_of_orbit(map, orbit));
            std::vector<double> tail(orbit.end() - static_cast<std::ptrdiff_t>(options.samples),
                                     orbit.end());
            if (options.fold_abs) {
                for (double& u : tail) u = std::abs(u);
            }
            scan.samples.push_back(std::move(tail));
            scan.errors.emplace_back();
        } catch (const DivergenceError& e) {
            scan.lyapunov.push_back(std::numeric_limits<double>::quiet_NaN());
            scan.samples.emplace_back(options.samples, std::numeric_limits<double>::quiet_NaN());
            scan.errors.emplace_back(e.what());
        }
    }
    return scan;
}

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
        throw std::invalid_argument("grid: bounds and step must be finite");
    }
    if (!(step > 0.0)) throw std::invalid_argument("grid: step must be > 0");
    if (hi < lo) throw std::invalid_argument("grid: require lo <= hi");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = lo + static_cast<double>(i) * step;
    }
    return grid;
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> parts;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ':')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw std::invalid_argument("grid '" + spec + "': expected lo:hi:step");
        }
        parts.push_back(v);
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("grid '" + spec + "': expected lo:hi:step");
    }
    return make_grid(parts[0], parts[1], parts[2]);
}

std::size_t distinct_values(std::vector<double> values, double tol) {
    std::erase_if(values, [](double v) { return std::isnan(v); });
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    std::size_t clusters = 1;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] - values[i - 1] > tol) ++clusters;
    }
    return clusters;
}

std::optional<double> first_chaotic_parameter(const BifurcationScan& scan, double threshold) {
    for (std::size_t i = 0; i < scan.grid.size(); ++i) {
        if (scan.lyapunov[i] > threshold) return scan.grid[i];
    }
    return std::nullopt;
}

}  // namespace metaopt::chaos
