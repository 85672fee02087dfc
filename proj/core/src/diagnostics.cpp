#include "metaopt/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace metaopt::diagnostics {

ExponentFit fit_power_law(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("fit_power_law: size mismatch");
    }
    if (xs.size() < 3) {
        throw std::invalid_argument("fit_power_law: need at least 3 points");
    }
    const std::size_t n = xs.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
            throw std::domain_error("fit_power_law: values must be positive");
        }
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0.0) {
        throw std::domain_error("fit_power_law: x values are all equal");
    }
    ExponentFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
    fit.points = n;
    fit.reliable = fit.r_squared >= 0.95;
    return fit;
}

std::vector<EnsembleMoment> ensemble_moments(std::span<const std::vector<double>> walks,
                                             std::span<const std::size_t> checkpoints) {
    if (walks.empty()) throw std::invalid_argument("ensemble_moments: no walks");
    std::vector<EnsembleMoment> out;
    out.reserve(checkpoints.size());
    const double n = static_cast<double>(walks.size());
    for (std::size_t step : checkpoints) {
        double mean = 0.0;
        double msd = 0.0;
        for (const auto& w : walks) {
            if (step >= w.size()) {
                throw std::invalid_argument("ensemble_moments: checkpoint beyond walk length");
            }
            mean += w[step];
            const double disp = w[step] - w.front();
            msd += disp * disp;
        }
        mean /= n;
        msd /= n;
        double ss = 0.0;
        double largest = 0.0;
        for (const auto& w : walks) {
            const double dev = (w[step] - mean) * (w[step] - mean);
            ss += dev;
            largest = std::max(largest, dev);
        }
        EnsembleMoment m;
        m.step = step;
        m.variance = ss / (n - 1.0 > 0.0 ? n - 1.0 : 1.0);
        m.mean_square = msd;
        m.max_share = ss > 0.0 ? largest / ss : 0.0;
        out.push_back(m);
    }
    return out;
}

namespace {

void check_growth_inputs(std::span<const std::vector<double>> walks,
                         std::span<const std::size_t> checkpoints) {
    if (walks.size() < 100) {
        throw std::invalid_argument("growth exponent: need at least 100 walks");
    }
    if (checkpoints.size() < 3) {
        throw std::invalid_argument("growth exponent: need at least 3 checkpoints");
    }
    const auto [lo, hi] = std::minmax_element(checkpoints.begin(), checkpoints.end());
    if (*lo == 0 || static_cast<double>(*hi) < 100.0 * static_cast<double>(*lo)) {
        throw std::invalid_argument("growth exponent: checkpoints must span two decades");
    }
}

ExponentFit growth_fit(std::span<const std::vector<double>> walks,
                       std::span<const std::size_t> checkpoints,
                       double EnsembleMoment::*field, const char* what) {
    check_growth_inputs(walks, checkpoints);
    const auto moments = ensemble_moments(walks, checkpoints);
    std::vector<double> xs, ys;
    double worst_share = 0.0;
    for (const auto& m : moments) {
        if (!(m.*field > 0.0)) {
            throw std::domain_error(std::string(what) + " is zero at step " +
                                    std::to_string(m.step) + " (degenerate ensemble)");
        }
        xs.push_back(static_cast<double>(m.step));
        ys.push_back(m.*field);
        worst_share = std::max(worst_share, m.max_share);
    }
    ExponentFit fit = fit_power_law(xs, ys);
    fit.reliable = fit.reliable && worst_share <= 0.1;
    return fit;
}

}  // namespace

ExponentFit variance_growth_exponent(std::span<const std::vector<double>> walks,
                                     std::span<const std::size_t> checkpoints) {
    return growth_fit(walks, checkpoints, &EnsembleMoment::variance, "variance");
}

ExponentFit msd_growth_exponent(std::span<const std::vector<double>> walks,
                                std::span<const std::size_t> checkpoints) {
    return growth_fit(walks, checkpoints, &EnsembleMoment::mean_square, "mean-square displacement");
}

double tail_index(std::span<const double> magnitudes, std::size_t k) {
    if (k < 50) throw std::invalid_argument("tail_index: k must be >= 50");
    if (k > magnitudes.size() / 10) {
        throw std::invalid_argument("tail_index: k must be <= n / 10");
    }
    std::vector<double> positive;
    positive.reserve(magnitudes.size());
    for (double m : magnitudes) {
        if (m > 0.0 && std::isfinite(m)) positive.push_back(m);
    }
    if (positive.size() < k + 1) {
        throw std::invalid_argument("tail_index: fewer than k + 1 positive samples");
    }
    std::nth_element(positive.begin(), positive.begin() + static_cast<std::ptrdiff_t>(k),
                     positive.end(), std::greater<>());
    const double threshold = positive[k];
    double h = 0.0;
    for (std::size_t i = 0; i < k; ++i) h += std::log(positive[i] / threshold);
    h /= static_cast<double>(k);
    return 1.0 + 1.0 / h;
}

double tail_index(std::span<const double> magnitudes) {
    return tail_index(magnitudes, magnitudes.size() / 20);
}

ReferenceDistribution beta_half_reference() {
    return {"beta(0.5,0.5)",
            [](double u) { return 2.0 / std::numbers::pi * std::asin(std::sqrt(u)); }};
}

ReferenceDistribution uniform_reference() {
    return {"uniform(0,1)", [](double u) { return u; }};
}

DensityTest density_test(std::span<const double> samples, const ReferenceDistribution& reference,
                         std::size_t bins) {
    if (samples.size() < 10000) {
        throw std::invalid_argument("density_test: need at least 1e4 samples");
    }
    if (bins < 10) throw std::invalid_argument("density_test: need at least 10 bins");
    std::vector<std::size_t> counts(bins, 0);
    for (double u : samples) {
        if (!(u > 0.0 && u < 1.0)) {
            throw std::domain_error("density_test: sample " + std::to_string(u) +
                                    " outside (0, 1)");
        }
        const double p = reference.cdf(u);
        auto b = static_cast<std::size_t>(p * static_cast<double>(bins));
        counts[std::min(b, bins - 1)]++;
    }
    const double expected = static_cast<double>(samples.size()) / static_cast<double>(bins);
    DensityTest test;
    for (std::size_t c : counts) {
        const double diff = static_cast<double>(c) - expected;
        test.statistic += diff * diff / expected;
    }
    test.bins = bins;
    boost::math::chi_squared dist(static_cast<double>(bins - 1));
    test.critical = boost::math::quantile(dist, 0.99);
    test.pass = test.statistic < test.critical;
    return test;
}

namespace {

// sqrt(-ln(alpha / 2) / 2) at alpha = 0.01.
const double kKsCoefficient = std::sqrt(-0.5 * std::log(0.005));

}  // namespace

KsTest ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_test: no samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    KsTest test;
    test.statistic = d;
    test.critical = kKsCoefficient / std::sqrt(n);
    test.pass = d < test.critical;
    return test;
}

KsTest ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double n = static_cast<double>(x.size());
    const double m = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) ++i;
        while (j < y.size() && y[j] == v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
    }
    KsTest test;
    test.statistic = d;
    test.critical = kKsCoefficient * std::sqrt((n + m) / (n * m));
    test.pass = d < test.critical;
    return test;
}

std::size_t coverage_cells(std::span<const Vector> positions, double cell) {
    if (!(cell > 0.0)) throw std::invalid_argument("coverage_cells: cell must be > 0");
    std::set<std::vector<long long>> visited;
    for (const auto& x : positions) {
        std::vector<long long> key(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) {
            key[j] = static_cast<long long>(std::floor(x[j] / cell));
        }
        visited.insert(std::move(key));
    }
    return visited.size();
}

}  // namespace metaopt::diagnostics
