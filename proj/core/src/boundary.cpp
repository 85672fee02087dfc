#include "metaopt/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace metaopt {

void apply_boundary(BoundaryPolicy policy, const Bounds& bounds, std::span<double> x) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        const auto [lo, hi] = bounds[j];
        if (lo <= x[j] && x[j] <= hi) continue;
        if (policy == BoundaryPolicy::clamp || !std::isfinite(x[j])) {
            x[j] = std::clamp(x[j], lo, hi);
            continue;
        }
        // Fold onto a sawtooth of period 2 * width.
        const double width = hi - lo;
        double r = std::fmod(x[j] - lo, 2.0 * width);
        if (r < 0.0) r += 2.0 * width;
        x[j] = r <= width ? lo + r : hi - (r - width);
    }
}

std::string_view to_string(BoundaryPolicy policy) {
    return policy == BoundaryPolicy::clamp ? "clamp" : "reflect";
}

BoundaryPolicy parse_boundary_policy(std::string_view name) {
    if (name == "clamp") return BoundaryPolicy::clamp;
    if (name == "reflect") return BoundaryPolicy::reflect;
    throw std::invalid_argument("unknown boundary policy '" + std::string(name) +
                                "' (expected clamp or reflect)");
}

}  // namespace metaopt
