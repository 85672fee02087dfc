#pragma once

#include <span>
#include <string_view>

#include "metaopt/types.hpp"

namespace metaopt {

enum class BoundaryPolicy { clamp, reflect };

// Maps x back into the box in place. `reflect` folds coordinates at the
// walls (repeatedly, so arbitrarily long steps land inside).
void apply_boundary(BoundaryPolicy policy, const Bounds& bounds, std::span<double> x);

std::string_view to_string(BoundaryPolicy policy);
// Throws std::invalid_argument for anything but "clamp" or "reflect".
BoundaryPolicy parse_boundary_policy(std::string_view name);

}  // namespace metaopt
