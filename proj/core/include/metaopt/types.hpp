#pragma once

#include <cstddef>
#include <vector>

namespace metaopt {

using Vector = std::vector<double>;

struct Interval {
    double lo;
    double hi;

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

using Bounds = std::vector<Interval>;

}  // namespace metaopt
