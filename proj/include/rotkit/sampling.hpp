#pragma once

#include <vector>

#include "rotkit/maps.hpp"

namespace rotkit {

/// count evenly spaced points covering [lo, hi], endpoints included.
std::vector<double> uniform_grid(double lo, double hi, int count);

void sort_unique(std::vector<double>& xs);

/// Default sampling plan for a map:
///   - 4001 uniform points on the domain clipped to [-100, 100],
///   - 100 log-spaced points per unbounded side reaching out to +/-1e6,
///   - finite domain endpoints and the map's breakpoints,
///   - for three-segment maps, 200 points packed into (b1, b2] with cubic
///     clustering toward b1 (b2 itself is always included).
/// Sorted and deduplicated. Empty for QIndicatorMap, which has no real grid.
std::vector<double> default_grid(const MapSpec& m);

}  // namespace rotkit
