#include "rotkit/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace rotkit {

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count <= 0) return {};
  if (count == 1 || lo == hi) return {lo};
  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  double span = hi - lo;
  for (int i = 0; i < count; ++i) {
    double t = static_cast<double>(i) / (count - 1);
    out.push_back(i == count - 1 ? hi : lo + t * span);
  }
  return out;
}

void sort_unique(std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

namespace {

constexpr int kCorePoints = 4001;
constexpr int kTailPointsPerSide = 100;
constexpr int kClusterPoints = 200;
constexpr double kCoreHalfWidth = 100.0;
constexpr double kTailReach = 1e6;

void append_log_tail(std::vector<double>& grid, double edge, int sign) {
  // sign * 10^u from just past |edge| out to the tail reach
  double start = std::max(std::abs(edge), 1.0);
  if (start >= kTailReach) return;
  double u0 = std::log10(start);
  double u1 = std::log10(kTailReach);
  for (int k = 1; k <= kTailPointsPerSide; ++k) {
    double u = u0 + (u1 - u0) * k / kTailPointsPerSide;
    double x = sign * std::pow(10.0, u);
    if ((sign > 0 && x > edge) || (sign < 0 && x < edge)) grid.push_back(x);
  }
}

}  // namespace

std::vector<double> default_grid(const MapSpec& m) {
  if (is_q_indicator(m)) return {};
  const ClosedInterval& d = m.domain;

  double core_lo = std::max(d.lo(), -kCoreHalfWidth);
  double core_hi = std::min(d.hi(), kCoreHalfWidth);
  if (core_lo > core_hi) {
    // Domain lies entirely outside the default window; take a slab at its
    // finite end.
    if (std::isfinite(d.lo())) {
      core_lo = d.lo();
      core_hi = std::min(d.hi(), d.lo() + 2.0 * kCoreHalfWidth);
    } else {
      core_hi = d.hi();
      core_lo = std::max(d.lo(), d.hi() - 2.0 * kCoreHalfWidth);
    }
  }

  std::vector<double> grid = uniform_grid(core_lo, core_hi, kCorePoints);
  if (std::isinf(d.hi())) append_log_tail(grid, core_hi, +1);
  if (std::isinf(d.lo())) append_log_tail(grid, core_lo, -1);
  if (std::isfinite(d.lo())) grid.push_back(d.lo());
  if (std::isfinite(d.hi())) grid.push_back(d.hi());

  if (const auto* ts = std::get_if<ThreeSegmentMap>(&m.map)) {
    // Cluster inside (b1, b2], denser toward b1, with b2 included exactly:
    // the middle segment is where the ratio envelope peaks and where
    // difference quotients recover the full slope.
    double width = ts->b2 - ts->b1;
    for (int j = 1; j <= kClusterPoints; ++j) {
      double t = static_cast<double>(j) / kClusterPoints;
      double x = j == kClusterPoints ? ts->b2 : ts->b1 + width * t * t * t;
      if (d.contains(x)) grid.push_back(x);
    }
    if (d.contains(ts->b1)) grid.push_back(ts->b1);
    if (d.contains(ts->b2)) grid.push_back(ts->b2);
  } else if (const auto* pl = std::get_if<PolylineMap>(&m.map)) {
    for (const auto& [x, y] : pl->points) {
      if (d.contains(x)) grid.push_back(x);
    }
  }

  sort_unique(grid);
  return grid;
}

}  // namespace rotkit
