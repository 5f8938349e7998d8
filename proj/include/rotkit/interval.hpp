#pragma once

#include <cmath>
#include <limits>

#include "rotkit/errors.hpp"

namespace rotkit {

/// Nonempty closed interval of the real line. Endpoints may be infinite;
/// singletons [x, x] are allowed.
class ClosedInterval {
 public:
  ClosedInterval()
      : lo_(-std::numeric_limits<double>::infinity()),
        hi_(std::numeric_limits<double>::infinity()) {}

  ClosedInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi ||
        lo == std::numeric_limits<double>::infinity() ||
        hi == -std::numeric_limits<double>::infinity()) {
      raise(ErrorCode::InvalidParameters, "interval endpoints must satisfy lo <= hi and be nonempty");
    }
  }

  static ClosedInterval real_line() { return ClosedInterval(); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool bounded() const { return std::isfinite(lo_) && std::isfinite(hi_); }
  bool is_real_line() const { return std::isinf(lo_) && std::isinf(hi_); }

  double midpoint() const {
    if (bounded()) return 0.5 * (lo_ + hi_);
    if (std::isfinite(lo_)) return lo_;
    if (std::isfinite(hi_)) return hi_;
    return 0.0;
  }

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;

 private:
  double lo_;
  double hi_;
};

}  // namespace rotkit
