#include "rotkit/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rotkit/sampling.hpp"

namespace rotkit {

namespace {

constexpr int kScanSamples = 8192;
constexpr double kScanWindow = 1e6;
constexpr double kScanWindowCap = 1e12;
constexpr int kDivergenceStreakLimit = 64;

int sign(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

struct PicardOutcome {
  bool converged = false;
  FixedPointResult result;
  bool bracket_found = false;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// Core iteration shared by picard_solve and solve. With detect_bracket set,
// stops as soon as g(x) = f(x) - x flips sign between consecutive iterates
// and reports that bracket instead of failing.
PicardOutcome picard_core(const MapSpec& m, double x0, double tol, long max_iter,
                          bool detect_bracket) {
  PicardOutcome out;
  if (max_iter < 1) raise(ErrorCode::NoConvergence, "no iterations allowed");

  double prev = x0;          // x_{k-1}
  double cur = eval(m, x0);  // x_k
  long applications = 1;
  double d1 = std::abs(cur - prev);
  double max_ratio = 0.0;
  bool have_ratio = false;
  bool contracted_throughout = true;
  int divergence_streak = 0;

  for (;;) {
    if (applications >= max_iter) {
      raise(ErrorCode::NoConvergence, "iteration limit reached");
    }
    double step = cur - prev;  // g(x_{k-1})
    if (std::abs(step) <= tol * std::max(1.0, std::abs(prev))) {
      double fx = eval(m, cur);
      ++applications;
      double residual = std::abs(fx - cur);
      if (residual <= tol) {
        out.converged = true;
        out.result.x_star = cur;
        out.result.residual = residual;
        out.result.iterations = applications - 1;
        out.result.method = SolveMethod::Picard;
        if (have_ratio && contracted_throughout) {
          double tail = max_ratio > 0.0
                            ? tail_bound(max_ratio, out.result.iterations, d1)
                            : 0.0;
          out.result.certificate = ConvergenceCertificate{max_ratio, d1, tail};
        }
        return out;
      }
      // Step was small but the residual is not there yet; keep iterating
      // using the evaluation just made.
      double next_step = fx - cur;
      if (std::abs(step) > 0.0) {
        double ratio = std::abs(next_step) / std::abs(step);
        max_ratio = std::max(max_ratio, ratio);
        have_ratio = true;
        if (ratio >= 1.0) contracted_throughout = false;
      }
      prev = cur;
      cur = fx;
      continue;
    }

    double next = eval(m, cur);
    ++applications;
    if (!std::isfinite(next)) {
      raise(ErrorCode::NoConvergence, "orbit left the finite range");
    }
    double next_step = next - cur;  // g(x_k)

    if (detect_bracket && sign(step) * sign(next_step) < 0) {
      out.bracket_found = true;
      out.bracket_lo = std::min(prev, cur);
      out.bracket_hi = std::max(prev, cur);
      return out;
    }

    double ratio = std::abs(next_step) / std::abs(step);
    max_ratio = std::max(max_ratio, ratio);
    have_ratio = true;
    if (ratio >= 1.0) {
      contracted_throughout = false;
      if (++divergence_streak >= kDivergenceStreakLimit) {
        raise(ErrorCode::NoConvergence, "steps stopped contracting");
      }
    } else {
      divergence_streak = 0;
    }

    prev = cur;
    cur = next;
  }
}

struct ScanOutcome {
  bool hit = false;  // a sample already satisfies the residual tolerance
  double hit_x = 0.0;
  double hit_residual = 0.0;
  bool bracket_found = false;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

ScanOutcome scan_for_bracket(const MapSpec& m, double lo, double hi, double tol) {
  ScanOutcome out;
  auto xs = uniform_grid(lo, hi, kScanSamples);
  double prev_x = 0.0;
  double prev_g = 0.0;
  bool have_prev = false;
  for (double x : xs) {
    double g = eval(m, x) - x;
    if (std::abs(g) <= tol) {
      out.hit = true;
      out.hit_x = x;
      out.hit_residual = std::abs(g);
      return out;
    }
    if (have_prev && sign(prev_g) * sign(g) < 0) {
      out.bracket_found = true;
      out.bracket_lo = prev_x;
      out.bracket_hi = x;
      return out;
    }
    prev_x = x;
    prev_g = g;
    have_prev = true;
  }
  return out;
}

std::pair<double, double> scan_window(const ClosedInterval& domain, double reach) {
  double lo = std::max(domain.lo(), -reach);
  double hi = std::min(domain.hi(), reach);
  if (lo > hi) {
    // Domain entirely outside the window: take a slab at its finite end.
    if (std::isfinite(domain.lo())) {
      lo = domain.lo();
      hi = std::min(domain.hi(), lo + 2.0 * reach);
    } else {
      hi = domain.hi();
      lo = std::max(domain.lo(), hi - 2.0 * reach);
    }
  }
  return {lo, hi};
}

}  // namespace

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Picard: return "picard";
    case SolveMethod::Bisection: return "bisection";
    default: return "hybrid";
  }
}

double tail_bound(double rate, long n, double initial_gap) {
  if (!(rate > 0.0 && rate < 1.0)) {
    raise(ErrorCode::InvalidRate, "tail bound needs a rate in (0, 1)");
  }
  if (n < 0 || initial_gap < 0.0) {
    raise(ErrorCode::InvalidParameters, "tail bound needs n >= 0 and a nonnegative gap");
  }
  return std::pow(rate, static_cast<double>(n)) * initial_gap / (1.0 - rate);
}

FixedPointResult picard_solve(const MapSpec& m, double x0, double tol, long max_iter) {
  if (tol <= 0.0) raise(ErrorCode::InvalidParameters, "tolerance must be positive");
  auto out = picard_core(m, x0, tol, max_iter, /*detect_bracket=*/false);
  return out.result;  // picard_core throws NoConvergence otherwise
}

FixedPointResult bisection_solve(const MapSpec& m, double lo, double hi, double tol) {
  if (tol <= 0.0) raise(ErrorCode::InvalidParameters, "tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);

  auto g = [&m](double x) { return eval(m, x) - x; };
  double glo = g(lo);
  double ghi = g(hi);
  FixedPointResult result;
  result.method = SolveMethod::Bisection;
  if (glo == 0.0) {
    result.x_star = lo;
    return result;
  }
  if (ghi == 0.0) {
    result.x_star = hi;
    return result;
  }
  if (sign(glo) == sign(ghi)) {
    raise(ErrorCode::NoSignChange, "f(x) - x has the same sign at both bracket ends");
  }

  double mid = lo;
  double gmid = glo;
  long halvings = 0;
  for (;;) {
    double next = 0.5 * (lo + hi);
    if (next <= lo || next >= hi) break;  // no representable midpoint left
    mid = next;
    gmid = g(mid);
    ++halvings;
    if (gmid == 0.0) break;
    if (sign(gmid) == sign(glo)) {
      lo = mid;
      glo = gmid;
    } else {
      hi = mid;
      ghi = gmid;
    }
    if (hi - lo <= tol && std::abs(gmid) <= tol) break;
  }

  result.x_star = mid;
  result.residual = std::abs(gmid);
  result.iterations = halvings;
  if (result.residual > tol) {
    raise(ErrorCode::NoConvergence,
          "bracket exhausted machine precision with residual " +
              std::to_string(result.residual));
  }
  return result;
}

FixedPointResult solve(const MapSpec& m, double tol) {
  if (is_q_indicator(m)) {
    raise(ErrorCode::WrongPointKind, "the solver needs a map evaluable on plain reals");
  }
  if (tol <= 0.0) raise(ErrorCode::InvalidParameters, "tolerance must be positive");

  bool window_can_grow = !m.domain.bounded();
  for (double reach = kScanWindow; reach <= kScanWindowCap; reach *= 10.0) {
    auto [lo, hi] = scan_window(m.domain, reach);

    auto scan = scan_for_bracket(m, lo, hi, tol);
    if (scan.hit) {
      FixedPointResult result;
      result.x_star = scan.hit_x;
      result.residual = scan.hit_residual;
      result.method = SolveMethod::Hybrid;
      return result;
    }
    if (scan.bracket_found) {
      try {
        return bisection_solve(m, scan.bracket_lo, scan.bracket_hi, tol);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoConvergence) throw;
        // fall through to the iteration strategies
      }
    }

    // Seed priority: window midpoint, endpoints, then 0. First success wins.
    std::vector<double> seeds{0.5 * (lo + hi), lo, hi};
    if (m.domain.contains(0.0)) seeds.push_back(0.0);
    for (double seed : seeds) {
      try {
        auto out = picard_core(m, seed, tol, kDefaultMaxIter, /*detect_bracket=*/true);
        if (out.converged) return out.result;
        if (out.bracket_found) {
          auto result = bisection_solve(m, out.bracket_lo, out.bracket_hi, tol);
          result.method = SolveMethod::Hybrid;
          return result;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoConvergence && e.code() != ErrorCode::NoSignChange) {
          throw;
        }
      }
    }

    if (!window_can_grow) break;
  }
  raise(ErrorCode::NotFound, "no fixed point located by scan, iteration or bracketing");
}

FixedPointCheck verify_fixed_point(const MapSpec& m, double x, double tol) {
  double residual = std::abs(eval(m, x) - x);
  return {residual <= tol, residual};
}

}  // namespace rotkit
