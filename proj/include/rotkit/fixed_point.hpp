#pragma once

#include <optional>

#include "rotkit/maps.hpp"

namespace rotkit {

enum class SolveMethod { Picard, Bisection, Hybrid };
const char* to_string(SolveMethod m);

/// Emitted when every observed step contracted: |x_{k+1} - x_k| <=
/// rate * |x_k - x_{k-1}| with rate < 1. Then |x_m - x_n| <=
/// rate^n * initial_gap / (1 - rate) for all recorded n < m.
struct ConvergenceCertificate {
  double rate = 0.0;         // max observed step ratio, in [0, 1)
  double initial_gap = 0.0;  // |f(x0) - x0|
  double tail_bound_at_termination = 0.0;
};

struct FixedPointResult {
  double x_star = 0.0;
  double residual = 0.0;  // |f(x_star) - x_star|
  long iterations = 0;
  SolveMethod method = SolveMethod::Picard;
  std::optional<ConvergenceCertificate> certificate;
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr long kDefaultMaxIter = 1000000;

/// rate^n * initial_gap / (1 - rate), the uniform bound on all later orbit
/// displacements past step n under stepwise contraction by rate.
/// Throws InvalidRate unless 0 < rate < 1.
double tail_bound(double rate, long n, double initial_gap);

/// Iterates x_{k+1} = f(x_k) until the step and the residual both drop below
/// tol (step relative to max(1, |x|), residual absolute). Tracks the largest
/// observed step ratio and attaches a certificate when all ratios stayed
/// below 1. Throws NoConvergence on max_iter, persistent non-contraction, or
/// a non-finite iterate.
FixedPointResult picard_solve(const MapSpec& m, double x0,
                              double tol = kDefaultTol,
                              long max_iter = kDefaultMaxIter);

/// Standard bisection on g(x) = f(x) - x. Requires a sign change (or a zero)
/// at the bracket endpoints; throws NoSignChange otherwise. Halves until the
/// bracket is below tol and the midpoint residual is too.
FixedPointResult bisection_solve(const MapSpec& m, double lo, double hi,
                                 double tol = kDefaultTol);

/// Hybrid strategy: scan a finite window for a sign change of g and bisect;
/// otherwise run Picard from a fixed seed order (window midpoint, endpoints,
/// 0 when in the domain), switching to bisection the moment consecutive
/// iterates straddle a root of g. Unbounded domains are scanned on
/// [-1e6, 1e6] with 8192 samples, widening tenfold up to 1e12 before giving
/// up. Throws NotFound when everything is exhausted.
FixedPointResult solve(const MapSpec& m, double tol = kDefaultTol);

struct FixedPointCheck {
  bool fixed = false;
  double residual = 0.0;
};

FixedPointCheck verify_fixed_point(const MapSpec& m, double x, double tol);

}  // namespace rotkit
