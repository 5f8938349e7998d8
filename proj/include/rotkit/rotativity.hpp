#pragma once

#include <complex>
#include <optional>
#include <span>

#include "rotkit/maps.hpp"
#include "rotkit/rational.hpp"

namespace rotkit {

/// |f(x) - x| below this counts as a fixed point; the n-step ratio is
/// undefined (vacuously bounded) there.
inline constexpr double kRatioDenomEps = 1e-12;

/// A grid supremum is a lower bound on the true one, so a numeric "yes"
/// needs this much daylight below n; anything closer stays "unknown".
inline constexpr double kNumericDecisionMargin = 1e-6;

enum class Decision { Yes, No, Unknown };
enum class DecisionBasis { Analytic, Numeric };

const char* to_string(Decision d);
const char* to_string(DecisionBasis b);

struct AnalyticRotativity {
  double exact_sup = 0.0;  // may be +inf
  bool rotative = false;
};

struct RotativityReport {
  int n = 2;
  double estimated_sup = 0.0;  // 0 when every grid ratio was undefined
  Decision decision = Decision::Unknown;
  DecisionBasis basis = DecisionBasis::Numeric;
  std::optional<AnalyticRotativity> analytic;
  std::optional<double> witness;  // argmax (or violating) point
};

struct LipschitzReport {
  double estimated_k = 0.0;
  std::optional<double> analytic_k;
  double witness_x = 0.0;
  double witness_y = 0.0;
};

/// |f^n(x) - x| / |f(x) - x|; nullopt at (numerical) fixed points.
std::optional<double> rotativity_ratio(const MapSpec& m, double x, int n);
std::optional<double> rotativity_ratio(const QIndicatorMap& m, TaggedPoint p, int n);

/// Maximizes rotativity_ratio over the grid. The reduction keeps the larger
/// ratio and breaks ties toward the smaller witness, so any partitioning of
/// the grid yields the same report. Decision is the three-valued numeric one.
RotativityReport estimate_rotativity_constant(const MapSpec& m, int n,
                                              std::span<const double> grid);

struct AffineCriterionResult {
  bool rotative = false;
  double sup_ratio = 0.0;
};

/// Exact n-rotativity test for f(x) = c*x + x0: the n-step ratio is the
/// constant |1 + c + ... + c^(n-1)|, so f is n-rotative iff that value is
/// below n. For c == 1 the orbit translates by x0, hence rotative iff x0 == 0
/// (reported sup: 0 in that case, n otherwise).
AffineCriterionResult affine_rotativity_criterion(std::complex<double> c, double x0, int n);
AffineCriterionResult affine_rotativity_criterion(double c, double x0, int n);

/// Strict threshold test b1 > (n*c2 - c1)/(n - 1), equivalent to
/// pwl_exact_sup_ratio < n.
bool pwl_rotativity_criterion(double c1, double c2, double b1, double b2, int n);
bool pwl_rotativity_criterion(const Rational& c1, const Rational& c2,
                              const Rational& b1, const Rational& b2, int n);
/// Uses the exact rational parameters when the map carries them.
bool pwl_rotativity_criterion(const ThreeSegmentMap& m, int n);

/// 1 + (c2 - c1)/(b1 - c2): the supremum of the pointwise ratio envelope
/// (see pwl_ratio_envelope) over x > b1. Finite and > 1 for valid parameters.
double pwl_exact_sup_ratio(double c1, double c2, double b1, double b2);
Rational pwl_exact_sup_ratio(const Rational& c1, const Rational& c2,
                             const Rational& b1, const Rational& b2);
double pwl_exact_sup_ratio(const ThreeSegmentMap& m);

/// Pointwise upper bound on every n-step ratio (n >= 2) of a three-segment
/// map: 1 for x <= b1 and (x - c1)/(x - c2) for x > b1. Orbit ratios touch
/// the envelope only from b2 onward, so their maximum is its value at b2.
double pwl_ratio_envelope(const ThreeSegmentMap& m, double x);

struct QIndicatorRotativity {
  bool rotative = false;
  double constant = 0.0;          // valid bound when rotative (odd n): 1
  std::optional<double> witness;  // violating point for even n
  double witness_ratio = 0.0;     // ratio at the witness (equals n)
};

/// Odd n: every ratio is exactly 1, so (n,1)-rotativity holds. Even n: the
/// point (n*b - c)/(n - 1) is irrational and realizes ratio n, defeating
/// every admissible constant.
QIndicatorRotativity qindicator_rotativity(const QIndicatorMap& m, int n);

/// Max difference quotient over adjacent grid pairs, plus the closed-form
/// constant for the families that have one.
LipschitzReport lipschitz_estimate(const MapSpec& m, std::span<const double> grid);

/// Grid estimate combined with the family's exact criterion where one
/// exists; the exact decision wins when present.
RotativityReport analyze_rotativity(const MapSpec& m, int n);
RotativityReport analyze_rotativity(const MapSpec& m, int n, std::span<const double> grid);

/// nullopt for QIndicatorMap (not evaluable on plain reals, and not
/// Lipschitzian anyway).
std::optional<LipschitzReport> analyze_lipschitz(const MapSpec& m);

}  // namespace rotkit
