#include "rotkit/rotativity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rotkit/sampling.hpp"

namespace rotkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_order(int n) {
  if (n < 2) raise(ErrorCode::InvalidParameters, "rotativity order must be >= 2");
}

void check_pwl_params(double c1, double c2, double b1, double b2) {
  if (!(std::isfinite(c1) && std::isfinite(c2) && std::isfinite(b1) && std::isfinite(b2)) ||
      !(c1 < c2 && c2 < b1 && b1 < b2)) {
    raise(ErrorCode::InvalidParameters,
          "three-segment parameters must satisfy c1 < c2 < b1 < b2");
  }
}

void check_pwl_params(const Rational& c1, const Rational& c2, const Rational& b1,
                      const Rational& b2) {
  if (!(c1 < c2 && c2 < b1 && b1 < b2)) {
    raise(ErrorCode::InvalidParameters,
          "three-segment parameters must satisfy c1 < c2 < b1 < b2");
  }
}

Decision numeric_decision(double estimated_sup, int n) {
  if (estimated_sup >= static_cast<double>(n)) return Decision::No;
  if (estimated_sup <= static_cast<double>(n) - kNumericDecisionMargin) return Decision::Yes;
  return Decision::Unknown;
}

}  // namespace

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    default: return "unknown";
  }
}

const char* to_string(DecisionBasis b) {
  return b == DecisionBasis::Analytic ? "analytic" : "numeric";
}

std::optional<double> rotativity_ratio(const MapSpec& m, double x, int n) {
  require_order(n);
  double fx = eval(m, x);
  double denom = std::abs(fx - x);
  if (denom < kRatioDenomEps) return std::nullopt;
  double fnx = iterate(m, fx, n - 1);
  return std::abs(fnx - x) / denom;
}

std::optional<double> rotativity_ratio(const QIndicatorMap& m, TaggedPoint p, int n) {
  require_order(n);
  TaggedPoint f1 = eval(m, p);
  double denom = std::abs(f1.value - p.value);
  if (denom < kRatioDenomEps) return std::nullopt;
  TaggedPoint fn = f1;
  for (int k = 1; k < n; ++k) fn = eval(m, fn);
  return std::abs(fn.value - p.value) / denom;
}

RotativityReport estimate_rotativity_constant(const MapSpec& m, int n,
                                              std::span<const double> grid) {
  require_order(n);
  if (is_q_indicator(m)) {
    raise(ErrorCode::WrongPointKind,
          "grid estimation needs a map evaluable on plain reals");
  }
  if (grid.empty()) raise(ErrorCode::EmptyDomain, "sampling grid is empty");

  double best = 0.0;
  std::optional<double> witness;
  for (double x : grid) {
    if (!m.domain.contains(x)) continue;
    auto r = rotativity_ratio(m, x, n);
    if (!r) continue;
    // Larger ratio wins, ties keep the smaller point: an associative,
    // commutative reduction, so grid partitioning cannot change the result.
    if (!witness || *r > best || (*r == best && x < *witness)) {
      best = *r;
      witness = x;
    }
  }

  RotativityReport report;
  report.n = n;
  report.estimated_sup = witness ? best : 0.0;
  report.decision = numeric_decision(report.estimated_sup, n);
  report.basis = DecisionBasis::Numeric;
  report.witness = witness;
  return report;
}

AffineCriterionResult affine_rotativity_criterion(std::complex<double> c, double x0, int n) {
  require_order(n);
  if (c == std::complex<double>(1.0, 0.0)) {
    bool rotative = x0 == 0.0;
    return {rotative, rotative ? 0.0 : static_cast<double>(n)};
  }
  // |1 + c + ... + c^(n-1)|; summing keeps values near c == 1 stable.
  std::complex<double> sum = 0.0;
  std::complex<double> power = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= c;
  }
  double sup = std::abs(sum);
  return {sup < static_cast<double>(n), sup};
}

AffineCriterionResult affine_rotativity_criterion(double c, double x0, int n) {
  return affine_rotativity_criterion(std::complex<double>(c, 0.0), x0, n);
}

bool pwl_rotativity_criterion(double c1, double c2, double b1, double b2, int n) {
  require_order(n);
  check_pwl_params(c1, c2, b1, b2);
  return b1 > (n * c2 - c1) / (n - 1);
}

bool pwl_rotativity_criterion(const Rational& c1, const Rational& c2,
                              const Rational& b1, const Rational& b2, int n) {
  require_order(n);
  check_pwl_params(c1, c2, b1, b2);
  return b1 > (Rational(n) * c2 - c1) / Rational(n - 1);
}

bool pwl_rotativity_criterion(const ThreeSegmentMap& m, int n) {
  if (m.exact) {
    const auto& [c1, c2, b1, b2] = *m.exact;
    return pwl_rotativity_criterion(c1, c2, b1, b2, n);
  }
  return pwl_rotativity_criterion(m.c1, m.c2, m.b1, m.b2, n);
}

double pwl_exact_sup_ratio(double c1, double c2, double b1, double b2) {
  check_pwl_params(c1, c2, b1, b2);
  return 1.0 + (c2 - c1) / (b1 - c2);
}

Rational pwl_exact_sup_ratio(const Rational& c1, const Rational& c2,
                             const Rational& b1, const Rational& b2) {
  check_pwl_params(c1, c2, b1, b2);
  return Rational(1) + (c2 - c1) / (b1 - c2);
}

double pwl_exact_sup_ratio(const ThreeSegmentMap& m) {
  if (m.exact) {
    const auto& [c1, c2, b1, b2] = *m.exact;
    return to_double(pwl_exact_sup_ratio(c1, c2, b1, b2));
  }
  return pwl_exact_sup_ratio(m.c1, m.c2, m.b1, m.b2);
}

double pwl_ratio_envelope(const ThreeSegmentMap& m, double x) {
  check_pwl_params(m.c1, m.c2, m.b1, m.b2);
  if (x <= m.b1) return 1.0;
  return (x - m.c1) / (x - m.c2);
}

QIndicatorRotativity qindicator_rotativity(const QIndicatorMap& m, int n) {
  require_order(n);
  if (n % 2 == 1) {
    // Odd n lands f^n on the same value as f, so every ratio is exactly 1.
    return {true, 1.0, std::nullopt, 1.0};
  }
  // Even n: x = (n*b - c)/(n - 1) is irrational (rational combination of c),
  // and its n-step ratio computes to exactly n.
  double x = (n * m.b - m.c) / (n - 1);
  auto ratio = rotativity_ratio(m, TaggedPoint{x, PointClass::Irrational}, n);
  return {false, kInf, x, ratio.value_or(kInf)};
}

LipschitzReport lipschitz_estimate(const MapSpec& m, std::span<const double> grid) {
  if (is_q_indicator(m)) {
    raise(ErrorCode::WrongPointKind,
          "Lipschitz estimation needs a map evaluable on plain reals");
  }
  std::vector<double> xs(grid.begin(), grid.end());
  sort_unique(xs);
  std::erase_if(xs, [&m](double x) { return !m.domain.contains(x); });
  if (xs.size() < 2) {
    raise(ErrorCode::EmptyDomain, "Lipschitz estimation needs at least two grid points");
  }

  LipschitzReport report;
  double prev_x = xs.front();
  double prev_y = eval(m, prev_x);
  report.witness_x = xs[0];
  report.witness_y = xs[1];
  for (size_t i = 1; i < xs.size(); ++i) {
    double x = xs[i];
    double y = eval(m, x);
    double q = std::abs(y - prev_y) / (x - prev_x);
    if (q > report.estimated_k) {
      report.estimated_k = q;
      report.witness_x = prev_x;
      report.witness_y = x;
    }
    prev_x = x;
    prev_y = y;
  }

  std::visit(
      [&report](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, AffineMap>) {
          report.analytic_k = std::abs(f.c);
        } else if constexpr (std::is_same_v<F, ThreeSegmentMap>) {
          report.analytic_k = f.slope();
        } else if constexpr (std::is_same_v<F, PolylineMap>) {
          double k = 0.0;
          for (size_t i = 1; i < f.points.size(); ++i) {
            double dx = f.points[i].first - f.points[i - 1].first;
            double dy = f.points[i].second - f.points[i - 1].second;
            k = std::max(k, std::abs(dy) / dx);
          }
          report.analytic_k = k;
        }
      },
      m.map);
  return report;
}

RotativityReport analyze_rotativity(const MapSpec& m, int n) {
  return analyze_rotativity(m, n, default_grid(m));
}

RotativityReport analyze_rotativity(const MapSpec& m, int n,
                                    std::span<const double> grid) {
  require_order(n);
  if (const auto* q = std::get_if<QIndicatorMap>(&m.map)) {
    auto qr = qindicator_rotativity(*q, n);
    RotativityReport report;
    report.n = n;
    report.basis = DecisionBasis::Analytic;
    if (qr.rotative) {
      report.estimated_sup = 1.0;
      report.decision = Decision::Yes;
      report.analytic = AnalyticRotativity{1.0, true};
    } else {
      report.estimated_sup = qr.witness_ratio;
      report.decision = Decision::No;
      report.analytic = AnalyticRotativity{kInf, false};
      report.witness = qr.witness;
    }
    return report;
  }

  RotativityReport report = estimate_rotativity_constant(m, n, grid);
  if (const auto* a = std::get_if<AffineMap>(&m.map)) {
    auto res = affine_rotativity_criterion(a->c, a->x0, n);
    report.analytic = AnalyticRotativity{res.sup_ratio, res.rotative};
    report.decision = res.rotative ? Decision::Yes : Decision::No;
    report.basis = DecisionBasis::Analytic;
  } else if (const auto* ts = std::get_if<ThreeSegmentMap>(&m.map)) {
    bool rotative = pwl_rotativity_criterion(*ts, n);
    report.analytic = AnalyticRotativity{pwl_exact_sup_ratio(*ts), rotative};
    report.decision = rotative ? Decision::Yes : Decision::No;
    report.basis = DecisionBasis::Analytic;
  }
  return report;
}

std::optional<LipschitzReport> analyze_lipschitz(const MapSpec& m) {
  if (is_q_indicator(m)) return std::nullopt;
  return lipschitz_estimate(m, default_grid(m));
}

}  // namespace rotkit
