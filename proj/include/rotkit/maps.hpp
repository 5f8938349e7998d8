#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rotkit/interval.hpp"
#include "rotkit/rational.hpp"

namespace rotkit {

/// f(x) = c*x + x0 with real c. The complex-slope criterion lives in
/// rotativity.hpp and never evaluates on the line.
struct AffineMap {
  double c = 0.0;
  double x0 = 0.0;
};

/// Continuous map equal to c1 left of b1 and c2 right of b2, linear in
/// between, with c1 < c2 < b1 < b2. Its only fixed point is c1.
/// `exact` carries the constructing rationals when the map was built from
/// exact input, so threshold tests can run in exact arithmetic.
struct ThreeSegmentMap {
  double c1 = 0.0;
  double c2 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  std::optional<std::array<Rational, 4>> exact;

  double slope() const { return (c2 - c1) / (b2 - b1); }
};

/// Piecewise-linear interpolation through strictly increasing breakpoints,
/// extended constantly beyond the first and last one. The constant extension
/// makes the range (and hence the self-map check) decidable from breakpoint
/// values alone.
struct PolylineMap {
  std::vector<std::pair<double, double>> points;
};

enum class PointClass { Rational, Irrational };

/// A point of the line together with its declared rationality class. The tag
/// is authoritative; float values cannot express rationality.
struct TaggedPoint {
  double value = 0.0;
  PointClass cls = PointClass::Rational;
};

/// Maps every rational to c and every irrational to b, where b is rational
/// and c irrational. Evaluation requires a tagged point.
struct QIndicatorMap {
  double b = 0.0;  // rational value
  double c = 0.0;  // irrational value
};

struct MapSpec {
  std::variant<AffineMap, ThreeSegmentMap, PolylineMap, QIndicatorMap> map;
  ClosedInterval domain;
};

MapSpec make_affine(double c, double x0,
                    ClosedInterval domain = ClosedInterval::real_line());
MapSpec make_three_segment(double c1, double c2, double b1, double b2,
                           ClosedInterval domain = ClosedInterval::real_line());
MapSpec make_three_segment(const Rational& c1, const Rational& c2,
                           const Rational& b1, const Rational& b2,
                           ClosedInterval domain = ClosedInterval::real_line());
MapSpec make_polyline(std::vector<std::pair<double, double>> points,
                      ClosedInterval domain = ClosedInterval::real_line());
MapSpec make_q_indicator(double b, double c,
                         ClosedInterval domain = ClosedInterval::real_line());

const char* family_name(const MapSpec& m);
bool is_q_indicator(const MapSpec& m);

/// One application of the map. Throws OutOfDomain when x is outside the
/// domain and WrongPointKind for QIndicatorMap, which needs a tagged point.
double eval(const MapSpec& m, double x);

TaggedPoint eval(const QIndicatorMap& m, TaggedPoint p);

/// Tagged evaluation through a MapSpec; only QIndicatorMap accepts it.
TaggedPoint eval_tagged(const MapSpec& m, TaggedPoint p);

/// [x0, f(x0), ..., f^n(x0)]; n + 1 entries.
std::vector<double> orbit(const MapSpec& m, double x0, int n);
std::vector<TaggedPoint> orbit(const MapSpec& m, TaggedPoint p0, int n);

/// f^n(x0) with early exit once an iterate stops moving (an exact fixed
/// point pins the rest of the orbit).
double iterate(const MapSpec& m, double x0, int n);

/// Checks the family invariants and, where decidable, that the map sends its
/// domain into itself. Throws InvalidParameters or NotSelfMap.
MapSpec validate(MapSpec m);

}  // namespace rotkit
