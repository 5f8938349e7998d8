#include "rotkit/maps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rotkit {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    raise(ErrorCode::InvalidParameters, std::string(what) + " must be finite");
  }
}

void require_in_domain(const ClosedInterval& domain, double x) {
  if (!domain.contains(x)) {
    raise(ErrorCode::OutOfDomain,
          "point " + std::to_string(x) + " outside the map domain");
  }
}

void require_self_mapped(const ClosedInterval& domain, double image) {
  if (!domain.contains(image)) {
    raise(ErrorCode::NotSelfMap,
          "map sends the domain to " + std::to_string(image) +
              ", outside the domain");
  }
}

double eval_affine(const AffineMap& f, double x) { return f.c * x + f.x0; }

double eval_three_segment(const ThreeSegmentMap& f, double x) {
  if (x <= f.b1) return f.c1;
  if (x >= f.b2) return f.c2;
  return f.slope() * (x - f.b1) + f.c1;
}

double eval_polyline(const PolylineMap& f, double x) {
  const auto& pts = f.points;
  if (x <= pts.front().first) return pts.front().second;
  if (x >= pts.back().first) return pts.back().second;
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](double v, const auto& p) { return v < p.first; });
  const auto& [x1, y1] = *(it - 1);
  const auto& [x2, y2] = *it;
  double t = (x - x1) / (x2 - x1);
  return y1 + t * (y2 - y1);
}

void validate_affine(const AffineMap& f, const ClosedInterval& domain) {
  require_finite(f.c, "affine slope");
  require_finite(f.x0, "affine offset");
  if (domain.is_real_line()) return;  // image is the line or {x0}
  if (domain.bounded()) {
    double y1 = eval_affine(f, domain.lo());
    double y2 = eval_affine(f, domain.hi());
    require_self_mapped(domain, std::min(y1, y2));
    require_self_mapped(domain, std::max(y1, y2));
    return;
  }
  // Half-line: a negative slope flips it over, which never fits.
  if (f.c < 0.0) {
    raise(ErrorCode::NotSelfMap, "negative slope cannot self-map a half-line");
  }
  if (std::isfinite(domain.lo())) {
    require_self_mapped(domain, eval_affine(f, domain.lo()));
  } else {
    require_self_mapped(domain, eval_affine(f, domain.hi()));
  }
}

void validate_three_segment(const ThreeSegmentMap& f, const ClosedInterval& domain) {
  for (double v : {f.c1, f.c2, f.b1, f.b2}) require_finite(v, "three-segment parameter");
  if (!(f.c1 < f.c2 && f.c2 < f.b1 && f.b1 < f.b2)) {
    raise(ErrorCode::InvalidParameters,
          "three-segment parameters must satisfy c1 < c2 < b1 < b2");
  }
  if (f.exact) {
    const auto& [r1, r2, r3, r4] = *f.exact;
    if (!(r1 < r2 && r2 < r3 && r3 < r4)) {
      raise(ErrorCode::InvalidParameters,
            "exact three-segment parameters must satisfy c1 < c2 < b1 < b2");
    }
  }
  // Nondecreasing, so the range over the domain is fixed by the endpoints.
  double lo_img = std::isinf(domain.lo()) ? f.c1 : eval_three_segment(f, domain.lo());
  double hi_img = std::isinf(domain.hi()) ? f.c2 : eval_three_segment(f, domain.hi());
  require_self_mapped(domain, lo_img);
  require_self_mapped(domain, hi_img);
}

void validate_polyline(const PolylineMap& f, const ClosedInterval& domain) {
  if (f.points.empty()) {
    raise(ErrorCode::InvalidParameters, "polyline needs at least one breakpoint");
  }
  for (size_t i = 0; i < f.points.size(); ++i) {
    require_finite(f.points[i].first, "polyline breakpoint x");
    require_finite(f.points[i].second, "polyline breakpoint y");
    if (i > 0 && !(f.points[i - 1].first < f.points[i].first)) {
      raise(ErrorCode::InvalidParameters,
            "polyline breakpoint x-coordinates must be strictly increasing");
    }
  }
  // Constant extension: extrema over the domain sit at interior breakpoints
  // or at the (clamped) domain endpoints.
  double lo_img = std::isinf(domain.lo()) ? f.points.front().second
                                          : eval_polyline(f, domain.lo());
  double hi_img = std::isinf(domain.hi()) ? f.points.back().second
                                          : eval_polyline(f, domain.hi());
  double ymin = std::min(lo_img, hi_img);
  double ymax = std::max(lo_img, hi_img);
  for (const auto& [x, y] : f.points) {
    if (domain.contains(x)) {
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  require_self_mapped(domain, ymin);
  require_self_mapped(domain, ymax);
}

void validate_q_indicator(const QIndicatorMap& f, const ClosedInterval& domain) {
  require_finite(f.b, "q-indicator rational value");
  require_finite(f.c, "q-indicator irrational value");
  if (f.b == f.c) {
    raise(ErrorCode::InvalidParameters,
          "q-indicator values must differ (one rational, one irrational)");
  }
  require_self_mapped(domain, f.b);
  require_self_mapped(domain, f.c);
}

}  // namespace

MapSpec make_affine(double c, double x0, ClosedInterval domain) {
  return MapSpec{AffineMap{c, x0}, domain};
}

MapSpec make_three_segment(double c1, double c2, double b1, double b2,
                           ClosedInterval domain) {
  return MapSpec{ThreeSegmentMap{c1, c2, b1, b2, std::nullopt}, domain};
}

MapSpec make_three_segment(const Rational& c1, const Rational& c2,
                           const Rational& b1, const Rational& b2,
                           ClosedInterval domain) {
  ThreeSegmentMap f{to_double(c1), to_double(c2), to_double(b1), to_double(b2),
                    std::array<Rational, 4>{c1, c2, b1, b2}};
  return MapSpec{f, domain};
}

MapSpec make_polyline(std::vector<std::pair<double, double>> points,
                      ClosedInterval domain) {
  return MapSpec{PolylineMap{std::move(points)}, domain};
}

MapSpec make_q_indicator(double b, double c, ClosedInterval domain) {
  return MapSpec{QIndicatorMap{b, c}, domain};
}

const char* family_name(const MapSpec& m) {
  switch (m.map.index()) {
    case 0: return "affine";
    case 1: return "three_segment";
    case 2: return "polyline";
    default: return "q_indicator";
  }
}

bool is_q_indicator(const MapSpec& m) {
  return std::holds_alternative<QIndicatorMap>(m.map);
}

double eval(const MapSpec& m, double x) {
  if (is_q_indicator(m)) {
    raise(ErrorCode::WrongPointKind,
          "q-indicator maps evaluate class-tagged points, not plain reals");
  }
  require_in_domain(m.domain, x);
  return std::visit(
      [x](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, AffineMap>) return eval_affine(f, x);
        if constexpr (std::is_same_v<F, ThreeSegmentMap>) return eval_three_segment(f, x);
        if constexpr (std::is_same_v<F, PolylineMap>) return eval_polyline(f, x);
        return 0.0;  // unreachable
      },
      m.map);
}

TaggedPoint eval(const QIndicatorMap& m, TaggedPoint p) {
  // Rational inputs land on the irrational value and vice versa.
  if (p.cls == PointClass::Rational) return {m.c, PointClass::Irrational};
  return {m.b, PointClass::Rational};
}

TaggedPoint eval_tagged(const MapSpec& m, TaggedPoint p) {
  const auto* f = std::get_if<QIndicatorMap>(&m.map);
  if (f == nullptr) {
    raise(ErrorCode::WrongPointKind,
          "tagged points are only meaningful for q-indicator maps");
  }
  require_in_domain(m.domain, p.value);
  return eval(*f, p);
}

std::vector<double> orbit(const MapSpec& m, double x0, int n) {
  if (n < 0) raise(ErrorCode::InvalidParameters, "orbit length must be >= 0");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n) + 1);
  out.push_back(x0);
  double x = x0;
  for (int k = 0; k < n; ++k) {
    x = eval(m, x);
    out.push_back(x);
  }
  return out;
}

std::vector<TaggedPoint> orbit(const MapSpec& m, TaggedPoint p0, int n) {
  if (n < 0) raise(ErrorCode::InvalidParameters, "orbit length must be >= 0");
  std::vector<TaggedPoint> out;
  out.reserve(static_cast<size_t>(n) + 1);
  out.push_back(p0);
  TaggedPoint p = p0;
  for (int k = 0; k < n; ++k) {
    p = eval_tagged(m, p);
    out.push_back(p);
  }
  return out;
}

double iterate(const MapSpec& m, double x0, int n) {
  double x = x0;
  for (int k = 0; k < n; ++k) {
    double next = eval(m, x);
    if (next == x) return x;  // exact fixed point pins the rest of the orbit
    x = next;
  }
  return x;
}

MapSpec validate(MapSpec m) {
  std::visit(
      [&m](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, AffineMap>) validate_affine(f, m.domain);
        if constexpr (std::is_same_v<F, ThreeSegmentMap>) validate_three_segment(f, m.domain);
        if constexpr (std::is_same_v<F, PolylineMap>) validate_polyline(f, m.domain);
        if constexpr (std::is_same_v<F, QIndicatorMap>) validate_q_indicator(f, m.domain);
      },
      m.map);
  return m;
}

}  // namespace rotkit
