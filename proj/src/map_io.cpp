#include "rotkit/map_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace rotkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

json finite_or_string(double v) {
  if (std::isnan(v)) return nullptr;
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

json optional_number(const std::optional<double>& v) {
  if (!v) return nullptr;
  return finite_or_string(*v);
}

json endpoint_to_json(double v) { return finite_or_string(v); }

json exact_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return format_rational(r);
}

void append_escaped(std::string& out, const json& str_value) {
  out += str_value.dump();  // nlohmann handles quoting and escapes
}

void dump_rec(const json& j, std::string& out, int indent, int depth) {
  auto newline = [&](int d) {
    if (indent >= 0) {
      out += '\n';
      out.append(static_cast<size_t>(indent) * d, ' ');
    }
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // keys already sorted
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        append_escaped(out, json(it.key()));
        out += indent >= 0 ? ": " : ":";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_rec(v, out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

ParsedNumber parse_number(const json& v) {
  if (v.is_number_integer()) {
    auto n = v.get<long long>();
    return {static_cast<double>(n), Rational(n)};
  }
  if (v.is_number_unsigned()) {
    auto n = v.get<unsigned long long>();
    if (n > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
      raise(ErrorCode::ParseError, "integer too large: " + v.dump());
    }
    return {static_cast<double>(n), Rational(static_cast<long long>(n))};
  }
  if (v.is_number_float()) return {v.get<double>(), std::nullopt};
  if (v.is_string()) {
    auto r = parse_rational(v.get<std::string>());
    if (!r) {
      raise(ErrorCode::ParseError,
            "expected a number or an exact rational string, got " + v.dump());
    }
    return {to_double(*r), r};
  }
  raise(ErrorCode::ParseError, "expected a numeric value, got " + v.dump());
}

double parse_extended(const json& v) {
  if (v.is_string()) {
    const auto& s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  return parse_number(v).value;
}

MapSpec map_from_json(const json& j) {
  try {
    if (!j.is_object()) raise(ErrorCode::ParseError, "map spec must be a JSON object");
    std::string kind = j.at("kind").get<std::string>();

    ClosedInterval domain;
    if (j.contains("domain")) {
      const auto& d = j.at("domain");
      if (!d.is_array() || d.size() != 2) {
        raise(ErrorCode::ParseError, "domain must be a [lo, hi] pair");
      }
      domain = ClosedInterval(parse_extended(d[0]), parse_extended(d[1]));
    }

    if (kind == "affine") {
      return make_affine(parse_number(j.at("c")).value, parse_number(j.at("x0")).value,
                         domain);
    }
    if (kind == "three_segment") {
      auto c1 = parse_number(j.at("c1"));
      auto c2 = parse_number(j.at("c2"));
      auto b1 = parse_number(j.at("b1"));
      auto b2 = parse_number(j.at("b2"));
      if (c1.exact && c2.exact && b1.exact && b2.exact) {
        return make_three_segment(*c1.exact, *c2.exact, *b1.exact, *b2.exact, domain);
      }
      return make_three_segment(c1.value, c2.value, b1.value, b2.value, domain);
    }
    if (kind == "polyline") {
      std::vector<std::pair<double, double>> points;
      for (const auto& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2) {
          raise(ErrorCode::ParseError, "polyline points must be [x, y] pairs");
        }
        points.emplace_back(parse_number(p[0]).value, parse_number(p[1]).value);
      }
      return make_polyline(std::move(points), domain);
    }
    if (kind == "q_indicator") {
      return make_q_indicator(parse_number(j.at("b")).value, parse_number(j.at("c")).value,
                              domain);
    }
    raise(ErrorCode::ParseError, "unknown map kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    raise(ErrorCode::ParseError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidParameters) {
      // A malformed interval is a parse-level problem, not a validation one.
      raise(ErrorCode::ParseError, e.what());
    }
    throw;
  }
}

MapSpec parse_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(ErrorCode::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return validate(map_from_json(j));
}

json map_to_json(const MapSpec& m) {
  json j;
  j["kind"] = family_name(m);
  j["domain"] = json::array({endpoint_to_json(m.domain.lo()), endpoint_to_json(m.domain.hi())});
  std::visit(
      [&j](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, AffineMap>) {
          j["c"] = f.c;
          j["x0"] = f.x0;
        } else if constexpr (std::is_same_v<F, ThreeSegmentMap>) {
          if (f.exact) {
            const auto& [c1, c2, b1, b2] = *f.exact;
            j["c1"] = exact_to_json(c1);
            j["c2"] = exact_to_json(c2);
            j["b1"] = exact_to_json(b1);
            j["b2"] = exact_to_json(b2);
          } else {
            j["c1"] = f.c1;
            j["c2"] = f.c2;
            j["b1"] = f.b1;
            j["b2"] = f.b2;
          }
        } else if constexpr (std::is_same_v<F, PolylineMap>) {
          json pts = json::array();
          for (const auto& [x, y] : f.points) pts.push_back(json::array({x, y}));
          j["points"] = std::move(pts);
        } else if constexpr (std::is_same_v<F, QIndicatorMap>) {
          j["b"] = f.b;
          j["c"] = f.c;
        }
      },
      m.map);
  return j;
}

json to_json(const RotativityReport& r) {
  json j;
  j["n"] = r.n;
  j["estimated_sup"] = finite_or_string(r.estimated_sup);
  j["decision"] = to_string(r.decision);
  j["basis"] = to_string(r.basis);
  if (r.analytic) {
    j["analytic"] = {{"exact_sup", finite_or_string(r.analytic->exact_sup)},
                     {"rotative", r.analytic->rotative}};
  } else {
    j["analytic"] = nullptr;
  }
  j["witness"] = optional_number(r.witness);
  return j;
}

json to_json(const LipschitzReport& r) {
  json j;
  j["estimated_k"] = finite_or_string(r.estimated_k);
  j["analytic_k"] = optional_number(r.analytic_k);
  j["witness"] = json::array({r.witness_x, r.witness_y});
  return j;
}

json to_json(const FixedPointResult& r) {
  json j;
  j["x_star"] = r.x_star;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  j["method"] = to_string(r.method);
  if (r.certificate) {
    j["certificate"] = {{"a", r.certificate->rate},
                        {"d1", r.certificate->initial_gap},
                        {"tail_bound", r.certificate->tail_bound_at_termination}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

json to_json(const CampaignReport& r) {
  json cfg;
  cfg["seed"] = r.config.seed;
  cfg["trials"] = r.config.trials;
  cfg["n"] = r.config.n;
  cfg["tol"] = r.config.tol;
  cfg["weights"] = {{"affine", r.config.weight_affine},
                    {"three_segment", r.config.weight_three_segment},
                    {"polyline", r.config.weight_polyline}};

  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"trial", f.trial},
                        {"map", map_to_json(f.map)},
                        {"reason", f.reason},
                        {"residual", finite_or_string(f.residual)}});
  }

  json results;
  results["config"] = std::move(cfg);
  results["trials"] = r.trials;
  results["successes"] = r.successes;
  results["failures"] = std::move(failures);
  results["max_residual"] = r.max_residual;

  json j;
  j["results"] = std::move(results);
  j["wall_time_ms"] = r.wall_seconds * 1e3;
  return j;
}

json to_json(const BoundsRow& row) {
  json j;
  j["space"] = to_string(row.space);
  j["n"] = row.n;
  j["a"] = row.a;
  j["kind"] = to_string(row.bound.kind);
  j["value"] = finite_or_string(row.bound.value);
  j["source"] = row.bound.source;
  return j;
}

json bounds_rows_to_json(const std::vector<BoundsRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

std::string dump_json(const json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  return out;
}

}  // namespace rotkit
