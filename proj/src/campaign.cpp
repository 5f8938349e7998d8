#include "rotkit/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "rotkit/sampling.hpp"

namespace rotkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kPolylineAttemptCap = 1000;
constexpr double kCriterionShrink = 0.99;  // 1% margin off the open criterion interval

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Left edge of the open slope interval on which an affine map is n-rotative:
// (-3, 1) for n = 2, (-2, 1) for n = 3, and in general the negative root of
// |1 + c + ... + c^(n-1)| = n, found by bisection on [-3, -1].
double affine_criterion_left_edge(int n) {
  if (n == 2) return -3.0;
  if (n == 3) return -2.0;
  double lo = -3.0;
  double hi = -1.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double sup = affine_rotativity_criterion(mid, 0.0, n).sup_ratio;
    (sup >= static_cast<double>(n) ? lo : hi) = mid;
  }
  return hi;
}

MapSpec generate_affine(Rng& rng, int n) {
  double left = affine_criterion_left_edge(n) * kCriterionShrink;
  double right = 1.0 * kCriterionShrink;
  double c = rng.uniform(left, right);
  double x0 = rng.uniform(-100.0, 100.0);
  return validate(make_affine(c, x0));
}

MapSpec generate_three_segment(Rng& rng, int n) {
  double c1 = rng.uniform(0.5, 20.0);
  double c2 = c1 + rng.uniform(0.5, 10.0);
  double threshold = (n * c2 - c1) / (n - 1);  // > c2 > 0 here
  double b1 = rng.uniform(threshold * 1.01, threshold * 10.0);
  double b2 = b1 + rng.uniform(0.1, 5.0);
  return validate(make_three_segment(c1, c2, b1, b2));
}

MapSpec generate_polyline(Rng& rng, int n) {
  for (int attempt = 0; attempt < kPolylineAttemptCap; ++attempt) {
    int count = rng.uniform_int(1, 12);
    std::vector<double> xs;
    xs.reserve(count);
    for (int i = 0; i < count; ++i) xs.push_back(rng.uniform(-50.0, 50.0));
    std::sort(xs.begin(), xs.end());
    bool too_close = false;
    for (int i = 1; i < count; ++i) {
      if (xs[i] - xs[i - 1] < 1e-3) too_close = true;
    }
    if (too_close) continue;

    // Mostly flat profiles (likely rotative), occasionally a wild one that
    // the rejection step weeds out.
    bool wild = rng.uniform(0.0, 1.0) < 0.25;
    double base = rng.uniform(-20.0, 20.0);
    double amplitude = rng.uniform(0.5, 8.0);
    std::vector<std::pair<double, double>> points;
    points.reserve(count);
    for (double x : xs) {
      double y = wild ? rng.uniform(-50.0, 50.0) : base + rng.uniform(-amplitude, amplitude);
      points.emplace_back(x, y);
    }

    MapSpec m = validate(make_polyline(std::move(points)));
    auto grid = default_grid(m);
    auto report = estimate_rotativity_constant(m, n, grid);
    if (report.decision == Decision::Yes) return m;
  }
  raise(ErrorCode::GenerationExhausted,
        "no numerically certified rotative polyline after " +
            std::to_string(kPolylineAttemptCap) + " attempts");
}

MapFamily pick_family(Rng& rng, const CampaignConfig& cfg) {
  double wa = std::max(cfg.weight_affine, 0.0);
  double wt = std::max(cfg.weight_three_segment, 0.0);
  double wp = std::max(cfg.weight_polyline, 0.0);
  double total = wa + wt + wp;
  if (total <= 0.0) {
    raise(ErrorCode::InvalidParameters, "family weights must not all be zero");
  }
  double u = rng.uniform(0.0, total);
  if (u < wa) return MapFamily::Affine;
  if (u < wa + wt) return MapFamily::ThreeSegment;
  return MapFamily::Polyline;
}

struct TrialOutcome {
  bool success = false;
  double residual = std::numeric_limits<double>::quiet_NaN();
  MapSpec map;
  std::string reason;
};

TrialOutcome run_trial(const CampaignConfig& cfg, int index) {
  TrialOutcome out;
  Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(index));
  MapFamily family = pick_family(rng, cfg);
  try {
    out.map = generate_rotative_map(rng, family, cfg.n);
  } catch (const Error& e) {
    out.reason = std::string("generation failed: ") + e.what();
    return out;
  }
  try {
    auto result = solve(out.map, cfg.tol);
    out.residual = result.residual;
    if (result.residual <= cfg.tol) {
      out.success = true;
    } else {
      out.reason = "residual above tolerance";
    }
  } catch (const Error& e) {
    out.reason = e.what();
  }
  return out;
}

void parallel_for(int count, int workers, const std::function<void(int)>& body) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t s = seed;
  std::uint64_t mixed = splitmix64(s) ^ ((trial + 1) * 0xD1B54A32D192ED03ull);
  return Rng(mixed);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform(double lo, double hi) {
  double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int Rng::uniform_int(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

const char* to_string(MapFamily f) {
  switch (f) {
    case MapFamily::Affine: return "affine";
    case MapFamily::ThreeSegment: return "three_segment";
    default: return "polyline";
  }
}

MapSpec generate_rotative_map(Rng& rng, MapFamily family, int n) {
  if (n < 2) raise(ErrorCode::InvalidParameters, "rotativity order must be >= 2");
  switch (family) {
    case MapFamily::Affine: return generate_affine(rng, n);
    case MapFamily::ThreeSegment: return generate_three_segment(rng, n);
    default: return generate_polyline(rng, n);
  }
}

CampaignReport run_existence_campaign(const CampaignConfig& cfg) {
  if (cfg.trials < 1) raise(ErrorCode::InvalidParameters, "campaign needs at least one trial");
  if (cfg.tol <= 0.0) raise(ErrorCode::InvalidParameters, "tolerance must be positive");

  auto started = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(static_cast<size_t>(cfg.trials));
  parallel_for(cfg.trials, worker_count(),
               [&](int i) { outcomes[static_cast<size_t>(i)] = run_trial(cfg, i); });

  CampaignReport report;
  report.config = cfg;
  report.trials = cfg.trials;
  for (int i = 0; i < cfg.trials; ++i) {
    auto& o = outcomes[static_cast<size_t>(i)];
    if (o.success) {
      ++report.successes;
      report.max_residual = std::max(report.max_residual, o.residual);
    } else {
      report.failures.push_back({i, std::move(o.map), std::move(o.reason), o.residual});
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

SteepConstruction construct_steep_2rotative(double max_slope) {
  if (!(max_slope > 0.0) || !std::isfinite(max_slope)) {
    raise(ErrorCode::InvalidParameters, "slope target must be positive and finite");
  }
  // Slope (c2-c1)/(b2-b1) equals max_slope by construction; b1 = 4 clears the
  // 2-rotativity threshold (2*c2 - c1 = 3) strictly, with sup ratio exactly
  // 1 + (c2-c1)/(b1-c2) = 1.5 independent of the slope.
  MapSpec m = validate(make_three_segment(1.0, 2.0, 4.0, 4.0 + 1.0 / max_slope));
  auto grid = default_grid(m);
  SteepConstruction out{m, lipschitz_estimate(m, grid), analyze_rotativity(m, 2, grid)};
  return out;
}

DualityResult threshold_duality(const std::function<bool(double)>& predicate,
                                std::span<const double> grid) {
  for (size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) {
      raise(ErrorCode::InvalidParameters, "duality grid must be strictly increasing");
    }
  }

  bool seen_false = false;
  std::optional<double> last_true;
  std::optional<double> first_false;
  for (double k : grid) {
    if (predicate(k)) {
      if (seen_false) {
        raise(ErrorCode::NotMonotone,
              "predicate became true again after failing at a smaller threshold");
      }
      last_true = k;
    } else {
      if (!seen_false) first_false = k;
      seen_false = true;
    }
  }

  DualityResult out;
  out.sup_holds = last_true ? *last_true : -kInf;
  out.inf_fails = first_false ? *first_false : kInf;
  out.gap = out.inf_fails - out.sup_holds;
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("ROTKIT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace rotkit
