#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rotkit/fixed_point.hpp"
#include "rotkit/maps.hpp"
#include "rotkit/rotativity.hpp"

namespace rotkit {

/// Deterministic uniform generator (splitmix64 core). The double path avoids
/// library distributions so streams replay identically on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for one trial; scheduling cannot change it.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();
  double uniform(double lo, double hi);  // [lo, hi)
  int uniform_int(int lo, int hi);       // [lo, hi]

 private:
  std::uint64_t state_;
};

enum class MapFamily { Affine, ThreeSegment, Polyline };
const char* to_string(MapFamily f);

struct CampaignConfig {
  std::uint64_t seed = 0;
  int trials = 1;
  double weight_affine = 1.0;
  double weight_three_segment = 1.0;
  double weight_polyline = 1.0;
  int n = 2;
  double tol = kDefaultTol;
};

struct TrialFailure {
  int trial = 0;
  MapSpec map;
  std::string reason;
  double residual = 0.0;  // NaN when no result was produced
};

struct CampaignReport {
  CampaignConfig config;
  int trials = 0;
  int successes = 0;
  std::vector<TrialFailure> failures;
  double max_residual = 0.0;
  double wall_seconds = 0.0;  // not part of the deterministic payload
};

/// Draws a map certified n-rotative: affine slopes come from the exact
/// criterion interval shrunk by 1%, three-segment parameters from the strict
/// side of the b1 threshold, and polylines by rejection against the numeric
/// estimator (decision "yes"). Throws GenerationExhausted after 1000
/// rejected polylines.
MapSpec generate_rotative_map(Rng& rng, MapFamily family, int n);

/// Generates cfg.trials maps per the family weights and solves each for a
/// fixed point. Failures are recorded with the offending map, not thrown.
/// Identical seed and config give byte-identical results.
CampaignReport run_existence_campaign(const CampaignConfig& cfg);

struct SteepConstruction {
  MapSpec map;
  LipschitzReport lipschitz;
  RotativityReport rotativity;
};

/// ThreeSegment(1, 2, 4, 4 + 1/max_slope): Lipschitz constant exactly
/// max_slope, 2-rotative strictly (threshold 3 < 4) with sup ratio 1.5, and
/// fixed point 1. Demonstrates arbitrarily steep 2-rotative maps with
/// nonempty fixed-point sets.
SteepConstruction construct_steep_2rotative(double max_slope);

struct DualityResult {
  double sup_holds = 0.0;  // largest grid point satisfying the predicate; -inf if none
  double inf_fails = 0.0;  // smallest grid point violating it; +inf if none
  double gap = 0.0;
};

/// For a predicate that is true up to some threshold and false beyond it,
/// scans an increasing grid and reports sup{true}, inf{false} and their gap
/// (one grid step when both are finite; +inf on the degenerate sides, with
/// sup of nothing = -inf and inf of nothing = +inf). Throws NotMonotone if
/// the predicate flips back.
DualityResult threshold_duality(const std::function<bool(double)>& predicate,
                                std::span<const double> grid);

/// Campaign worker cap: ROTKIT_THREADS when set, else hardware concurrency.
int worker_count();

}  // namespace rotkit
