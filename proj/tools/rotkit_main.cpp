#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotkit/map_io.hpp"
#include "rotkit/sampling.hpp"

namespace {

using rotkit::json;

int exit_code_for(const rotkit::Error& e) {
  switch (e.code()) {
    case rotkit::ErrorCode::ParseError:
      return 2;
    case rotkit::ErrorCode::InvalidParameters:
    case rotkit::ErrorCode::NotSelfMap:
      return 3;
    case rotkit::ErrorCode::NotFound:
    case rotkit::ErrorCode::NoConvergence:
    case rotkit::ErrorCode::NoSignChange:
      return 4;
    default:
      return 1;
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void print_rotativity_text(const rotkit::RotativityReport& r) {
  std::printf("rotativity (n=%d): %s (%s)\n", r.n, to_string(r.decision),
              to_string(r.basis));
  std::printf("  estimated sup : %s\n", fmt(r.estimated_sup).c_str());
  if (r.analytic) {
    std::printf("  exact sup     : %s\n", fmt(r.analytic->exact_sup).c_str());
    std::printf("  exact decision: %s\n", r.analytic->rotative ? "yes" : "no");
  }
  if (r.witness) std::printf("  witness       : %s\n", fmt(*r.witness).c_str());
}

void print_lipschitz_text(const rotkit::LipschitzReport& r) {
  std::printf("lipschitz:\n");
  std::printf("  estimated k   : %s\n", fmt(r.estimated_k).c_str());
  if (r.analytic_k) std::printf("  analytic k    : %s\n", fmt(*r.analytic_k).c_str());
  std::printf("  witness pair  : (%s, %s)\n", fmt(r.witness_x).c_str(),
              fmt(r.witness_y).c_str());
}

void print_result_text(const rotkit::FixedPointResult& r) {
  std::printf("x*         : %s\n", fmt(r.x_star).c_str());
  std::printf("residual   : %s\n", fmt(r.residual).c_str());
  std::printf("iterations : %ld\n", r.iterations);
  std::printf("method     : %s\n", to_string(r.method));
  if (r.certificate) {
    std::printf("certificate: a=%s d1=%s tail=%s\n", fmt(r.certificate->rate).c_str(),
                fmt(r.certificate->initial_gap).c_str(),
                fmt(r.certificate->tail_bound_at_termination).c_str());
  }
}

int cmd_analyze(const std::string& path, int n, const std::string& format) {
  auto m = rotkit::parse_map_file(path);
  auto grid = rotkit::default_grid(m);
  auto rot = rotkit::analyze_rotativity(m, n, grid);
  auto lip = rotkit::analyze_lipschitz(m);

  if (format == "json") {
    json out;
    out["rotativity"] = to_json(rot);
    out["lipschitz"] = lip ? to_json(*lip) : json(nullptr);
    std::printf("%s\n", rotkit::dump_json(out, 2).c_str());
  } else {
    std::printf("map: %s\n", family_name(m));
    print_rotativity_text(rot);
    if (lip) print_lipschitz_text(*lip);
  }
  return 0;
}

int cmd_solve(const std::string& path, double tol, const std::string& format) {
  auto m = rotkit::parse_map_file(path);
  auto result = rotkit::solve(m, tol);
  if (format == "json") {
    std::printf("%s\n", rotkit::dump_json(to_json(result), 2).c_str());
  } else {
    print_result_text(result);
  }
  return 0;
}

int cmd_bounds(std::vector<int> ns, std::vector<double> as, const std::string& format) {
  auto rows = rotkit::bounds_table(ns, as);
  if (format == "json") {
    std::printf("%s\n", rotkit::dump_json(rotkit::bounds_rows_to_json(rows), 2).c_str());
    return 0;
  }
  std::printf("%-10s %-3s %-6s %-6s %-12s %s\n", "space", "n", "a", "kind", "value",
              "source");
  for (const auto& r : rows) {
    std::printf("%-10s %-3d %-6s %-6s %-12s %s\n", to_string(r.space), r.n,
                fmt(r.a).c_str(), to_string(r.bound.kind),
                std::isinf(r.bound.value) ? "inf" : fmt(r.bound.value).c_str(),
                r.bound.source.c_str());
  }
  return 0;
}

int cmd_campaign(const rotkit::CampaignConfig& cfg, const std::string& out_path,
                 const std::string& format) {
  auto report = rotkit::run_existence_campaign(cfg);
  json j = to_json(report);
  if (!out_path.empty()) {
    FILE* f = std::fopen(out_path.c_str(), "w");
    if (f == nullptr) {
      std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
      return 1;
    }
    std::fprintf(f, "%s\n", rotkit::dump_json(j, 2).c_str());
    std::fclose(f);
  }
  if (format == "json") {
    std::printf("%s\n", rotkit::dump_json(j, 2).c_str());
  } else {
    std::printf("trials       : %d\n", report.trials);
    std::printf("successes    : %d\n", report.successes);
    std::printf("failures     : %zu\n", report.failures.size());
    std::printf("max residual : %s\n", fmt(report.max_residual).c_str());
    std::printf("wall time    : %s s\n", fmt(report.wall_seconds).c_str());
    for (const auto& f : report.failures) {
      std::fprintf(stderr, "trial %d failed (%s): %s\n", f.trial, f.reason.c_str(),
                   rotkit::dump_json(rotkit::map_to_json(f.map)).c_str());
    }
  }
  return report.failures.empty() ? 0 : 4;
}

int cmd_construct(double slope, const std::string& out_path, const std::string& format) {
  auto built = rotkit::construct_steep_2rotative(slope);
  json map_json = rotkit::map_to_json(built.map);
  FILE* f = std::fopen(out_path.c_str(), "w");
  if (f == nullptr) {
    std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
    return 1;
  }
  std::fprintf(f, "%s\n", rotkit::dump_json(map_json, 2).c_str());
  std::fclose(f);

  if (format == "json") {
    json out;
    out["file"] = out_path;
    out["rotativity"] = to_json(built.rotativity);
    out["lipschitz"] = to_json(built.lipschitz);
    std::printf("%s\n", rotkit::dump_json(out, 2).c_str());
  } else {
    std::printf("wrote %s\n", out_path.c_str());
    print_rotativity_text(built.rotativity);
    print_lipschitz_text(built.lipschitz);
  }
  return 0;
}

rotkit::CampaignConfig make_config(std::uint64_t seed, int trials, int n, double tol,
                                   const std::vector<std::string>& families) {
  rotkit::CampaignConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.n = n;
  cfg.tol = tol;
  if (!families.empty()) {
    cfg.weight_affine = 0.0;
    cfg.weight_three_segment = 0.0;
    cfg.weight_polyline = 0.0;
    for (const auto& f : families) {
      if (f == "affine") {
        cfg.weight_affine = 1.0;
      } else if (f == "three_segment") {
        cfg.weight_three_segment = 1.0;
      } else if (f == "polyline") {
        cfg.weight_polyline = 1.0;
      } else {
        rotkit::raise(rotkit::ErrorCode::InvalidParameters,
                      "unknown family \"" + f + "\"");
      }
    }
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotkit: rotativity analysis and fixed-point solving for self-maps of the line"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string file;
  int n = 2;
  double tol = rotkit::kDefaultTol;

  auto* analyze = app.add_subcommand("analyze", "rotativity and Lipschitz reports for a map file");
  analyze->add_option("file", file, "map spec JSON file")->required();
  analyze->add_option("--n", n, "rotativity order (>= 2)")->default_val(2);
  analyze->add_option("--format", format, "text or json")->default_val("text");

  auto* solve = app.add_subcommand("solve", "find a fixed point of the map in a file");
  solve->add_option("file", file, "map spec JSON file")->required();
  solve->add_option("--tol", tol, "residual tolerance")->default_val(rotkit::kDefaultTol);
  solve->add_option("--format", format, "text or json")->default_val("text");

  std::vector<int> bounds_n{2, 3, 4, 5, 6};
  std::vector<double> bounds_a{0.0, 1.0, 1.5, 1.9};
  auto* bounds = app.add_subcommand("bounds", "table of known gamma bounds");
  bounds->add_option("--n", bounds_n, "n values")->delimiter(',');
  bounds->add_option("--a", bounds_a, "a samples")->delimiter(',');
  bounds->add_option("--format", format, "text or json")->default_val("text");

  std::uint64_t seed = 0;
  int trials = 100;
  std::vector<std::string> families;
  std::string out_path;
  auto* campaign = app.add_subcommand("campaign", "seeded fixed-point existence campaign");
  campaign->add_option("--trials", trials, "number of trials")->default_val(100);
  campaign->add_option("--seed", seed, "RNG seed")->default_val(0);
  campaign->add_option("--n", n, "rotativity order for generated maps")->default_val(2);
  campaign->add_option("--families", families,
                       "subset of affine,three_segment,polyline")
      ->delimiter(',');
  campaign->add_option("--tol", tol, "solver tolerance")->default_val(rotkit::kDefaultTol);
  campaign->add_option("--out", out_path, "write the JSON report here");
  campaign->add_option("--format", format, "text or json")->default_val("text");

  double slope = 10.0;
  std::string construct_out = "steep_map.json";
  auto* construct = app.add_subcommand("construct",
                                       "emit a steep 2-rotative map with a fixed point");
  construct->add_option("--M", slope, "target Lipschitz constant (> 0)")->required();
  construct->add_option("--out", construct_out, "map spec output file")
      ->default_val("steep_map.json");
  construct->add_option("--format", format, "text or json")->default_val("text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(file, n, format);
    if (solve->parsed()) return cmd_solve(file, tol, format);
    if (bounds->parsed()) return cmd_bounds(bounds_n, bounds_a, format);
    if (campaign->parsed()) {
      return cmd_campaign(make_config(seed, trials, n, tol, families), out_path, format);
    }
    if (construct->parsed()) return cmd_construct(slope, construct_out, format);
  } catch (const rotkit::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 1;
}
