#include "rotkit/gamma_bounds.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rotkit/errors.hpp"

namespace rotkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Published constants for small n at a = 0, stored verbatim.
constexpr std::array<std::pair<int, double>, 4> kBanachSmallN{
    {{3, 1.3821}, {4, 1.2524}, {5, 1.1777}, {6, 1.1329}}};
constexpr std::array<std::pair<int, double>, 4> kHilbertSmallN{
    {{3, 1.5549}, {4, 1.3267}, {5, 1.2152}, {6, 1.1562}}};

bool hilbert_like(SpaceKind s) {
  // The real line is a Hilbert space, so it inherits every Hilbert bound.
  return s == SpaceKind::Hilbert || s == SpaceKind::RealLine;
}

double banach_general(int n) {
  if (n == 2) return 2.0;
  double radicand = n * (n - 1.0) - 1.0 / (n - 1.0);
  // radicand >= 2(2-1) - 1 > 0 for every n >= 2
  return std::pow((-1.0 + std::sqrt(radicand)) / (n - 2.0), 1.0 / (n - 1.0));
}

double banach_quadratic_pair(double a) {
  double e1 = 0.5 * (2.0 - a + std::sqrt((2.0 - a) * (2.0 - a) + a * a));
  double t = a * a + 4.0;
  double e2 = (t + std::sqrt(t * t - 64.0 * a + 64.0)) / 8.0;
  return std::max(e1, e2);
}

double hilbert_pi() { return std::sqrt(std::numbers::pi * std::numbers::pi - 3.0); }

double hilbert_inverse_quadratic(double a) { return std::sqrt(5.0 / (a * a + 1.0)); }

void check_query(int n, double a) {
  if (n < 2 || !(a >= 0.0) || a >= static_cast<double>(n)) {
    raise(ErrorCode::InvalidParameters, "bounds are defined for n >= 2 and 0 <= a < n");
  }
}

}  // namespace

const char* to_string(SpaceKind s) {
  switch (s) {
    case SpaceKind::RealLine: return "real_line";
    case SpaceKind::BanachGeneric: return "banach";
    case SpaceKind::Hilbert: return "hilbert";
    default: return "c01";
  }
}

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    default: return "exact";
  }
}

std::vector<BoundValue> known_gamma_lower_bound(SpaceKind space, int n, double a) {
  check_query(n, a);
  std::vector<BoundValue> out;

  if (a == 0.0) {
    out.push_back({banach_general(n), BoundKind::Lower, "banach_general"});
  }
  if (n == 2 && a < 2.0) {
    out.push_back({banach_quadratic_pair(a), BoundKind::Lower, "banach_quadratic_pair"});
  }
  if (a == 0.0) {
    for (auto [m, v] : kBanachSmallN) {
      if (m == n) out.push_back({v, BoundKind::Lower, "banach_small_n"});
    }
  }

  if (hilbert_like(space)) {
    if (n == 2 && a == 0.0) {
      out.push_back({hilbert_pi(), BoundKind::Lower, "hilbert_pi"});
    }
    if (n == 2 && a < 2.0) {
      out.push_back({hilbert_inverse_quadratic(a), BoundKind::Lower,
                     "hilbert_inverse_quadratic"});
    }
    if (a == 0.0) {
      for (auto [m, v] : kHilbertSmallN) {
        if (m == n) out.push_back({v, BoundKind::Lower, "hilbert_small_n"});
      }
    }
  }

  if (space == SpaceKind::RealLine && n == 2 && a < 2.0) {
    out.push_back({kInf, BoundKind::Exact, "real_line_exact"});
  }

  if (out.empty()) {
    raise(ErrorCode::NotApplicable,
          "no known lower bound covers (" + std::string(to_string(space)) + ", n=" +
              std::to_string(n) + ", a=" + std::to_string(a) + ")");
  }
  return out;
}

std::vector<BoundValue> known_gamma_upper_bound(SpaceKind space, int n, double a) {
  check_query(n, a);
  if (space == SpaceKind::C01 && n == 2 && a > 1.0 && a < 2.0) {
    return {{1.0 / (a - 1.0), BoundKind::Upper, "c01_reciprocal"}};
  }
  raise(ErrorCode::NotApplicable,
        "no known upper bound covers (" + std::string(to_string(space)) + ", n=" +
            std::to_string(n) + ", a=" + std::to_string(a) + ")");
}

std::vector<BoundsRow> bounds_table(std::span<const int> ns, std::span<const double> as) {
  static constexpr SpaceKind kSpaces[] = {SpaceKind::RealLine, SpaceKind::BanachGeneric,
                                          SpaceKind::Hilbert, SpaceKind::C01};
  std::vector<BoundsRow> rows;
  for (SpaceKind space : kSpaces) {
    for (int n : ns) {
      for (double a : as) {
        if (n < 2 || a < 0.0 || a >= static_cast<double>(n)) continue;
        try {
          for (auto& b : known_gamma_lower_bound(space, n, a)) {
            rows.push_back({space, n, a, std::move(b)});
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotApplicable) throw;
        }
        try {
          for (auto& b : known_gamma_upper_bound(space, n, a)) {
            rows.push_back({space, n, a, std::move(b)});
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotApplicable) throw;
        }
      }
    }
  }
  return rows;
}

}  // namespace rotkit
