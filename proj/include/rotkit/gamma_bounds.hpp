#pragma once

#include <span>
#include <string>
#include <vector>

namespace rotkit {

/// gamma(X, n, a) is the infimum of Lipschitz constants k admitting a
/// fixed-point-free (n,a)-rotative k-Lipschitzian self-map of some closed
/// convex subset of X. These are the published bounds for it.
enum class SpaceKind { RealLine, BanachGeneric, Hilbert, C01 };
const char* to_string(SpaceKind s);

enum class BoundKind { Lower, Upper, Exact };
const char* to_string(BoundKind k);

struct BoundValue {
  double value = 0.0;  // may be +inf
  BoundKind kind = BoundKind::Lower;
  std::string source;  // formula identifier
};

/// Every known lower bound applicable to (space, n, a); callers combine by
/// taking the max. The real line with n = 2 additionally gets the exact
/// value +inf. Throws NotApplicable when nothing covers the query.
std::vector<BoundValue> known_gamma_lower_bound(SpaceKind space, int n, double a);

/// The single known upper bound: 1/(a - 1) on C[0,1] with n = 2, a in (1,2).
std::vector<BoundValue> known_gamma_upper_bound(SpaceKind space, int n, double a);

struct BoundsRow {
  SpaceKind space = SpaceKind::BanachGeneric;
  int n = 2;
  double a = 0.0;
  BoundValue bound;
};

/// One row per applicable (space, n, a, bound) over the cross product of the
/// requested n values and a samples. Queries with a >= n are skipped.
std::vector<BoundsRow> bounds_table(std::span<const int> ns, std::span<const double> as);

}  // namespace rotkit
