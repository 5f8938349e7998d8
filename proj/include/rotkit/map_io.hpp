#pragma once

#include <string>

#include "json.hpp"
#include "rotkit/campaign.hpp"
#include "rotkit/fixed_point.hpp"
#include "rotkit/gamma_bounds.hpp"
#include "rotkit/maps.hpp"
#include "rotkit/rotativity.hpp"

namespace rotkit {

using json = nlohmann::json;

/// Numeric fields accept JSON numbers (integers stay exact) and exact
/// rational strings like "199/99", reduced before conversion to double.
struct ParsedNumber {
  double value = 0.0;
  std::optional<Rational> exact;
};

ParsedNumber parse_number(const json& v);

/// Like parse_number but also accepts "inf" / "+inf" / "-inf".
double parse_extended(const json& v);

/// Builds an unvalidated MapSpec from the map-spec JSON schema:
///   {"kind":"affine","c":0.5,"x0":1.0,"domain":["-inf","inf"]}
///   {"kind":"three_segment","c1":1,"c2":6,"b1":12,"b2":13,"domain":[...]}
///   {"kind":"polyline","points":[[0,1],[2,3]],"domain":[...]}
///   {"kind":"q_indicator","b":1.0,"c":1.41421356}
/// A missing domain means the whole line. Three-segment maps keep exact
/// rationals when all four parameters were exact. Throws ParseError.
MapSpec map_from_json(const json& j);

/// Reads, parses and validates a map-spec file. ParseError for unreadable or
/// malformed input; validation failures propagate from validate().
MapSpec parse_map_file(const std::string& path);

json map_to_json(const MapSpec& m);

json to_json(const RotativityReport& r);
json to_json(const LipschitzReport& r);
json to_json(const FixedPointResult& r);
/// {"results": {...deterministic payload...}, "wall_time_ms": ...}
json to_json(const CampaignReport& r);
json to_json(const BoundsRow& row);
json bounds_rows_to_json(const std::vector<BoundsRow>& rows);

/// Serializer with sorted keys and doubles printed to 17 significant digits
/// (round-trip exact). Nonfinite doubles must be encoded as strings by the
/// builders above; this guards with null. indent < 0 means compact.
std::string dump_json(const json& j, int indent = -1);

}  // namespace rotkit
