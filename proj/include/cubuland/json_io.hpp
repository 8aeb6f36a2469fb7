#pragma once

#include "cubuland/chargeless.hpp"
#include "cubuland/dual_complex.hpp"
#include "cubuland/geodesic_halfplane.hpp"
#include "cubuland/graph_manifold.hpp"
#include "cubuland/planar.hpp"
#include "cubuland/wallspace.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace cubuland {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "cubuland/1";

/// Parses JSON text; malformed input raises InvalidInput with
/// "<source>:<line>:<column>: ..." in the message.
Json parse_json_text(std::string_view text, const std::string& source);
Json load_json_file(const std::string& path);

Wallspace wallspace_from_json(const Json& j);
Json to_json(const Wallspace& ws);
/// Optional "basepoint": a point id or a pair of rational strings.
std::optional<Basepoint> basepoint_from_json(const Json& j);

PeriodicArrangement arrangement_from_json(const Json& j);
Json to_json(const PeriodicArrangement& arr);

GeodesicWallPattern pattern_from_json(const Json& j);
Json to_json(const GeodesicWallPattern& p);

GraphManifold manifold_from_json(const Json& j);
Json to_json(const GraphManifold& m);

GraphCover cover_from_json(const Json& j, const GraphManifold& base);
Json to_json(const GraphCover& c, const GraphManifold& base);

Retwist retwist_from_json(const Json& j, const GraphManifold& m);
Json to_json(const Retwist& r, const GraphManifold& m);

/// "x0,y0,x1,y1" with rational entries.
Window parse_window(std::string_view text);

Json complex_to_json(const CubeComplex& c);
/// 1-skeleton with vertices labelled by their orientation bitstrings.
std::string complex_to_dot(const CubeComplex& c);
std::string crossing_graph_to_dot(const CubeComplex& c);

Json report_to_json(const GraphManifold& m, const ChargeReport& report);
Json manifest_to_json(const GraphManifold& m, const TurbineManifest& manifest);

std::string orientation_bits(const Orientation& x);

}  // namespace cubuland
