#pragma once

#include "cubuland/geodesic_halfplane.hpp"
#include "cubuland/graph_manifold.hpp"
#include "cubuland/wallspace.hpp"

#include <cstdint>
#include <random>

namespace cubuland {

/// Uniform integer in [lo, hi] from raw engine output, so that instances do
/// not depend on the standard library's distribution implementation.
long long uniform_int(std::mt19937_64& rng, long long lo, long long hi);

struct ManifoldParams {
  std::size_t blocks = 2;       // >= 1
  std::size_t extra_edges = 1;  // edges beyond a spanning tree (loops allowed)
  long long bound = 3;          // max |entry| of every gluing matrix, >= 1
  std::size_t free_tori = 0;    // free boundary tori added at random blocks
};

/// Connected manifold; matrices are words in [[0,-1],[1,0]], [[1,1],[0,1]]
/// and diag(1,-1), resampled until a != 0 and all entries are within bound.
GraphManifold generate_manifold(std::uint64_t seed, const ManifoldParams& params);

struct WallspaceParams {
  int points = 5;          // >= 2
  std::size_t walls = 10;  // capped by the number of distinct bipartitions
};

Wallspace generate_wallspace(std::uint64_t seed, const WallspaceParams& params);

struct PatternParams {
  std::size_t period = 3;      // >= 1
  std::size_t orbits = 2;      // in [1, period]
  std::size_t max_radius = 3;
  bool allow_always = true;
};

/// Resamples until validate_pattern accepts; InvalidInput after many misses.
GeodesicWallPattern generate_pattern(std::uint64_t seed, const PatternParams& params);

/// Zero-sum shifts with entries in [-bound, bound] on every block.
Retwist generate_retwist(std::uint64_t seed, const GraphManifold& m, long long bound);

/// Random permutation cover of the given degree.
GraphCover generate_cover(std::uint64_t seed, const GraphManifold& m, std::size_t degree);

}  // namespace cubuland
