#pragma once

// Brute-force reference computations. None of these go through WallSystem,
// build_dual's flip search, or the Smith normal form, so agreement with the
// library is a genuine second route.

#include "cubuland/dual_complex.hpp"
#include "cubuland/geodesic_halfplane.hpp"
#include "cubuland/graph_manifold.hpp"
#include "cubuland/wallspace.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using cubuland::Orientation;

// A cell as (least orientation in bit form, sorted walls it spans).
using CellKey = std::pair<std::string, std::vector<std::size_t>>;

struct DualSets {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;
  std::map<std::size_t, std::set<CellKey>> cubes;  // dimension >= 2
};

inline std::string bits(const std::vector<int>& sides) {
  std::string s;
  for (int b : sides) s.push_back(b ? '1' : '0');
  return s;
}

/// Every orientation of every expanded wall, kept when each pair of chosen
/// point sets meets (copies of one wall always meet); then all edges and
/// cubes among the kept orientations.
inline DualSets exhaustive_bipartition_dual(const cubuland::Wallspace& ws) {
  const auto& walls = ws.walls();
  const std::size_t n = walls.size();
  std::vector<std::array<std::uint32_t, 2>> masks;
  std::vector<std::size_t> entry;
  for (const auto& w : walls) {
    entry.push_back(w.entry);
    const auto& bp = std::get<cubuland::Bipartition>(w.geometry);
    std::uint32_t m0 = 0, m1 = 0;
    for (int p : bp.side0) m0 |= 1u << p;
    for (int p : bp.side1) m1 |= 1u << p;
    masks.push_back({m0, m1});
  }
  DualSets out;
  std::set<std::uint32_t> good;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        ok = entry[i] == entry[j] || (masks[i][(x >> i) & 1] & masks[j][(x >> j) & 1]) != 0;
    if (ok) good.insert(x);
  }
  auto label = [n](std::uint32_t x) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s.push_back((x >> i) & 1 ? '1' : '0');
    return s;
  };
  for (auto x : good) out.vertices.insert(label(x));
  for (auto x : good)
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t y = x ^ (1u << i);
      if (x < y && good.count(y)) out.edges.insert({label(x), label(y)});
    }
  // cubes: for each vertex x and wall set S (as a mask), all 2^|S| flips present
  for (auto x : good)
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      int k = __builtin_popcount(s);
      if (k < 2) continue;
      bool all = true;
      for (std::uint32_t sub = s;; sub = (sub - 1) & s) {
        if (!good.count(x ^ sub)) {
          all = false;
          break;
        }
        if (sub == 0) break;
      }
      if (!all) continue;
      // record at the cube's least vertex in label order
      std::string least;
      for (std::uint32_t sub = s;; sub = (sub - 1) & s) {
        std::string l = label(x ^ sub);
        if (least.empty() || l < least) least = l;
        if (sub == 0) break;
      }
      std::vector<std::size_t> ws_list;
      for (std::size_t i = 0; i < n; ++i)
        if ((s >> i) & 1) ws_list.push_back(i);
      out.cubes[k].insert({least, ws_list});
    }
  return out;
}

inline std::string label_of(const Orientation& x) {
  std::string s;
  for (auto b : x.sides) s.push_back(b ? '1' : '0');
  return s;
}

/// The same sets read off a library complex.
inline DualSets sets_of(const cubuland::CubeComplex& c) {
  DualSets out;
  for (const auto& v : c.vertices()) out.vertices.insert(label_of(v));
  for (const auto& e : c.edges()) {
    auto a = label_of(c.vertices()[e.u]), b = label_of(c.vertices()[e.v]);
    out.edges.insert({std::min(a, b), std::max(a, b)});
  }
  for (std::size_t d = 2; d <= c.dimension(); ++d)
    for (const auto& q : c.cubes(d)) {
      std::string least;
      for (auto v : q.vertices) {
        auto l = label_of(c.vertices()[v]);
        if (least.empty() || l < least) least = l;
      }
      out.cubes[d].insert({least, q.walls});
    }
  return out;
}

/// All-pairs shortest paths in the 1-skeleton by breadth-first search.
inline std::vector<std::vector<int>> graph_distances(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u])
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

inline std::vector<std::vector<int>> graph_distances(const cubuland::CubeComplex& c) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : c.edges()) edges.emplace_back(e.u, e.v);
  return graph_distances(c.vertex_count(), edges);
}

/// Vertices m with d(u,m)+d(m,v)=d(u,v) for all three pairs.
inline std::vector<std::size_t> metric_medians(const std::vector<std::vector<int>>& d, std::size_t u, std::size_t v,
                                               std::size_t w) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < d.size(); ++m)
    if (d[u][m] + d[m][v] == d[u][v] && d[v][m] + d[m][w] == d[v][w] && d[u][m] + d[m][w] == d[u][w])
      out.push_back(m);
  return out;
}

/// Half-plane vertices straight from the pair description: for 0 <= x <= x'
/// <= n, (#A-walls before x, #B-walls before x'). Edges join pairs differing
/// by one in exactly one coordinate (moving past one wall), squares are unit
/// boxes with all four corners present.
struct HalfplaneCounts {
  std::size_t vertices = 0, edges = 0, squares = 0;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
};

inline HalfplaneCounts halfplane_by_pairs(const std::vector<bool>& in_A) {
  const std::size_t n = in_A.size();
  HalfplaneCounts out;
  for (std::size_t x = 0; x <= n; ++x)
    for (std::size_t x2 = x; x2 <= n; ++x2) {
      std::size_t i = 0, j = 0;
      for (std::size_t k = 0; k < x; ++k) i += in_A[k] ? 1 : 0;
      for (std::size_t k = 0; k < x2; ++k) j += in_A[k] ? 0 : 1;
      out.pairs.insert({i, j});
    }
  out.vertices = out.pairs.size();
  for (auto [i, j] : out.pairs) {
    if (out.pairs.count({i + 1, j})) ++out.edges;
    if (out.pairs.count({i, j + 1})) ++out.edges;
    if (out.pairs.count({i + 1, j}) && out.pairs.count({i, j + 1}) && out.pairs.count({i + 1, j + 1})) ++out.squares;
  }
  return out;
}

/// Literal homology check in circle x surface: the c-coefficients must all be
/// equal (a multiple of the single relation) and the h-coefficient zero.
/// Handle coordinates never appear in fiber classes.
inline bool block_sum_is_zero(const cubuland::GraphManifold& m, std::size_t block, const std::vector<long long>& n) {
  auto ends = m.ends_of(block);
  const auto& blk = m.blocks()[block];
  std::vector<long long> c(blk.boundary_count, 0);
  long long h = 0;
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const auto& e = m.end(ends[k]);
    c[e.torus] += n[k] * static_cast<long long>(e.matrix.a);
    h += n[k] * static_cast<long long>(e.matrix.b);
  }
  for (auto v : c)
    if (v != c[0]) return false;
  return h == 0;
}

/// Does any n in ([-N, N] \ {0})^ends satisfy block_sum_is_zero?
inline bool brute_chargeless(const cubuland::GraphManifold& m, std::size_t block, long long N) {
  const std::size_t E = m.ends_of(block).size();
  std::vector<long long> n(E, -N);
  if (E == 0) return true;
  while (true) {
    bool nonzero = true;
    for (auto v : n) nonzero = nonzero && v != 0;
    if (nonzero && block_sum_is_zero(m, block, n)) return true;
    std::size_t pos = 0;
    while (pos < E && n[pos] == N) n[pos++] = -N;
    if (pos == E) return false;
    ++n[pos];
  }
}

}  // namespace oracle
