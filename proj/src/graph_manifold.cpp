#include "cubuland/graph_manifold.hpp"

#include "cubuland/error.hpp"

#include <numeric>
#include <set>

namespace cubuland {

GluingMatrix far_side_matrix(const GluingMatrix& near) {
  Integer det = near.determinant();
  require(det == 1 || det == -1, "gluing matrix must have determinant +-1");
  // the basis changes (c', h') -> (c, h) and back are [[p, a], [q, b]] and its inverse
  return GluingMatrix{near.a / det, -near.p / det, -near.b / det, near.q / det};
}

namespace {

std::string end_name(const std::vector<Block>& blocks, const EdgeEnd& e) {
  return "block '" + blocks[e.block].id + "' torus " + std::to_string(e.torus);
}

}  // namespace

GraphManifold GraphManifold::make(std::vector<Block> blocks, std::vector<GluedEdge> edges) {
  require(!blocks.empty(), "graph manifold has no blocks");
  require(!edges.empty(), "graph manifold must have at least one edge");
  GraphManifold m;
  std::set<std::string> ids;
  for (const auto& b : blocks) {
    require(!b.id.empty(), "block id must be nonempty");
    require(ids.insert(b.id).second, "duplicate block id '" + b.id + "'");
    require(b.boundary_count >= 1, "block '" + b.id + "' must have boundary");
    long long chi = 2 - 2 * static_cast<long long>(b.genus) - static_cast<long long>(b.boundary_count);
    require(chi < 0, "block '" + b.id + "' has a non-hyperbolic base (Euler characteristic " + std::to_string(chi) + ")");
    m.torus_use_.emplace_back(b.boundary_count);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (unsigned side = 0; side < 2; ++side) {
      const EdgeEnd& end = side == 0 ? edges[e].end1 : edges[e].end2;
      require(end.block < blocks.size(), "edge " + std::to_string(e) + " names an unknown block");
      require(end.torus < blocks[end.block].boundary_count,
              end_name(blocks, end) + " is out of range");
      auto& slot = m.torus_use_[end.block][end.torus];
      require(!slot, end_name(blocks, end) + " is glued twice");
      slot = EndRef{e, side};
      Integer det = end.matrix.determinant();
      require(det == 1 || det == -1, end_name(blocks, end) + ": gluing matrix must have determinant +-1");
      require(end.matrix.a != 0,
              end_name(blocks, end) + ": a = 0 means the adjacent fibers are parallel and the torus is not a JSJ torus");
    }
    require(far_side_matrix(edges[e].end1.matrix) == edges[e].end2.matrix,
            "edge " + std::to_string(e) + ": end matrices are not inverse changes of basis");
  }
  m.blocks_ = std::move(blocks);
  m.edges_ = std::move(edges);
  return m;
}

std::optional<std::size_t> GraphManifold::block_index(const std::string& id) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].id == id) return i;
  return std::nullopt;
}

std::vector<EndRef> GraphManifold::ends_of(std::size_t block) const {
  std::vector<EndRef> out;
  for (const auto& slot : torus_use_.at(block))
    if (slot) out.push_back(*slot);
  return out;
}

std::optional<EndRef> GraphManifold::end_at(std::size_t block, unsigned torus) const {
  return torus_use_.at(block).at(torus);
}

std::vector<unsigned> GraphManifold::free_tori(std::size_t block) const {
  std::vector<unsigned> out;
  const auto& use = torus_use_.at(block);
  for (unsigned i = 0; i < use.size(); ++i)
    if (!use[i]) out.push_back(i);
  return out;
}

std::size_t GraphManifold::component_count() const {
  std::vector<std::size_t> parent(blocks_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = blocks_.size();
  for (const auto& e : edges_) {
    auto x = find(e.end1.block), y = find(e.end2.block);
    if (x != y) {
      parent[x] = y;
      --count;
    }
  }
  return count;
}

bool BlockHomology::is_zero(const std::vector<Integer>& v) const {
  require(v.size() == generator_count(), "homology vector has the wrong length");
  std::vector<Integer> w = smith.left * v;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < smith.rank) {
      if (w[i] % smith.invariants[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

BlockHomology h1_block(const Block& block, const std::vector<unsigned>& relative_to) {
  BlockHomology h;
  h.genus = block.genus;
  h.boundary_count = block.boundary_count;
  const std::size_t extra = relative_to.empty() ? 0 : relative_to.size() + 1;
  h.relations = IntegerMatrix(h.generator_count(), 1 + extra);
  for (unsigned i = 0; i < block.boundary_count; ++i) h.relations(h.boundary_coordinate(i), 0) = 1;
  for (std::size_t k = 0; k < relative_to.size(); ++k) {
    require(relative_to[k] < block.boundary_count, "relative torus out of range");
    h.relations(h.boundary_coordinate(relative_to[k]), 1 + k) = 1;
  }
  if (extra > 0) h.relations(h.fiber_coordinate(), extra) = 1;
  h.smith = smith_normal_form(h.relations);
  h.free_rank = h.generator_count() - h.smith.rank;
  for (const auto& d : h.smith.invariants)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

std::pair<Integer, Integer> neighbor_fiber_class(const GraphManifold& m, EndRef r) {
  require(r.edge < m.edges().size() && r.side < 2, "edge-end out of range");
  const auto& mat = m.end(r).matrix;
  return {mat.a, mat.b};
}

std::pair<Integer, Integer> neighbor_fiber_class(const GraphManifold& m, std::size_t block, unsigned torus) {
  require(block < m.blocks().size() && torus < m.blocks()[block].boundary_count, "torus out of range");
  auto r = m.end_at(block, torus);
  require(r.has_value(), "block '" + m.blocks()[block].id + "' torus " + std::to_string(torus) + " is free");
  return neighbor_fiber_class(m, *r);
}

std::vector<Integer> neighbor_fiber_vector(const GraphManifold& m, const BlockHomology& hom, EndRef r) {
  auto [a, b] = neighbor_fiber_class(m, r);
  std::vector<Integer> v(hom.generator_count());
  v[hom.boundary_coordinate(m.end(r).torus)] = a;
  v[hom.fiber_coordinate()] = b;
  return v;
}

CoverResult induced_cover(const GraphManifold& m, const GraphCover& cover) {
  const auto& blocks = m.blocks();
  const auto& edges = m.edges();
  require(!cover.vertices.empty(), "cover has no vertices");
  for (const auto& v : cover.vertices) require(v.over < blocks.size(), "cover vertex '" + v.id + "' lies over no block");
  for (const auto& le : cover.edges) {
    require(le.over < edges.size(), "lifted edge lies over no edge");
    require(le.end1 < cover.vertices.size() && le.end2 < cover.vertices.size(), "lifted edge names an unknown vertex");
  }

  // seen[vertex][torus]: edge-ends of the cover at each lifted boundary torus
  std::vector<std::vector<int>> seen(cover.vertices.size());
  for (std::size_t i = 0; i < cover.vertices.size(); ++i) seen[i].assign(blocks[cover.vertices[i].over].boundary_count, 0);
  for (const auto& le : cover.edges) {
    const GluedEdge& e = edges[le.over];
    for (auto [vert, end] : {std::pair{le.end1, &e.end1}, std::pair{le.end2, &e.end2}}) {
      if (cover.vertices[vert].over != end->block)
        fail(ErrorKind::InvalidInput, "cover vertex '" + cover.vertices[vert].id + "' does not lie over block '" +
                                          blocks[end->block].id + "' as its lifted edge requires");
      ++seen[vert][end->torus];
    }
  }
  for (std::size_t i = 0; i < cover.vertices.size(); ++i) {
    std::size_t b = cover.vertices[i].over;
    for (unsigned t = 0; t < seen[i].size(); ++t) {
      int expected = m.end_at(b, t) ? 1 : 0;
      if (seen[i][t] != expected)
        fail(ErrorKind::InvalidInput, "cover is not a local bijection at vertex '" + cover.vertices[i].id + "' (torus " +
                                          std::to_string(t) + " has " + std::to_string(seen[i][t]) + " lifted ends)");
    }
  }
  std::vector<std::size_t> fibre(blocks.size(), 0);
  for (const auto& v : cover.vertices) ++fibre[v.over];

  CoverResult out;
  out.degree = fibre[0];
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (fibre[b] != out.degree)
      fail(ErrorKind::InvalidInput, "cover has " + std::to_string(fibre[b]) + " vertices over block '" + blocks[b].id +
                                        "' but " + std::to_string(out.degree) + " over block '" + blocks[0].id + "'");

  std::vector<Block> lifted_blocks;
  for (const auto& v : cover.vertices) {
    Block b = blocks[v.over];
    b.id = v.id;
    lifted_blocks.push_back(b);
  }
  std::vector<GluedEdge> lifted_edges;
  for (const auto& le : cover.edges) {
    GluedEdge e = edges[le.over];
    e.end1.block = le.end1;
    e.end2.block = le.end2;
    lifted_edges.push_back(e);
  }
  out.manifold = GraphManifold::make(std::move(lifted_blocks), std::move(lifted_edges));
  out.components = out.manifold.component_count();
  return out;
}

GraphCover cover_from_permutations(const GraphManifold& m, std::size_t degree,
                                   const std::vector<std::vector<std::size_t>>& permutations) {
  require(degree >= 1, "cover degree must be positive");
  require(permutations.size() == m.edges().size(), "need one permutation per edge");
  GraphCover c;
  for (std::size_t b = 0; b < m.blocks().size(); ++b)
    for (std::size_t k = 0; k < degree; ++k) c.vertices.push_back({m.blocks()[b].id + "#" + std::to_string(k), b});
  for (std::size_t e = 0; e < m.edges().size(); ++e) {
    const auto& perm = permutations[e];
    require(perm.size() == degree, "permutation for edge " + std::to_string(e) + " has the wrong length");
    std::vector<bool> hit(degree, false);
    for (std::size_t k = 0; k < degree; ++k) {
      require(perm[k] < degree && !hit[perm[k]], "edge " + std::to_string(e) + " is not given a permutation");
      hit[perm[k]] = true;
      c.edges.push_back({e, m.edges()[e].end1.block * degree + k, m.edges()[e].end2.block * degree + perm[k]});
    }
  }
  return c;
}

GraphManifold retwist(const GraphManifold& m, const Retwist& r) {
  for (const auto& [block, shift] : r.shifts) {
    if (block >= m.blocks().size()) fail(ErrorKind::InvalidRetwist, "retwist names an unknown block");
    const Block& b = m.blocks()[block];
    if (shift.size() != b.boundary_count)
      fail(ErrorKind::InvalidRetwist, "retwist of block '" + b.id + "' needs one shift per boundary torus");
    Integer sum = 0;
    for (const auto& s : shift) sum += s;
    if (sum != 0) fail(ErrorKind::InvalidRetwist, "retwist of block '" + b.id + "' does not sum to zero");
  }
  auto shift_of = [&](const EdgeEnd& e) -> Integer {
    auto it = r.shifts.find(e.block);
    return it == r.shifts.end() ? Integer(0) : it->second[e.torus];
  };
  auto twisted = [&](const EdgeEnd& near, const EdgeEnd& far) {
    GluingMatrix g = near.matrix;
    Integer mf = shift_of(far);  // far section gains mf fibers
    g.p += mf * g.a;
    g.q += mf * g.b;
    Integer mn = shift_of(near);  // near section gains mn fibers
    g.b -= mn * g.a;
    g.q -= mn * g.p;
    return g;
  };
  std::vector<GluedEdge> edges = m.edges();
  for (auto& e : edges) {
    GluingMatrix g1 = twisted(e.end1, e.end2);
    GluingMatrix g2 = twisted(e.end2, e.end1);
    e.end1.matrix = g1;
    e.end2.matrix = g2;
  }
  return GraphManifold::make(m.blocks(), std::move(edges));
}

}  // namespace cubuland
