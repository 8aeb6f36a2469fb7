#include "cubuland/dual_complex.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace cubuland {

WallSystem::WallSystem(const Wallspace& ws) {
  require(ws.finite(), "dual construction needs a finite wallspace; expand a window first");
  const auto& walls = ws.walls();
  *this = WallSystem(walls.size(), [&](std::size_t i, Side si, std::size_t j, Side sj) {
    return sides_intersect(walls[i], si, walls[j], sj);
  });
}

WallSystem::WallSystem(std::size_t size, const Predicate& meets) : size_(size), table_(size * size * 4) {
  for (std::size_t i = 0; i < size; ++i)
    for (Side si = 0; si < 2; ++si)
      for (std::size_t j = 0; j < size; ++j)
        for (Side sj = 0; sj < 2; ++sj) {
          bool value = i == j ? si == sj : meets(i, si, j, sj);
          table_[((i * 2 + si) * size_ + j) * 2 + sj] = value ? 1 : 0;
        }
}

bool WallSystem::crosses(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  return meets(i, 0, j, 0) && meets(i, 0, j, 1) && meets(i, 1, j, 0) && meets(i, 1, j, 1);
}

bool WallSystem::consistent(const Orientation& x) const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if (!meets(i, x.sides[i], j, x.sides[j])) return false;
  return true;
}

bool WallSystem::flip_consistent(const Orientation& x, std::size_t k) const {
  Side flipped = static_cast<Side>(1 - x.sides[k]);
  for (std::size_t j = 0; j < size_; ++j)
    if (j != k && !meets(k, flipped, j, x.sides[j])) return false;
  return true;
}

WallSystem WallSystem::restricted(std::span<const std::size_t> walls) const {
  return WallSystem(walls.size(), [&](std::size_t i, Side si, std::size_t j, Side sj) {
    return meets(walls[i], si, walls[j], sj);
  });
}

std::optional<std::size_t> CubeComplex::find(const Orientation& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<Cube>& CubeComplex::cubes(std::size_t dim) const {
  static const std::vector<Cube> kEmpty;
  return dim < cells_.size() ? cells_[dim] : kEmpty;
}

std::size_t CubeComplex::cube_count(std::size_t dim) const { return cubes(dim).size(); }

std::optional<std::size_t> CubeComplex::find_cube(std::size_t dim, std::size_t base,
                                                  const std::vector<std::size_t>& walls) const {
  if (dim >= cell_index_.size()) return std::nullopt;
  auto it = cell_index_[dim].find({base, walls});
  if (it == cell_index_[dim].end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CubeComplex::hyperplane_of_wall(std::size_t wall) const {
  return wall < wall_to_hyperplane_.size() ? wall_to_hyperplane_[wall] : std::nullopt;
}

bool CubeComplex::hyperplanes_cross(std::size_t h1, std::size_t h2) const {
  return walls_.crosses(hyperplanes_[h1].wall, hyperplanes_[h2].wall);
}

std::vector<std::vector<std::size_t>> CubeComplex::crossing_graph() const {
  std::vector<std::vector<std::size_t>> adj(hyperplanes_.size());
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
    for (std::size_t j = 0; j < hyperplanes_.size(); ++j)
      if (hyperplanes_cross(i, j)) adj[i].push_back(j);
  return adj;
}

std::size_t CubeComplex::distance(std::size_t u, std::size_t v) const {
  const auto& a = vertices_[u].sides;
  const auto& b = vertices_[v].sides;
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

namespace {

Orientation flipped(Orientation x, std::size_t k) {
  x.sides[k] = static_cast<Side>(1 - x.sides[k]);
  return x;
}

}  // namespace

CubeComplex build_dual(WallSystem walls, Orientation start, BuildOptions options) {
  require(start.sides.size() == walls.size(), "start orientation does not match the wall count");
  if (!walls.consistent(start))
    fail(ErrorKind::InvalidInput, "start orientation is not pairwise consistent");

  CubeComplex c;
  c.walls_ = std::move(walls);
  const std::size_t n = c.walls_.size();

  // breadth-first flip search
  std::deque<std::size_t> queue;
  c.index_.emplace(start, 0);
  c.vertices_.push_back(std::move(start));
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) {
      if (!c.walls_.flip_consistent(c.vertices_[at], k)) continue;
      Orientation next = flipped(c.vertices_[at], k);
      if (c.index_.count(next)) continue;
      if (c.vertices_.size() >= options.max_vertices) {
        std::vector<Orientation> frontier;
        frontier.push_back(c.vertices_[at]);
        for (std::size_t q : queue) frontier.push_back(c.vertices_[q]);
        throw PartialResultError("vertex budget of " + std::to_string(options.max_vertices) +
                                     " exhausted with " + std::to_string(frontier.size()) +
                                     " vertices still unexplored",
                                 c.vertices_.size(), std::move(frontier));
      }
      c.index_.emplace(next, c.vertices_.size());
      c.vertices_.push_back(std::move(next));
      queue.push_back(c.vertices_.size() - 1);
    }
  }

  const std::size_t vcount = c.vertices_.size();
  // flip_to[v][k]: the vertex reached from v across wall k, if any
  std::vector<std::vector<std::size_t>> flip_to(vcount, std::vector<std::size_t>(n, std::numeric_limits<std::size_t>::max()));
  c.adjacency_.assign(vcount, {});
  for (std::size_t v = 0; v < vcount; ++v)
    for (std::size_t k = 0; k < n; ++k)
      if (auto w = c.find(flipped(c.vertices_[v], k))) {
        flip_to[v][k] = *w;
        c.adjacency_[v].push_back(*w);
      }

  c.cells_.assign(1, {});
  c.cell_index_.assign(1, {});
  for (std::size_t v = 0; v < vcount; ++v) {
    c.cell_index_[0].emplace(std::make_pair(v, std::vector<std::size_t>{}), v);
    c.cells_[0].push_back(Cube{v, {}, {v}});
  }

  // Grow commuting flip sets at every vertex; a cube is kept at its least vertex.
  struct Frame {
    std::vector<std::size_t> walls;
    std::vector<std::size_t> vertices;
  };
  for (std::size_t v = 0; v < vcount; ++v) {
    std::vector<Frame> stack{Frame{{}, {v}}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      std::size_t first = f.walls.empty() ? 0 : f.walls.back() + 1;
      for (std::size_t k = first; k < n; ++k) {
        Frame g{f.walls, f.vertices};
        bool ok = true;
        for (std::size_t x : f.vertices) {
          std::size_t y = flip_to[x][k];
          if (y == std::numeric_limits<std::size_t>::max()) {
            ok = false;
            break;
          }
          g.vertices.push_back(y);
        }
        if (!ok) continue;
        g.walls.push_back(k);
        std::sort(g.vertices.begin(), g.vertices.end());
        if (g.vertices.front() == v) {
          std::size_t dim = g.walls.size();
          if (c.cells_.size() <= dim) {
            c.cells_.resize(dim + 1);
            c.cell_index_.resize(dim + 1);
          }
          c.cell_index_[dim].emplace(std::make_pair(v, g.walls), c.cells_[dim].size());
          c.cells_[dim].push_back(Cube{v, g.walls, g.vertices});
        }
        stack.push_back(std::move(g));
      }
    }
  }
  // deterministic order within each dimension: by base vertex, then walls
  for (std::size_t d = 1; d < c.cells_.size(); ++d) {
    auto& cells = c.cells_[d];
    std::sort(cells.begin(), cells.end(), [](const Cube& a, const Cube& b) {
      return std::tie(a.base, a.walls) < std::tie(b.base, b.walls);
    });
    c.cell_index_[d].clear();
    for (std::size_t i = 0; i < cells.size(); ++i) c.cell_index_[d].emplace(std::make_pair(cells[i].base, cells[i].walls), i);
  }

  if (c.cells_.size() > 1)
    for (const auto& e : c.cells_[1]) c.edges_.push_back(Edge{e.vertices[0], e.vertices[1], e.walls[0]});

  c.wall_to_hyperplane_.assign(n, std::nullopt);
  std::vector<bool> separates(n, false);
  for (const auto& e : c.edges_) separates[e.wall] = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (!separates[k]) continue;
    Hyperplane h;
    h.wall = k;
    for (std::size_t v = 0; v < vcount; ++v) (c.vertices_[v].sides[k] == 0 ? h.side0 : h.side1).push_back(v);
    c.wall_to_hyperplane_[k] = c.hyperplanes_.size();
    c.hyperplanes_.push_back(std::move(h));
  }
  return c;
}

CubeComplex build_dual(const Wallspace& ws, const Basepoint& basepoint, BuildOptions options) {
  WallSystem walls(ws);
  Orientation start = principal_orientation(ws, basepoint);
  return build_dual(std::move(walls), std::move(start), options);
}

std::vector<std::size_t> Subcomplex::vertex_list() const {
  std::vector<std::size_t> out;
  if (cells.empty()) return out;
  for (std::size_t v = 0; v < cells[0].size(); ++v)
    if (cells[0][v]) out.push_back(v);
  return out;
}

std::size_t Subcomplex::cell_count(std::size_t dim) const {
  if (dim >= cells.size()) return 0;
  return static_cast<std::size_t>(std::count(cells[dim].begin(), cells[dim].end(), true));
}

namespace {

Subcomplex empty_subcomplex(const CubeComplex& c) {
  Subcomplex s;
  for (std::size_t d = 0; d <= c.dimension(); ++d) s.cells.emplace_back(c.cube_count(d), false);
  return s;
}

}  // namespace

Subcomplex spanned_subcomplex(const CubeComplex& c, std::span<const std::size_t> vertices) {
  Subcomplex s = empty_subcomplex(c);
  for (std::size_t v : vertices) {
    require(v < c.vertex_count(), "vertex index out of range");
    s.cells[0][v] = true;
  }
  for (std::size_t d = 1; d <= c.dimension(); ++d) {
    const auto& cubes = c.cubes(d);
    for (std::size_t i = 0; i < cubes.size(); ++i)
      s.cells[d][i] = std::all_of(cubes[i].vertices.begin(), cubes[i].vertices.end(),
                                  [&](std::size_t v) { return s.cells[0][v]; });
  }
  return s;
}

Subcomplex whole_complex(const CubeComplex& c) {
  Subcomplex s;
  for (std::size_t d = 0; d <= c.dimension(); ++d) s.cells.emplace_back(c.cube_count(d), true);
  return s;
}

std::size_t median(const CubeComplex& c, std::size_t u, std::size_t v, std::size_t w) {
  require(u < c.vertex_count() && v < c.vertex_count() && w < c.vertex_count(), "vertex index out of range");
  const auto& a = c.vertices()[u].sides;
  const auto& b = c.vertices()[v].sides;
  const auto& d = c.vertices()[w].sides;
  Orientation m;
  m.sides.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m.sides[i] = static_cast<Side>(a[i] + b[i] + d[i] >= 2 ? 1 : 0);
  auto found = c.find(m);
  if (!found)
    fail(ErrorKind::StructuralFailure, "majority orientation of vertices " + std::to_string(u) + ", " +
                                           std::to_string(v) + ", " + std::to_string(w) +
                                           " is not a vertex (truncated component?)");
  return *found;
}

Subcomplex convex_hull(const CubeComplex& c, std::span<const std::size_t> vertices) {
  require(!vertices.empty(), "convex hull of an empty vertex set");
  const std::size_t n = c.walls().size();
  // side shared by the whole set on each wall, or 2 if the set straddles it
  std::vector<int> fixed(n);
  for (std::size_t k = 0; k < n; ++k) {
    fixed[k] = c.vertices()[vertices[0]].sides[k];
    for (std::size_t v : vertices)
      if (c.vertices()[v].sides[k] != fixed[k]) {
        fixed[k] = 2;
        break;
      }
  }
  std::vector<std::size_t> hull;
  for (std::size_t x = 0; x < c.vertex_count(); ++x) {
    bool inside = true;
    for (std::size_t k = 0; k < n && inside; ++k)
      if (fixed[k] != 2 && c.vertices()[x].sides[k] != fixed[k]) inside = false;
    if (inside) hull.push_back(x);
  }
  return spanned_subcomplex(c, hull);
}

namespace {

void add_closed_cube(const CubeComplex& c, const Cube& q, Subcomplex& s) {
  const std::size_t k = q.walls.size();
  for (std::size_t v : q.vertices) s.cells[0][v] = true;
  // every face: pick a subset of the cube's walls and a vertex of the cube
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> face_walls;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) face_walls.push_back(q.walls[i]);
    for (std::size_t x : q.vertices) {
      // least vertex of the face through x spanned by face_walls
      std::size_t least = x;
      for (std::size_t y : q.vertices) {
        bool same_face = true;
        for (std::size_t i = 0; i < k && same_face; ++i)
          if (!(mask >> i & 1) && c.vertices()[y].sides[q.walls[i]] != c.vertices()[x].sides[q.walls[i]])
            same_face = false;
        if (same_face) least = std::min(least, y);
      }
      if (auto id = c.find_cube(face_walls.size(), least, face_walls)) s.cells[face_walls.size()][*id] = true;
    }
  }
}

}  // namespace

Subcomplex cubical_neighborhood(const CubeComplex& c, const Subcomplex& sub, std::size_t k) {
  Subcomplex current = sub;
  for (std::size_t step = 0; step < k; ++step) {
    Subcomplex next = current;
    for (std::size_t d = 0; d <= c.dimension(); ++d)
      for (const auto& q : c.cubes(d)) {
        bool meets = std::any_of(q.vertices.begin(), q.vertices.end(),
                                 [&](std::size_t v) { return current.cells[0][v]; });
        if (meets) add_closed_cube(c, q, next);
      }
    current = std::move(next);
  }
  return current;
}

namespace {

std::vector<std::size_t> bfs_distances(const CubeComplex& c, const std::vector<std::size_t>& sources) {
  std::vector<std::size_t> dist(c.vertex_count(), std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue;
  for (std::size_t s : sources)
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : c.neighbors()[v])
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

Orientation restrict_orientation(const Orientation& x, std::span<const std::size_t> walls) {
  Orientation out;
  for (std::size_t w : walls) out.sides.push_back(x.sides[w]);
  return out;
}

}  // namespace

EssentialCore essential_core(const CubeComplex& c, const Subcomplex& sub, std::size_t horizon) {
  require(horizon >= 1, "essential core horizon must be at least 1");
  auto members = sub.vertex_list();
  require(!members.empty(), "essential core of an empty subcomplex");

  EssentialCore out;
  for (const auto& h : c.hyperplanes()) {
    std::vector<std::size_t> carrier;
    for (const auto& e : c.edges())
      if (e.wall == h.wall) {
        carrier.push_back(e.u);
        carrier.push_back(e.v);
      }
    auto dist = bfs_distances(c, carrier);
    bool deep[2] = {false, false};
    for (std::size_t v : members)
      if (dist[v] >= horizon) deep[c.vertices()[v].sides[h.wall]] = true;
    if (deep[0] && deep[1]) out.walls.push_back(h.wall);
  }
  out.core = build_dual(c.walls().restricted(out.walls), restrict_orientation(c.vertices()[members[0]], out.walls));
  return out;
}

ProductDecomposition decompose_product(const CubeComplex& c) {
  const auto& hs = c.hyperplanes();
  const std::size_t m = hs.size();
  // components of the non-crossing graph on hyperplanes
  std::vector<std::size_t> component(m, std::numeric_limits<std::size_t>::max());
  std::size_t count = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (component[s] != std::numeric_limits<std::size_t>::max()) continue;
    std::deque<std::size_t> queue{s};
    component[s] = count;
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < m; ++b)
        if (b != a && component[b] == std::numeric_limits<std::size_t>::max() && !c.hyperplanes_cross(a, b)) {
          component[b] = count;
          queue.push_back(b);
        }
    }
    ++count;
  }

  ProductDecomposition out;
  const Orientation& base = c.vertices()[0];
  for (std::size_t comp = 0; comp < count; ++comp) {
    ProductFactor f;
    for (std::size_t h = 0; h < m; ++h)
      if (component[h] == comp) f.walls.push_back(hs[h].wall);
    f.complex = build_dual(c.walls().restricted(f.walls), restrict_orientation(base, f.walls));
    out.factors.push_back(std::move(f));
  }

  std::size_t product = 1;
  for (const auto& f : out.factors) product *= f.complex.vertex_count();
  out.is_product = product == c.vertex_count();
  if (!out.is_product) {
    // walk factor-vertex tuples in mixed radix until one is missing from c
    std::vector<std::size_t> digits(out.factors.size(), 0);
    while (true) {
      Orientation x = base;
      for (std::size_t i = 0; i < out.factors.size(); ++i) {
        const auto& fv = out.factors[i].complex.vertices()[digits[i]];
        for (std::size_t j = 0; j < out.factors[i].walls.size(); ++j) x.sides[out.factors[i].walls[j]] = fv.sides[j];
      }
      if (!c.find(x)) {
        out.obstruction = x;
        break;
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == out.factors[i].complex.vertex_count()) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return out;
}

EmbeddingCheck is_isometrically_embedded(const CubeComplex& c, const Subcomplex& sub) {
  auto members = sub.vertex_list();
  require(!members.empty(), "isometric embedding check on an empty subcomplex");
  std::vector<std::vector<std::size_t>> adj(c.vertex_count());
  if (sub.cells.size() > 1)
    for (std::size_t i = 0; i < c.edges().size(); ++i)
      if (sub.cells[1][i]) {
        adj[c.edges()[i].u].push_back(c.edges()[i].v);
        adj[c.edges()[i].v].push_back(c.edges()[i].u);
      }

  EmbeddingCheck out;
  for (std::size_t s : members) {
    std::vector<std::size_t> dist(c.vertex_count(), std::numeric_limits<std::size_t>::max());
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[v])
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    for (std::size_t t : members) {
      if (dist[t] == std::numeric_limits<std::size_t>::max())
        fail(ErrorKind::InvalidInput, "subcomplex 1-skeleton is disconnected (vertices " + std::to_string(s) +
                                          " and " + std::to_string(t) + ")");
      if (out.isometric && dist[t] != c.distance(s, t)) {
        out.isometric = false;
        out.violation = std::make_pair(s, t);
      }
    }
  }
  return out;
}

}  // namespace cubuland
