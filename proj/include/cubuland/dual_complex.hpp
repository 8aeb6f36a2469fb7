#pragma once

#include "cubuland/error.hpp"
#include "cubuland/wallspace.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cubuland {

/// Pairwise side-intersection table of a finite family of walls. This is all
/// the dual construction looks at, so walls need not come from geometry.
class WallSystem {
 public:
  using Predicate = std::function<bool(std::size_t, Side, std::size_t, Side)>;

  WallSystem() = default;
  explicit WallSystem(const Wallspace& ws);
  WallSystem(std::size_t size, const Predicate& meets);

  std::size_t size() const { return size_; }

  bool meets(std::size_t i, Side si, std::size_t j, Side sj) const {
    return table_[((i * 2 + si) * size_ + j) * 2 + sj] != 0;
  }
  bool crosses(std::size_t i, std::size_t j) const;

  /// Every pair of chosen sides meets.
  bool consistent(const Orientation& x) const;

  /// For a consistent x: is x with wall k flipped still consistent?
  bool flip_consistent(const Orientation& x, std::size_t k) const;

  /// Sub-system on the given walls, renumbered 0..walls.size()-1 in order.
  WallSystem restricted(std::span<const std::size_t> walls) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> table_;
};

struct BuildOptions {
  std::size_t max_vertices = 1u << 20;
};

/// A k-cube, recorded at its least vertex (discovery order) with sorted walls.
struct Cube {
  std::size_t base = 0;
  std::vector<std::size_t> walls;
  std::vector<std::size_t> vertices;  // sorted
};

struct Edge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;
  std::size_t wall = 0;
};

struct Hyperplane {
  std::size_t wall = 0;
  std::vector<std::size_t> side0;
  std::vector<std::size_t> side1;
};

/// Cube complex dual to a finite wall system: vertices are consistent
/// orientations reachable from a start orientation by single flips.
class CubeComplex {
 public:
  const WallSystem& walls() const { return walls_; }
  const std::vector<Orientation>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::optional<std::size_t> find(const Orientation& x) const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// cubes(0) are the vertices, cubes(1) the edges, and so on.
  const std::vector<Cube>& cubes(std::size_t dim) const;
  std::size_t cube_count(std::size_t dim) const;
  std::size_t dimension() const { return cells_.empty() ? 0 : cells_.size() - 1; }
  std::optional<std::size_t> find_cube(std::size_t dim, std::size_t base,
                                       const std::vector<std::size_t>& walls) const;

  const std::vector<std::vector<std::size_t>>& neighbors() const { return adjacency_; }

  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  /// Hyperplane index of a wall, if the wall separates some edge.
  std::optional<std::size_t> hyperplane_of_wall(std::size_t wall) const;
  bool hyperplanes_cross(std::size_t h1, std::size_t h2) const;
  std::vector<std::vector<std::size_t>> crossing_graph() const;

  /// Number of walls on which two vertices differ.
  std::size_t distance(std::size_t u, std::size_t v) const;

 private:
  friend CubeComplex build_dual(WallSystem walls, Orientation start, BuildOptions options);

  WallSystem walls_;
  std::vector<Orientation> vertices_;
  std::map<Orientation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Cube>> cells_;
  std::vector<std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t>> cell_index_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::optional<std::size_t>> wall_to_hyperplane_;
};

/// Raised when the vertex budget runs out before the component is complete.
class PartialResultError : public Error {
 public:
  PartialResultError(const std::string& message, std::size_t discovered, std::vector<Orientation> frontier)
      : Error(ErrorKind::BudgetExceeded, message), discovered_(discovered), frontier_(std::move(frontier)) {}

  std::size_t discovered() const { return discovered_; }
  const std::vector<Orientation>& frontier() const { return frontier_; }

 private:
  std::size_t discovered_;
  std::vector<Orientation> frontier_;
};

/// Breadth-first flip search from `start` (which must be consistent); wall
/// ids are tried in increasing order at every vertex.
CubeComplex build_dual(WallSystem walls, Orientation start, BuildOptions options = {});

/// Dual complex of a finite wallspace, starting at the principal orientation
/// of the basepoint.
CubeComplex build_dual(const Wallspace& ws, const Basepoint& basepoint, BuildOptions options = {});

/// A subcomplex given by membership flags per cell dimension.
struct Subcomplex {
  std::vector<std::vector<bool>> cells;

  bool contains_vertex(std::size_t v) const { return !cells.empty() && cells[0][v]; }
  std::vector<std::size_t> vertex_list() const;
  std::size_t cell_count(std::size_t dim) const;

  friend bool operator==(const Subcomplex&, const Subcomplex&) = default;
};

/// Union of the closed cubes all of whose vertices lie in `vertices`.
Subcomplex spanned_subcomplex(const CubeComplex& c, std::span<const std::size_t> vertices);
Subcomplex whole_complex(const CubeComplex& c);

/// Coordinatewise majority; throws StructuralFailure if it is not a vertex.
std::size_t median(const CubeComplex& c, std::size_t u, std::size_t v, std::size_t w);

/// Subcomplex spanned by the vertices no hyperplane separates from `vertices`.
Subcomplex convex_hull(const CubeComplex& c, std::span<const std::size_t> vertices);

/// k-fold union of the closed cubes meeting the current subcomplex.
Subcomplex cubical_neighborhood(const CubeComplex& c, const Subcomplex& sub, std::size_t k);

struct EssentialCore {
  std::vector<std::size_t> walls;  // retained wall ids of c
  CubeComplex core;
};

/// A wall is kept when both of its halfspaces contain a vertex of `sub` at
/// 1-skeleton distance >= horizon from the hyperplane's carrier. The core is
/// the dual of the kept walls (a single vertex when none are kept).
EssentialCore essential_core(const CubeComplex& c, const Subcomplex& sub, std::size_t horizon);

struct ProductFactor {
  std::vector<std::size_t> walls;  // wall ids of c
  CubeComplex complex;
};

struct ProductDecomposition {
  std::vector<ProductFactor> factors;
  bool is_product = true;
  std::optional<Orientation> obstruction;  // a combination of factor vertices missing from c

  bool irreducible() const { return factors.size() <= 1; }
};

/// Splits hyperplanes into the components of the complement of the crossing
/// graph and builds one factor per component.
ProductDecomposition decompose_product(const CubeComplex& c);

struct EmbeddingCheck {
  bool isometric = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Compares path distance inside the subcomplex with the number of separating
/// hyperplanes. The subcomplex must have a connected 1-skeleton.
EmbeddingCheck is_isometrically_embedded(const CubeComplex& c, const Subcomplex& sub);

}  // namespace cubuland
