#pragma once

#include "cubuland/integer_matrix.hpp"
#include "cubuland/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubuland {

/// A trivial circle bundle over an oriented surface of genus `genus` with
/// `boundary_count` boundary circles.
struct Block {
  std::string id;
  unsigned genus = 0;
  unsigned boundary_count = 1;
};

/// Far-side classes in the near (section c, fiber h) basis of a boundary torus:
///   fiber'   = a*c + b*h
///   section' = p*c + q*h
/// Written as the matrix [[a, p], [b, q]].
struct GluingMatrix {
  Integer a, b, p, q;

  Integer determinant() const { return a * q - b * p; }
  friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

/// The matrix the far side must carry for the two descriptions of one torus
/// to be mutually inverse changes of basis. Requires determinant +-1.
GluingMatrix far_side_matrix(const GluingMatrix& near);

struct EdgeEnd {
  std::size_t block = 0;
  unsigned torus = 0;
  GluingMatrix matrix;
};

struct GluedEdge {
  EdgeEnd end1;
  EdgeEnd end2;
};

/// Names one end of one edge.
struct EndRef {
  std::size_t edge = 0;
  unsigned side = 0;  // 0 = end1, 1 = end2

  friend auto operator<=>(const EndRef&, const EndRef&) = default;
};

/// Validated graph of blocks glued along tori. Loops and multi-edges are
/// allowed; boundary tori not used by any edge are free.
class GraphManifold {
 public:
  /// Throws InvalidInput on: non-hyperbolic base, a torus used twice or out
  /// of range, determinant not +-1, a = 0 on either end, incoherent end
  /// matrices, or no edges at all.
  static GraphManifold make(std::vector<Block> blocks, std::vector<GluedEdge> edges);

  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<GluedEdge>& edges() const { return edges_; }
  std::optional<std::size_t> block_index(const std::string& id) const;

  const EdgeEnd& end(EndRef r) const { return r.side == 0 ? edges_[r.edge].end1 : edges_[r.edge].end2; }
  const EdgeEnd& opposite(EndRef r) const { return r.side == 0 ? edges_[r.edge].end2 : edges_[r.edge].end1; }

  /// Ends attached to a block, ordered by torus index.
  std::vector<EndRef> ends_of(std::size_t block) const;
  std::optional<EndRef> end_at(std::size_t block, unsigned torus) const;
  std::vector<unsigned> free_tori(std::size_t block) const;
  bool fully_glued(std::size_t block) const { return free_tori(block).empty(); }

  std::size_t component_count() const;

 private:
  std::vector<Block> blocks_;
  std::vector<GluedEdge> edges_;
  std::vector<std::vector<std::optional<EndRef>>> torus_use_;  // [block][torus]
};

/// First homology of circle x surface, presented on generators
///   handles x_0..x_{2g-1}, boundary classes c_0..c_{b-1}, fiber h
/// with the single relation c_0 + ... + c_{b-1} = 0.
struct BlockHomology {
  unsigned genus = 0;
  unsigned boundary_count = 0;
  IntegerMatrix relations;  // generators x relations
  SmithForm smith;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariants > 1

  std::size_t generator_count() const { return 2 * genus + boundary_count + 1; }
  std::size_t boundary_coordinate(unsigned i) const { return 2 * genus + i; }
  std::size_t fiber_coordinate() const { return 2 * genus + boundary_count; }

  /// True iff the coordinate vector is a combination of the relations.
  bool is_zero(const std::vector<Integer>& v) const;
};

/// With `relative_to` nonempty, homology relative to those boundary tori:
/// their section classes and the fiber are added to the relations.
BlockHomology h1_block(const Block& block, const std::vector<unsigned>& relative_to = {});

/// Class of the far side's fiber in the near block: (a, b) as a*c_i + b*h.
std::pair<Integer, Integer> neighbor_fiber_class(const GraphManifold& m, EndRef r);
/// Same class addressed by (block, torus); a free torus is InvalidInput.
std::pair<Integer, Integer> neighbor_fiber_class(const GraphManifold& m, std::size_t block, unsigned torus);
/// The class as a coordinate vector in h1_block's generators.
std::vector<Integer> neighbor_fiber_vector(const GraphManifold& m, const BlockHomology& hom, EndRef r);

/// Covering map of the underlying graph, given by the lifts of its vertices
/// and edges.
struct GraphCover {
  struct Vertex {
    std::string id;
    std::size_t over = 0;  // block index
  };
  struct LiftedEdge {
    std::size_t over = 0;  // edge index
    std::size_t end1 = 0;  // cover vertex index
    std::size_t end2 = 0;
  };
  std::vector<Vertex> vertices;
  std::vector<LiftedEdge> edges;
};

struct CoverResult {
  GraphManifold manifold;
  std::size_t degree = 0;
  std::size_t components = 0;
};

/// Lifts every block with the same genus and boundary count and copies each
/// end matrix along the lifted edges. InvalidInput names the first cover
/// vertex where the map is not a local bijection on edge-ends.
CoverResult induced_cover(const GraphManifold& m, const GraphCover& cover);

/// The cover with vertices (v, k), k < degree, where lift k of edge e runs
/// from (end1, k) to (end2, permutations[e][k]).
GraphCover cover_from_permutations(const GraphManifold& m, std::size_t degree,
                                   const std::vector<std::vector<std::size_t>>& permutations);

/// Change of section c_i -> c_i + m_i*h in each listed block.
struct Retwist {
  std::map<std::size_t, std::vector<Integer>> shifts;  // block -> m per torus
};

/// InvalidRetwist if some block's shifts do not sum to zero or have the wrong
/// length.
GraphManifold retwist(const GraphManifold& m, const Retwist& r);

}  // namespace cubuland
