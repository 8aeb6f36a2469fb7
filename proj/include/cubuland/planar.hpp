#pragma once

#include "cubuland/dual_complex.hpp"
#include "cubuland/wallspace.hpp"

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace cubuland {

/// A wall that does not cut the plane: both closed halfspaces contain it, and
/// the designated side is the one frozen when the plane's complex is cut out.
/// The line geometry is only used to validate the designated sides.
struct ExtraWall {
  Line line;
  Side side = 0;
};

struct PeriodicArrangement {
  Wallspace lines;  // periodic-planar kind
  std::vector<ExtraWall> extra_walls;
};

/// Validates the kind and that there is at least one line.
PeriodicArrangement make_arrangement(Wallspace periodic, std::vector<ExtraWall> extra_walls = {});

using IntVector = std::pair<Integer, Integer>;

struct ParallelFamily {
  IntVector direction;  // primitive, first nonzero coordinate positive
  IntVector normal;     // primitive normal used for offsets
  Integer spacing;      // offset period of lattice translates along the normal
  std::vector<std::size_t> entries;  // indices into the arrangement's line entries
};

struct ParallelFamilyReport {
  std::vector<ParallelFamily> families;
  std::size_t n = 0;
  std::vector<IntVector> directions;
};

ParallelFamilyReport parallel_families(const PeriodicArrangement& arr);

/// Per family, the multiplicities of the line groups met within one period,
/// in increasing offset order. All ones means the factor is a line.
struct CombinatorialFlat {
  std::size_t n = 0;
  std::vector<std::vector<int>> period_patterns;
  bool standard_tiling = true;
};

struct DualFlat {
  Window window;            // after the corner nudge
  Wallspace window_walls;   // finite-planar expansion
  CubeComplex complex;
  CombinatorialFlat flat;
  std::vector<std::vector<std::size_t>> family_walls;   // wall ids per family
  std::vector<std::vector<int>> window_patterns;        // group multiplicities per family in the window
};

/// Moves a window whose corner lies on a line, by half the smallest gap
/// between parallel lines along the direction (1, r) that no family is
/// parallel to; halves the step until every corner is off the lines.
Window nudge_window(const PeriodicArrangement& arr, const Window& window,
                    std::size_t wall_budget = kDefaultWallBudget);

/// Dual of the window's lines, certified to be the product of one chain of
/// cubes per family (cube dimension = number of coinciding lines).
DualFlat dual_flat(const PeriodicArrangement& arr, const Window& window,
                   std::size_t wall_budget = kDefaultWallBudget);

struct YComplex {
  DualFlat flat;
  CubeComplex ambient;  // dual of window lines plus extra walls
  std::vector<std::size_t> essential_walls;
  std::vector<std::size_t> extra_walls;
  Subcomplex y;
};

/// Cuts the plane's complex out of the ambient dual by freezing every extra
/// wall to its designated side, and certifies it against dual_flat.
YComplex build_Y(const PeriodicArrangement& arr, const Window& window,
                 std::size_t wall_budget = kDefaultWallBudget);

/// Convex hull of the vertices obtained by letting the extra walls take
/// either side; it is the Y complex times a cube of dimension #extra walls.
Subcomplex relaxed_hull(const YComplex& y);

struct FlatCase {
  std::size_t n = 0;
  DualFlat flat;
};

struct TwoFamilies {
  ParallelFamilyReport report;
};

using FamilyClassification = std::variant<FlatCase, TwoFamilies>;

/// At least three directions: a certified flat of that dimension. Exactly
/// two: TwoFamilies. One: BelowMinimum.
FamilyClassification classify_families(const PeriodicArrangement& arr, const Window& window,
                                       std::size_t wall_budget = kDefaultWallBudget);

/// A rational point in the window lying on none of the given lines.
Point generic_point(const Wallspace& finite_planar, const Window& window);

}  // namespace cubuland
