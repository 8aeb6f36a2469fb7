#pragma once

#include "cubuland/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace cubuland {

struct Point {
  Rational x;
  Rational y;
};

/// The line a*x + b*y = c with (a, b, c) a primitive integer triple and the
/// first nonzero entry of (a, b) positive. Side 0 of the line is the closed
/// half-plane a*x + b*y <= c, side 1 is a*x + b*y >= c.
struct Line {
  Integer a;
  Integer b;
  Integer c;

  friend bool operator==(const Line&, const Line&) = default;
  friend std::strong_ordering operator<=>(const Line& l, const Line& r);
};

/// Canonicalizes a rational triple; rejects (A, B) = (0, 0).
Line make_line(const Rational& a, const Rational& b, const Rational& c);

/// a*x + b*y for the line's normal.
Rational evaluate(const Line& line, const Point& p);

bool parallel(const Line& l, const Line& r);

/// Primitive normal (a, b) / gcd(a, b); equal for parallel lines.
std::pair<Integer, Integer> primitive_normal(const Line& line);

/// Position of the line along its primitive normal: the value of
/// primitive_normal . p on the line.
Rational normal_offset(const Line& line);

struct Bipartition {
  std::vector<int> side0;  // sorted
  std::vector<int> side1;  // sorted
};

struct HalfplanePair {
  Line line;
};

using WallGeometry = std::variant<Bipartition, HalfplanePair>;

struct Wall {
  std::size_t id = 0;
  std::size_t entry = 0;  // index of the source entry (multiplicity copies share it)
  WallGeometry geometry;
};

enum class WallspaceKind { FiniteBipartition, FinitePlanar, PeriodicPlanar };

struct LineEntry {
  Line line;
  int multiplicity = 1;
};

struct BipartitionEntry {
  Bipartition wall;
  int multiplicity = 1;
};

/// Translation lattice spanned by two independent integer vectors.
struct Lattice {
  std::array<Integer, 2> u;
  std::array<Integer, 2> w;
};

/// Closed axis-parallel box [x0, x1] x [y0, y1].
struct Window {
  Rational x0, y0, x1, y1;
};

/// A finite or periodic collection of walls. Coinciding walls are recorded
/// once with a multiplicity; walls() expands them into distinct copies.
class Wallspace {
 public:
  static Wallspace bipartition(int points, std::vector<BipartitionEntry> entries);
  static Wallspace planar(std::vector<LineEntry> entries);
  static Wallspace periodic(Lattice lattice, std::vector<LineEntry> entries);

  WallspaceKind kind() const { return kind_; }
  bool finite() const { return kind_ != WallspaceKind::PeriodicPlanar; }

  /// Expanded walls (one per multiplicity copy). Empty for the periodic kind,
  /// whose walls are infinite in number.
  const std::vector<Wall>& walls() const { return walls_; }

  const std::vector<LineEntry>& line_entries() const { return lines_; }
  const std::vector<BipartitionEntry>& bipartition_entries() const { return bipartitions_; }
  int point_count() const { return points_; }
  const std::optional<Lattice>& lattice() const { return lattice_; }

 private:
  void expand();

  WallspaceKind kind_ = WallspaceKind::FinitePlanar;
  int points_ = 0;
  std::vector<LineEntry> lines_;
  std::vector<BipartitionEntry> bipartitions_;
  std::optional<Lattice> lattice_;
  std::vector<Wall> walls_;
};

using Side = std::uint8_t;

/// A choice of side for every wall of a finite wallspace, indexed by wall id.
struct Orientation {
  std::vector<Side> sides;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

/// Whether the chosen closed sides of two walls meet. Exact. Multiplicity
/// copies of one bipartition wall always meet, so copies cross.
bool sides_intersect(const Wall& w1, Side s1, const Wall& w2, Side s2);

/// All four side pairs intersect.
bool cross(const Wall& w1, const Wall& w2);

/// A point id (bipartition kind) or a rational point (planar kinds).
using Basepoint = std::variant<int, Point>;

/// The orientation choosing, on each wall, the side containing the basepoint.
Orientation principal_orientation(const Wallspace& ws, const Basepoint& basepoint);

constexpr std::size_t kDefaultWallBudget = 24;

/// All lattice translates of the listed lines meeting the closed window,
/// multiplicities preserved, sorted by canonical form.
Wallspace expand_window(const Wallspace& ws, const Window& window,
                        std::size_t wall_budget = kDefaultWallBudget);

}  // namespace cubuland
