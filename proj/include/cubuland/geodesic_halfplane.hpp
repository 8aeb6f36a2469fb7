#pragma once

#include "cubuland/dual_complex.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cubuland {

enum class RuleKind { Always, Never, Within };

/// How two concrete hyperplanes crossing the geodesic at positions q, q'
/// interact: Always cross, Never cross, or cross iff |q - q'| <= radius.
struct CrossRule {
  RuleKind kind = RuleKind::Never;
  std::size_t radius = 0;

  friend bool operator==(const CrossRule&, const CrossRule&) = default;
};

struct Orbit {
  std::string id;
  std::size_t position = 0;  // in [0, period)
};

struct RuleEntry {
  std::string first;
  std::string second;
  CrossRule rule;
};

/// Hyperplanes along a bi-infinite geodesic, periodic under a shift by
/// `period` positions. Orbit o has concrete translates at pos(o) + k*period.
class GeodesicWallPattern {
 public:
  static GeodesicWallPattern make(std::size_t period, std::vector<Orbit> orbits, const std::vector<RuleEntry>& rules);

  std::size_t period() const { return period_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  const CrossRule& rule(std::size_t o1, std::size_t o2) const { return rules_[o1 * orbits_.size() + o2]; }
  std::optional<std::size_t> orbit_index(const std::string& id) const;

  /// Orbit of the hyperplane at an absolute position, if one sits there.
  std::optional<std::size_t> orbit_at(long long position) const;
  bool concrete_cross(long long q1, long long q2) const;

  /// Largest Within radius over all rules (0 if there are none).
  std::size_t max_radius() const;
  std::size_t minimum_window() const { return 4 * period_ * (max_radius() + 1); }

  /// Rules as unordered pairs (first <= second by orbit index), for output.
  std::vector<RuleEntry> rule_entries() const;

 private:
  std::size_t period_ = 1;
  std::vector<Orbit> orbits_;
  std::vector<CrossRule> rules_;
  std::vector<long long> orbit_by_residue_;  // -1 where no orbit sits
};

struct PatternViolation {
  enum class Kind { Betweenness, SameOrbitCrossing } kind;
  std::array<long long, 3> positions;  // for SameOrbitCrossing the middle entry repeats the first
};

struct PatternCheck {
  std::optional<PatternViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks, on positions [0, window_len), that for h < h' < h'' with h and h''
/// crossing, h' crosses one of them, and that no orbit crosses its translates.
PatternCheck validate_pattern(const GeodesicWallPattern& p, std::size_t window_len);

struct PatternClass {
  enum class Case { UnboundedCrossing, BoundedCrossing } kind;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // orbits (a, b) for the unbounded case
  std::size_t radius = 0;                                       // for the bounded case
};

/// UnboundedCrossing with the first Always pair of distinct orbits, else
/// BoundedCrossing with the largest Within radius.
PatternClass classify(const GeodesicWallPattern& p);

struct ABPartition {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::size_t> A;
  std::vector<std::size_t> B;
  bool witness_in_B = false;  // set if the witness a itself lands in B; needs manual review
};

/// o goes to B iff it always crosses the witness orbit a, otherwise to A;
/// then every A hyperplane before a B hyperplane must cross it on the
/// validation window (StructuralFailure otherwise).
ABPartition partition_AB(const GeodesicWallPattern& p);

struct HalfplaneComplex {
  std::size_t window_len = 0;          // hyperplane positions along the boundary geodesic
  std::vector<long long> positions;    // positions carrying a hyperplane, increasing
  std::vector<bool> in_A;              // per wall
  CubeComplex hull;                    // dual of the window's hyperplanes: cubical hull of the geodesic
  Subcomplex halfplane;
  std::vector<std::size_t> boundary;   // hull vertex ids of the geodesic, in order
  std::size_t vertex_count() const { return halfplane.cell_count(0); }
  std::size_t edge_count() const { return halfplane.cell_count(1); }
  std::size_t square_count() const { return halfplane.cell_count(2); }
};

/// Vertices (x, x') with x <= x' on the geodesic: A-walls take x's side,
/// B-walls take x''s side. Certified to be a square complex containing the
/// geodesic with isometrically embedded 1-skeleton.
HalfplaneComplex build_halfplane(const GeodesicWallPattern& p, std::size_t window_len);

/// Cubical hull of the geodesic over `periods` periods of the pattern.
CubeComplex geodesic_hull(const GeodesicWallPattern& p, std::size_t periods);

/// Vertices added per period once the bounded-crossing hull has stabilised.
std::size_t hull_vertices_per_period(const GeodesicWallPattern& p);

struct HalfplaneFactor {
  std::size_t which = 0;  // 0 = alpha, 1 = beta
  HalfplaneComplex halfplane;
  std::size_t line_len = 0;  // edges of the line factor window
  std::size_t product_vertex_count = 0;
};

struct CocompactHull {
  std::size_t alpha_per_period = 0;
  std::size_t beta_per_period = 0;
  std::size_t vertices_per_period = 0;
};

using TwoPatternClass = std::variant<HalfplaneFactor, CocompactHull>;

/// A half-plane in either pattern (alpha preferred) gives a half-plane times
/// a line window; otherwise the product hull is cocompact.
TwoPatternClass classify_two_patterns(const GeodesicWallPattern& alpha, const GeodesicWallPattern& beta,
                                      std::size_t window_len);

}  // namespace cubuland
