#include "cubuland/geodesic_halfplane.hpp"

#include "cubuland/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace cubuland {

GeodesicWallPattern GeodesicWallPattern::make(std::size_t period, std::vector<Orbit> orbits,
                                              const std::vector<RuleEntry>& rules) {
  require(period >= 1, "pattern period must be positive");
  require(!orbits.empty(), "pattern has no orbits");
  GeodesicWallPattern p;
  p.period_ = period;
  p.orbit_by_residue_.assign(period, -1);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    require(!orbits[i].id.empty(), "orbit id must be nonempty");
    require(ids.insert(orbits[i].id).second, "duplicate orbit id '" + orbits[i].id + "'");
    require(orbits[i].position < period, "orbit '" + orbits[i].id + "' position must lie in [0, period)");
    require(p.orbit_by_residue_[orbits[i].position] < 0,
            "two orbits cross the geodesic at position " + std::to_string(orbits[i].position));
    p.orbit_by_residue_[orbits[i].position] = static_cast<long long>(i);
  }
  p.orbits_ = std::move(orbits);
  const std::size_t n = p.orbits_.size();
  p.rules_.assign(n * n, CrossRule{});
  std::vector<bool> set(n * n, false);
  for (const auto& r : rules) {
    auto i = p.orbit_index(r.first);
    auto j = p.orbit_index(r.second);
    require(i && j, "rule names an unknown orbit ('" + r.first + "', '" + r.second + "')");
    for (auto [x, y] : {std::pair{*i, *j}, std::pair{*j, *i}}) {
      if (set[x * n + y])
        require(p.rules_[x * n + y] == r.rule, "conflicting rules for orbits '" + r.first + "' and '" + r.second + "'");
      p.rules_[x * n + y] = r.rule;
      set[x * n + y] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const CrossRule& self = p.rule(i, i);
    bool separated = self.kind == RuleKind::Never || (self.kind == RuleKind::Within && self.radius < period);
    require(separated, "orbit '" + p.orbits_[i].id + "' would cross its own translates; the period must separate them");
  }
  return p;
}

std::optional<std::size_t> GeodesicWallPattern::orbit_index(const std::string& id) const {
  for (std::size_t i = 0; i < orbits_.size(); ++i)
    if (orbits_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> GeodesicWallPattern::orbit_at(long long position) const {
  long long m = static_cast<long long>(period_);
  long long r = ((position % m) + m) % m;
  long long o = orbit_by_residue_[static_cast<std::size_t>(r)];
  if (o < 0) return std::nullopt;
  return static_cast<std::size_t>(o);
}

bool GeodesicWallPattern::concrete_cross(long long q1, long long q2) const {
  if (q1 == q2) return false;
  auto o1 = orbit_at(q1);
  auto o2 = orbit_at(q2);
  if (!o1 || !o2) return false;
  const CrossRule& r = rule(*o1, *o2);
  switch (r.kind) {
    case RuleKind::Always: return true;
    case RuleKind::Never: return false;
    case RuleKind::Within: return static_cast<std::size_t>(q1 > q2 ? q1 - q2 : q2 - q1) <= r.radius;
  }
  return false;
}

std::size_t GeodesicWallPattern::max_radius() const {
  std::size_t r = 0;
  for (const auto& rule : rules_)
    if (rule.kind == RuleKind::Within) r = std::max(r, rule.radius);
  return r;
}

std::vector<RuleEntry> GeodesicWallPattern::rule_entries() const {
  std::vector<RuleEntry> out;
  for (std::size_t i = 0; i < orbits_.size(); ++i)
    for (std::size_t j = i; j < orbits_.size(); ++j) out.push_back(RuleEntry{orbits_[i].id, orbits_[j].id, rule(i, j)});
  return out;
}

namespace {

std::vector<long long> occupied_positions(const GeodesicWallPattern& p, std::size_t window_len) {
  std::vector<long long> out;
  for (long long q = 0; q < static_cast<long long>(window_len); ++q)
    if (p.orbit_at(q)) out.push_back(q);
  return out;
}

}  // namespace

PatternCheck validate_pattern(const GeodesicWallPattern& p, std::size_t window_len) {
  require(window_len >= p.minimum_window(),
          "validation window must have length at least " + std::to_string(p.minimum_window()));
  auto qs = occupied_positions(p, window_len);
  PatternCheck out;
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      if (p.orbit_at(qs[i]) == p.orbit_at(qs[j]) && p.concrete_cross(qs[i], qs[j])) {
        out.violation = PatternViolation{PatternViolation::Kind::SameOrbitCrossing, {qs[i], qs[i], qs[j]}};
        return out;
      }
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      for (std::size_t k = j + 1; k < qs.size(); ++k) {
        if (!p.concrete_cross(qs[i], qs[k])) continue;
        if (!p.concrete_cross(qs[j], qs[i]) && !p.concrete_cross(qs[j], qs[k])) {
          out.violation = PatternViolation{PatternViolation::Kind::Betweenness, {qs[i], qs[j], qs[k]}};
          return out;
        }
      }
  return out;
}

PatternClass classify(const GeodesicWallPattern& p) {
  const std::size_t n = p.orbits().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.rule(i, j).kind == RuleKind::Always)
        return PatternClass{PatternClass::Case::UnboundedCrossing, std::make_pair(i, j), 0};
  return PatternClass{PatternClass::Case::BoundedCrossing, std::nullopt, p.max_radius()};
}

ABPartition partition_AB(const GeodesicWallPattern& p) {
  PatternClass c = classify(p);
  require(c.kind == PatternClass::Case::UnboundedCrossing,
          "crossings along the geodesic are bounded; there is no A/B partition");
  ABPartition out;
  out.a = c.witness->first;
  out.b = c.witness->second;
  for (std::size_t o = 0; o < p.orbits().size(); ++o)
    (p.rule(o, out.a).kind == RuleKind::Always ? out.B : out.A).push_back(o);
  out.witness_in_B = std::find(out.B.begin(), out.B.end(), out.a) != out.B.end();

  std::vector<bool> in_B(p.orbits().size(), false);
  for (std::size_t o : out.B) in_B[o] = true;
  auto qs = occupied_positions(p, p.minimum_window());
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      if (!in_B[*p.orbit_at(qs[i])] && in_B[*p.orbit_at(qs[j])] && !p.concrete_cross(qs[i], qs[j]))
        fail(ErrorKind::StructuralFailure,
             "A-hyperplane at " + std::to_string(qs[i]) + " (orbit '" + p.orbits()[*p.orbit_at(qs[i])].id +
                 "') precedes B-hyperplane at " + std::to_string(qs[j]) + " (orbit '" +
                 p.orbits()[*p.orbit_at(qs[j])].id + "') without crossing it");
  return out;
}

namespace {

// Hyperplanes crossing the geodesic at increasing positions. Side 0 of each is
// the side containing the start of the window.
WallSystem geodesic_walls(const GeodesicWallPattern& p, const std::vector<long long>& qs) {
  return WallSystem(qs.size(), [&](std::size_t i, Side si, std::size_t j, Side sj) {
    if (p.concrete_cross(qs[i], qs[j])) return true;
    // nested: the earlier wall's back side misses the later wall's front side
    if (i < j) return !(si == 0 && sj == 1);
    return !(sj == 0 && si == 1);
  });
}

}  // namespace

CubeComplex geodesic_hull(const GeodesicWallPattern& p, std::size_t periods) {
  auto qs = occupied_positions(p, periods * p.period());
  Orientation start;
  start.sides.assign(qs.size(), 0);
  return build_dual(geodesic_walls(p, qs), start);
}

HalfplaneComplex build_halfplane(const GeodesicWallPattern& p, std::size_t window_len) {
  ABPartition ab = partition_AB(p);
  require(!ab.B.empty(), "half-plane needs a nonempty B family");

  HalfplaneComplex out;
  out.window_len = window_len;
  out.positions = occupied_positions(p, window_len);
  const std::size_t n = out.positions.size();
  std::vector<bool> in_B(p.orbits().size(), false);
  for (std::size_t o : ab.B) in_B[o] = true;
  for (long long q : out.positions) out.in_A.push_back(!in_B[*p.orbit_at(q)]);

  Orientation start;
  start.sides.assign(n, 0);
  out.hull = build_dual(geodesic_walls(p, out.positions), start);

  // x and x' count the hyperplanes passed along the geodesic
  std::set<std::size_t> members;
  for (std::size_t x = 0; x <= n; ++x)
    for (std::size_t x2 = x; x2 <= n; ++x2) {
      Orientation o;
      o.sides.resize(n);
      for (std::size_t i = 0; i < n; ++i) o.sides[i] = (out.in_A[i] ? i < x : i < x2) ? 1 : 0;
      auto v = out.hull.find(o);
      if (!v)
        fail(ErrorKind::StructuralFailure, "pair (" + std::to_string(x) + ", " + std::to_string(x2) +
                                               ") does not give a vertex of the hull");
      members.insert(*v);
      if (x == x2) out.boundary.push_back(*v);
    }
  std::vector<std::size_t> list(members.begin(), members.end());
  out.halfplane = spanned_subcomplex(out.hull, list);

  if (out.halfplane.cell_count(3) != 0) fail(ErrorKind::StructuralFailure, "half-plane contains a 3-cube");
  for (std::size_t i = 0; i + 1 < out.boundary.size(); ++i)
    if (out.hull.distance(out.boundary[i], out.boundary[i + 1]) != 1)
      fail(ErrorKind::StructuralFailure, "boundary geodesic is not a path");
  if (!is_isometrically_embedded(out.hull, out.halfplane).isometric)
    fail(ErrorKind::StructuralFailure, "half-plane 1-skeleton is not isometrically embedded");
  return out;
}

std::size_t hull_vertices_per_period(const GeodesicWallPattern& p) {
  PatternClass c = classify(p);
  require(c.kind == PatternClass::Case::BoundedCrossing, "hull of an unbounded-crossing pattern is not cocompact");
  const std::size_t start = c.radius + 2;
  for (std::size_t k = start; k <= 4 * (c.radius + 1) + 4; ++k) {
    std::size_t v0 = geodesic_hull(p, k).vertex_count();
    std::size_t v1 = geodesic_hull(p, k + 1).vertex_count();
    std::size_t v2 = geodesic_hull(p, k + 2).vertex_count();
    if (v1 - v0 == v2 - v1) return v1 - v0;
  }
  fail(ErrorKind::StructuralFailure, "hull vertex growth did not stabilise");
}

TwoPatternClass classify_two_patterns(const GeodesicWallPattern& alpha, const GeodesicWallPattern& beta,
                                      std::size_t window_len) {
  const GeodesicWallPattern* patterns[2] = {&alpha, &beta};
  for (std::size_t which = 0; which < 2; ++which)
    if (classify(*patterns[which]).kind == PatternClass::Case::UnboundedCrossing) {
      HalfplaneFactor f;
      f.which = which;
      f.halfplane = build_halfplane(*patterns[which], window_len);
      f.line_len = window_len;
      f.product_vertex_count = f.halfplane.vertex_count() * (window_len + 1);
      return f;
    }
  CocompactHull h;
  h.alpha_per_period = hull_vertices_per_period(alpha);
  h.beta_per_period = hull_vertices_per_period(beta);
  h.vertices_per_period = h.alpha_per_period * h.beta_per_period;
  return h;
}

}  // namespace cubuland
