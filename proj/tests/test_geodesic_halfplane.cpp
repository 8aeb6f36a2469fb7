#include "cubuland/generate.hpp"
#include "cubuland/geodesic_halfplane.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace cubuland;
using namespace testing_support;

namespace {

CrossRule always() { return CrossRule{RuleKind::Always, 0}; }
CrossRule never() { return CrossRule{RuleKind::Never, 0}; }
CrossRule within(std::size_t r) { return CrossRule{RuleKind::Within, r}; }

// a at even positions, b at odd, crossing at every distance
GeodesicWallPattern alternating() {
  return GeodesicWallPattern::make(2, {{"a", 0}, {"b", 1}}, {{"a", "b", always()}});
}

GeodesicWallPattern three_always() {
  return GeodesicWallPattern::make(3, {{"a", 0}, {"b", 1}, {"c", 2}},
                                   {{"a", "b", always()}, {"a", "c", always()}, {"b", "c", always()}});
}

GeodesicWallPattern with_bounded_orbit() {
  return GeodesicWallPattern::make(3, {{"a", 0}, {"b", 1}, {"d", 2}},
                                   {{"a", "b", always()}, {"d", "a", within(2)}, {"d", "b", always()}});
}

GeodesicWallPattern bounded(std::size_t r) {
  return GeodesicWallPattern::make(2, {{"a", 0}, {"b", 1}}, {{"a", "b", within(r)}});
}

std::vector<std::string> ids(const GeodesicWallPattern& p, const std::vector<std::size_t>& orbits) {
  std::vector<std::string> out;
  for (auto o : orbits) out.push_back(p.orbits()[o].id);
  return out;
}

long long euler_characteristic(const HalfplaneComplex& h) {
  return static_cast<long long>(h.vertex_count()) - static_cast<long long>(h.edge_count()) +
         static_cast<long long>(h.square_count());
}

}  // namespace

TEST_SUITE("geodesic_halfplane") {

TEST_CASE("pattern construction rejects malformed input") {
  CHECK(error_kind_of([] { GeodesicWallPattern::make(0, {{"a", 0}}, {}); }) == ErrorKind::InvalidInput);
  CHECK(error_kind_of([] { GeodesicWallPattern::make(2, {}, {}); }) == ErrorKind::InvalidInput);
  CHECK(error_kind_of([] { GeodesicWallPattern::make(2, {{"a", 0}, {"a", 1}}, {}); }) == ErrorKind::InvalidInput);
  CHECK(error_kind_of([] { GeodesicWallPattern::make(2, {{"a", 2}}, {}); }) == ErrorKind::InvalidInput);
  CHECK(error_kind_of([] { GeodesicWallPattern::make(2, {{"a", 0}, {"b", 0}}, {}); }) == ErrorKind::InvalidInput);
  CHECK(error_kind_of([] { GeodesicWallPattern::make(2, {{"a", 0}}, {{"a", "z", always()}}); }) ==
        ErrorKind::InvalidInput);
  CHECK(error_kind_of([] {
          GeodesicWallPattern::make(2, {{"a", 0}, {"b", 1}}, {{"a", "b", always()}, {"b", "a", never()}});
        }) == ErrorKind::InvalidInput);
  // an orbit crossing its own translates
  CHECK(error_kind_of([] { GeodesicWallPattern::make(2, {{"a", 0}}, {{"a", "a", within(2)}}); }) ==
        ErrorKind::InvalidInput);
  CHECK(error_kind_of([] { GeodesicWallPattern::make(2, {{"a", 0}}, {{"a", "a", always()}}); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("rules are symmetric and default to never") {
  GeodesicWallPattern p = GeodesicWallPattern::make(3, {{"a", 0}, {"b", 1}, {"c", 2}}, {{"b", "a", within(4)}});
  CHECK(p.rule(0, 1) == within(4));
  CHECK(p.rule(1, 0) == within(4));
  CHECK(p.rule(0, 2) == never());
  CHECK(p.orbit_at(-2) == std::optional<std::size_t>{1});
  CHECK(p.concrete_cross(0, 4));
  CHECK(p.concrete_cross(4, 0));
  CHECK_FALSE(p.concrete_cross(0, 7));
  CHECK(p.max_radius() == 4);
  CHECK(p.minimum_window() == 4 * 3 * 5);
}

TEST_CASE("validation examples") {
  CHECK(validate_pattern(alternating(), alternating().minimum_window()).ok());

  GeodesicWallPattern single = GeodesicWallPattern::make(1, {{"o", 0}}, {{"o", "o", within(0)}});
  CHECK(validate_pattern(single, single.minimum_window()).ok());

  // a and b two apart cross, the c between them crosses neither
  GeodesicWallPattern broken = GeodesicWallPattern::make(3, {{"a", 0}, {"c", 1}, {"b", 2}}, {{"a", "b", within(2)}});
  PatternCheck check = validate_pattern(broken, broken.minimum_window());
  REQUIRE_FALSE(check.ok());
  CHECK(check.violation->kind == PatternViolation::Kind::Betweenness);
  CHECK(check.violation->positions == std::array<long long, 3>{0, 1, 2});

  CHECK(error_kind_of([] { validate_pattern(alternating(), 3); }) == ErrorKind::InvalidInput);
}

TEST_CASE("classification examples") {
  PatternClass c3 = classify(GeodesicWallPattern::make(2, {{"a", 0}, {"b", 1}},
                                                       {{"a", "b", within(3)}, {"b", "b", within(1)}}));
  CHECK(c3.kind == PatternClass::Case::BoundedCrossing);
  CHECK(c3.radius == 3);

  PatternClass c1 = classify(alternating());
  CHECK(c1.kind == PatternClass::Case::UnboundedCrossing);
  CHECK(c1.witness == std::optional<std::pair<std::size_t, std::size_t>>{{0, 1}});

  PatternClass none = classify(GeodesicWallPattern::make(2, {{"a", 0}, {"b", 1}}, {}));
  CHECK(none.kind == PatternClass::Case::BoundedCrossing);
  CHECK(none.radius == 0);
}

TEST_CASE("property: bounded patterns cross within their radius") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GeodesicWallPattern p = generate_pattern(seed, PatternParams{3, 2, 3, false});
    PatternClass c = classify(p);
    REQUIRE(c.kind == PatternClass::Case::BoundedCrossing);
    const long long L = static_cast<long long>(p.minimum_window());
    for (long long q1 = 0; q1 < L; ++q1)
      for (long long q2 = q1 + 1; q2 < L; ++q2)
        if (p.orbit_at(q1) && p.orbit_at(q2) && p.concrete_cross(q1, q2))
          CHECK(static_cast<std::size_t>(q2 - q1) <= c.radius);
  }
}

TEST_CASE("A/B partition examples") {
  ABPartition two = partition_AB(alternating());
  CHECK(ids(alternating(), two.A) == std::vector<std::string>{"a"});
  CHECK(ids(alternating(), two.B) == std::vector<std::string>{"b"});
  CHECK_FALSE(two.witness_in_B);

  ABPartition three = partition_AB(three_always());
  CHECK(ids(three_always(), three.A) == std::vector<std::string>{"a"});
  CHECK(ids(three_always(), three.B) == std::vector<std::string>{"b", "c"});

  GeodesicWallPattern pd = with_bounded_orbit();
  ABPartition four = partition_AB(pd);
  CHECK(ids(pd, four.A) == std::vector<std::string>{"a", "d"});
  CHECK(ids(pd, four.B) == std::vector<std::string>{"b"});
}

TEST_CASE("partition requires an unbounded pattern and the crossing guarantee") {
  CHECK(error_kind_of([] { partition_AB(bounded(3)); }) == ErrorKind::InvalidInput);
  // d lands in A (bounded against a) but meets b only nearby, so some A before B misses
  GeodesicWallPattern p = GeodesicWallPattern::make(3, {{"a", 0}, {"b", 1}, {"d", 2}},
                                                    {{"a", "b", always()}, {"d", "b", within(1)}});
  CHECK(error_kind_of([&] { partition_AB(p); }) == ErrorKind::StructuralFailure);
}

TEST_CASE("half-plane of the alternating pattern matches pair enumeration") {
  HalfplaneComplex h = build_halfplane(alternating(), 8);
  auto expected = oracle::halfplane_by_pairs(h.in_A);
  CHECK(h.in_A == std::vector<bool>{true, false, true, false, true, false, true, false});
  CHECK(h.vertex_count() == expected.vertices);
  CHECK(h.edge_count() == expected.edges);
  CHECK(h.square_count() == expected.squares);
  // pairs (i, j) of passed A and B walls with i <= j + 1, 0 <= i, j <= 4
  CHECK(h.vertex_count() == 19);
  CHECK(h.boundary.size() == 9);
  CHECK(euler_characteristic(h) == 1);
}

TEST_CASE("half-plane of a window with one wall") {
  HalfplaneComplex h = build_halfplane(alternating(), 1);
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(h.square_count() == 0);
  CHECK(h.boundary.size() == 2);
}

TEST_CASE("half-plane needs a nonempty B family") {
  // the witness pair is (a, b); b is forced into B, so only a bounded pattern lacks B
  CHECK(error_kind_of([] { build_halfplane(bounded(1), 4); }) == ErrorKind::InvalidInput);
}

TEST_CASE("half-plane vertex degrees agree with the pair picture") {
  for (const auto& p : {alternating(), three_always(), with_bounded_orbit()})
    for (std::size_t len : {6, 9, 10}) {
      HalfplaneComplex h = build_halfplane(p, len);
      auto pairs = oracle::halfplane_by_pairs(h.in_A).pairs;
      std::map<std::size_t, std::size_t> expected, got;
      for (auto [i, j] : pairs) {
        std::size_t d = 0;
        if (pairs.count({i + 1, j})) ++d;
        if (pairs.count({i, j + 1})) ++d;
        if (i > 0 && pairs.count({i - 1, j})) ++d;
        if (j > 0 && pairs.count({i, j - 1})) ++d;
        ++expected[d];
      }
      std::vector<std::size_t> degree(h.hull.vertex_count(), 0);
      for (std::size_t e = 0; e < h.hull.edge_count(); ++e)
        if (h.halfplane.cells[1][e]) {
          ++degree[h.hull.edges()[e].u];
          ++degree[h.hull.edges()[e].v];
        }
      for (auto v : h.halfplane.vertex_list()) ++got[degree[v]];
      CHECK(got == expected);
      CHECK(got.rbegin()->first <= 4);
      // geodesic vertices sit on the boundary: concave corners reach degree 4
      // but never carry a full ring of 4 squares
      std::vector<std::size_t> squares(h.hull.vertex_count(), 0);
      for (std::size_t k = 0; k < h.hull.cube_count(2); ++k)
        if (h.halfplane.cells[2][k])
          for (auto v : h.hull.cubes(2)[k].vertices) ++squares[v];
      for (auto v : h.boundary) CHECK(squares[v] <= 3);
    }
}

TEST_CASE("property: half-planes of generated patterns are certified") {
  std::size_t built = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeodesicWallPattern p = generate_pattern(seed, PatternParams{3, 3, 2, true});
    if (classify(p).kind != PatternClass::Case::UnboundedCrossing) continue;
    ABPartition ab;
    try {
      ab = partition_AB(p);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::StructuralFailure);
      continue;
    }
    if (ab.B.empty()) continue;
    for (std::size_t len = 1; len <= 10; ++len) {
      HalfplaneComplex h = build_halfplane(p, len);
      CHECK(euler_characteristic(h) == 1);
      CHECK(is_isometrically_embedded(h.hull, h.halfplane).isometric);
      auto d = oracle::graph_distances(h.hull);
      for (auto u : h.halfplane.vertex_list())
        for (auto v : h.halfplane.vertex_list()) CHECK(static_cast<std::size_t>(d[u][v]) == h.hull.distance(u, v));
    }
    ++built;
  }
  CHECK(built > 0);
}

TEST_CASE("hull growth per period") {
  // a single orbit that never crosses: the hull is the geodesic itself
  GeodesicWallPattern path = GeodesicWallPattern::make(1, {{"o", 0}}, {});
  CHECK(hull_vertices_per_period(path) == 1);
  CHECK(geodesic_hull(path, 5).vertex_count() == 6);

  for (std::size_t r : {1, 3}) {
    GeodesicWallPattern p = bounded(r);
    std::size_t step = hull_vertices_per_period(p);
    std::size_t far = geodesic_hull(p, 20).vertex_count() - geodesic_hull(p, 19).vertex_count();
    CHECK(step == far);
  }
  CHECK(error_kind_of([] { hull_vertices_per_period(alternating()); }) == ErrorKind::InvalidInput);
}

TEST_CASE("two-pattern classification") {
  auto cocompact = classify_two_patterns(bounded(2), bounded(3), 6);
  REQUIRE(std::holds_alternative<CocompactHull>(cocompact));
  const auto& hull = std::get<CocompactHull>(cocompact);
  std::size_t a = geodesic_hull(bounded(2), 16).vertex_count() - geodesic_hull(bounded(2), 15).vertex_count();
  std::size_t b = geodesic_hull(bounded(3), 16).vertex_count() - geodesic_hull(bounded(3), 15).vertex_count();
  CHECK(hull.alpha_per_period == a);
  CHECK(hull.beta_per_period == b);
  CHECK(hull.vertices_per_period == a * b);

  auto first = classify_two_patterns(alternating(), bounded(2), 6);
  REQUIRE(std::holds_alternative<HalfplaneFactor>(first));
  CHECK(std::get<HalfplaneFactor>(first).which == 0);
  CHECK(std::get<HalfplaneFactor>(first).line_len == 6);
  CHECK(std::get<HalfplaneFactor>(first).product_vertex_count ==
        std::get<HalfplaneFactor>(first).halfplane.vertex_count() * 7);

  auto second = classify_two_patterns(bounded(2), alternating(), 6);
  REQUIRE(std::holds_alternative<HalfplaneFactor>(second));
  CHECK(std::get<HalfplaneFactor>(second).which == 1);

  auto both = classify_two_patterns(three_always(), alternating(), 6);
  REQUIRE(std::holds_alternative<HalfplaneFactor>(both));
  CHECK(std::get<HalfplaneFactor>(both).which == 0);
}

}  // TEST_SUITE
