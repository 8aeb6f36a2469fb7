#include "cubuland/chargeless.hpp"
#include "cubuland/generate.hpp"
#include "cubuland/json_io.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cubuland;
using namespace testing_support;

namespace {

GraphManifold load(const std::string& name) {
  return manifold_from_json(load_json_file(std::string(CUBULAND_DATA_DIR) + "/" + name + ".json"));
}

GluedEdge glue(std::size_t b1, unsigned t1, std::size_t b2, unsigned t2, long long a, long long b, long long p,
               long long q) {
  GluingMatrix g{a, b, p, q};
  return GluedEdge{EdgeEnd{b1, t1, g}, EdgeEnd{b2, t2, far_side_matrix(g)}};
}

std::vector<Integer> ns(const std::vector<WitnessEntry>& w) {
  std::vector<Integer> out;
  for (const auto& e : w) out.push_back(e.n);
  return out;
}

std::vector<long long> as_long(const std::vector<WitnessEntry>& w) {
  std::vector<long long> out;
  for (const auto& e : w) out.push_back(static_cast<long long>(e.n));
  return out;
}

/// Block "u" sees neighbour fibres (2,1) and (3,1): the charge 5/6 never cancels.
GraphManifold unbalanced_pair() {
  return GraphManifold::make({{"u", 1, 2}, {"w1", 1, 1}, {"w2", 1, 1}},
                             {glue(0, 0, 1, 0, 2, 1, 1, 1), glue(0, 1, 2, 0, 3, 1, 2, 1)});
}

/// Two loops on one four-holed sphere: fibres (1,0) twice and (5,2), (5,-2).
GraphManifold mixed_loops() {
  return GraphManifold::make({{"u", 0, 4}}, {glue(0, 0, 0, 1, 1, 0, 0, 1), glue(0, 2, 0, 3, 5, 2, 2, 1)});
}

/// Block "u" keeps torus 1 free.
GraphManifold open_block() {
  return GraphManifold::make({{"u", 1, 2}, {"w", 1, 1}}, {glue(0, 0, 1, 0, 1, 0, 0, 1)});
}

}  // namespace

TEST_SUITE("chargeless") {

TEST_CASE("charges of the sample manifolds") {
  GraphManifold flip = load("flip");
  CHECK(block_charge(flip, 0) == 0);
  CHECK(block_charge(flip, 1) == 0);
  GraphManifold single = load("single_end");
  CHECK(block_charge(single, 0) == 1);
  CHECK(block_charge(single, 1) == 0);
  CHECK(block_charge(load("balanced_loop"), 0) == 0);
  CHECK(block_charge(unbalanced_pair(), 0) == q("5/6"));
  CHECK(error_kind_of([] { block_charge(open_block(), 0); }) == ErrorKind::UnsupportedConfiguration);
}

TEST_CASE("verdicts and witnesses of the sample manifolds") {
  ChargeReport flip = is_chargeless(load("flip"));
  CHECK(flip.chargeless);
  CHECK_FALSE(flip.interpretation_sensitive);
  for (const auto& b : flip.blocks) CHECK(ns(b.verdict.witness) == std::vector<Integer>{1});

  GraphManifold single_m = load("single_end");
  ChargeReport single = is_chargeless(single_m);
  CHECK_FALSE(single.chargeless);
  CHECK_FALSE(single.blocks[0].verdict.chargeless);
  CHECK_FALSE(single.blocks[0].verdict.obstruction.empty());
  CHECK(single.blocks[1].verdict.chargeless);
  CHECK_FALSE(oracle::brute_chargeless(single_m, 0, 20));

  ChargeReport balanced = is_chargeless(load("balanced_loop"));
  CHECK(balanced.chargeless);
  CHECK(ns(balanced.blocks[0].verdict.witness) == std::vector<Integer>{1, 1});

  ChargeReport mixed = is_chargeless(mixed_loops());
  CHECK(mixed.chargeless);
  CHECK(ns(mixed.blocks[0].verdict.witness) == std::vector<Integer>{5, 5, 1, 1});
}

TEST_CASE("property: closed-form verdicts agree with exhaustive search") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    GraphManifold m = generate_manifold(seed, ManifoldParams{1 + seed % 3, seed % 3, 3, 0});
    ChargeReport report = is_chargeless(m);
    bool all = true;
    for (std::size_t b = 0; b < m.blocks().size(); ++b) {
      const auto& br = report.blocks[b];
      all = all && br.verdict.chargeless;
      CHECK(br.verdict.chargeless == (*br.charge == 0));
      if (br.verdict.chargeless) {
        CHECK(witness_is_zero(m, b, br.verdict.witness));
        CHECK(oracle::block_sum_is_zero(m, b, as_long(br.verdict.witness)));
      }
      // every |a| <= 3, so a witness needs |n| <= lcm(1, 2, 3) = 6
      if (m.ends_of(b).size() <= 4) {
        CHECK(oracle::brute_chargeless(m, b, 6) == br.verdict.chargeless);
        ++checked;
      }
    }
    CHECK(report.chargeless == all);
  }
  CHECK(checked > 100);
}

TEST_CASE("brute-force search order and exhaustion") {
  auto flip = brute_force_witness(load("flip"), 0, 1);
  REQUIRE(flip.has_value());
  CHECK(ns(*flip) == std::vector<Integer>{1});

  // (1,1) precedes (-1,-1) in the 1, -1, 2, -2 order
  auto balanced = brute_force_witness(load("balanced_loop"), 0, 3);
  REQUIRE(balanced.has_value());
  CHECK(ns(*balanced) == std::vector<Integer>{1, 1});

  CHECK_FALSE(brute_force_witness(unbalanced_pair(), 0, 20).has_value());
  CHECK_FALSE(oracle::brute_chargeless(unbalanced_pair(), 0, 20));

  auto mixed = brute_force_witness(mixed_loops(), 0, 5);
  REQUIRE(mixed.has_value());
  CHECK(ns(*mixed) == std::vector<Integer>{5, 5, 1, 1});
  CHECK_FALSE(brute_force_witness(mixed_loops(), 0, 4).has_value());
}

TEST_CASE("brute-force errors") {
  CHECK(error_kind_of([] { brute_force_witness(mixed_loops(), 0, 50, BruteForceOptions{1000, false}); }) ==
        ErrorKind::BudgetExceeded);
  CHECK(error_kind_of([] { brute_force_witness(load("flip"), 0, 0); }) == ErrorKind::InvalidInput);
  CHECK(error_kind_of([] { brute_force_witness(load("flip"), 5, 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("property: parallel search returns the serial witness") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GraphManifold m = generate_manifold(seed, ManifoldParams{2, 1, 3, 0});
    for (std::size_t b = 0; b < m.blocks().size(); ++b) {
      if (m.ends_of(b).size() > 4) continue;
      auto serial = brute_force_witness(m, b, 6, BruteForceOptions{100'000'000, false});
      auto parallel = brute_force_witness(m, b, 6, BruteForceOptions{100'000'000, true});
      REQUIRE(serial.has_value() == parallel.has_value());
      if (serial) CHECK(ns(*serial) == ns(*parallel));
    }
  }
}

TEST_CASE("turbine manifests") {
  GraphManifold balanced = load("balanced_loop");
  TurbineManifest t = turbine_manifest(balanced, is_chargeless(balanced));
  REQUIRE(t.blocks.size() == 1);
  CHECK(t.blocks[0].surface_copies == 2);
  REQUIRE(t.blocks[0].ends.size() == 2);
  for (const auto& e : t.blocks[0].ends) {
    CHECK(e.annulus_copies == 2);
    CHECK(e.adjacent_block == 0);
  }
  CHECK(t.blocks[0].ends[0].slope_c == 2);
  CHECK(t.blocks[0].ends[0].slope_h == 1);
  CHECK(t.vertical_annuli.empty());

  GraphManifold mixed = mixed_loops();
  TurbineManifest tm = turbine_manifest(mixed, is_chargeless(mixed));
  CHECK(tm.blocks[0].ends[0].annulus_copies == 10);
  CHECK(tm.blocks[0].ends[2].annulus_copies == 2);

  GraphManifold single = load("single_end");
  CHECK(error_kind_of([&] { turbine_manifest(single, is_chargeless(single)); }) == ErrorKind::InvalidInput);
  CHECK(error_kind_of([&] { turbine_manifest(single, is_chargeless(balanced)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("free boundary tori give both verdicts") {
  GraphManifold m = open_block();
  ChargeReport report = is_chargeless(m);
  const auto& u = report.blocks[0];
  CHECK_FALSE(u.fully_glued);
  CHECK_FALSE(u.charge.has_value());
  CHECK(u.interpretation_sensitive);
  CHECK(report.interpretation_sensitive);
  // literally, the free torus' c class must vanish, which forces n = 0
  CHECK_FALSE(u.verdict.chargeless);
  CHECK_FALSE(u.verdict.obstruction.empty());
  CHECK(u.relative.chargeless);
  CHECK(ns(u.relative.witness) == std::vector<Integer>{1});
  CHECK_FALSE(report.chargeless);
  CHECK(report.relative_chargeless);
  CHECK_FALSE(report.blocks[1].interpretation_sensitive);

  CHECK(error_kind_of([&] { turbine_manifest(m, report); }) == ErrorKind::InvalidInput);
  TurbineManifest rel = turbine_manifest(m, report, true);
  CHECK(rel.relative);
  REQUIRE(rel.vertical_annuli.size() == 1);
  CHECK(rel.vertical_annuli[0].block == 0);
  CHECK(rel.vertical_annuli[0].torus == 1);
  CHECK(rel.vertical_annuli[0].label == "T(u,1)");
}

TEST_CASE("literal block systems match the oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GraphManifold m = generate_manifold(seed, ManifoldParams{2, 1, 2, 1 + seed % 2});
    for (std::size_t b = 0; b < m.blocks().size(); ++b) {
      if (m.ends_of(b).size() > 4) continue;
      BlockVerdict v = solve_block_system(m, b, false);
      CHECK(v.chargeless == oracle::brute_chargeless(m, b, 2));
      if (v.chargeless) CHECK(witness_is_zero(m, b, v.witness));
    }
  }
}

TEST_CASE("witness checks") {
  GraphManifold balanced = load("balanced_loop");
  auto ends = balanced.ends_of(0);
  CHECK(witness_is_zero(balanced, 0, {{ends[0], 1}, {ends[1], 1}}));
  CHECK(witness_is_zero(balanced, 0, {{ends[0], -3}, {ends[1], -3}}));
  CHECK_FALSE(witness_is_zero(balanced, 0, {{ends[0], 1}, {ends[1], -1}}));
  CHECK_FALSE(witness_is_zero(balanced, 0, {{ends[0], 1}, {ends[1], 2}}));
}

TEST_CASE("property: verdicts survive retwisting") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GraphManifold m = generate_manifold(seed, ManifoldParams{1 + seed % 3, 1 + seed % 2, 3, 0});
    CHECK(retwist_invariance_check(m, generate_retwist(seed + 1000, m, 4)));
  }
  GraphManifold balanced = load("balanced_loop");
  Retwist r;
  r.shifts[0] = {3, -3};
  CHECK(retwist_invariance_check(balanced, r));
  CHECK(is_chargeless(retwist(balanced, r)).chargeless);
}

}  // TEST_SUITE
