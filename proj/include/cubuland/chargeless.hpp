#pragma once

#include "cubuland/graph_manifold.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cubuland {

struct WitnessEntry {
  EndRef end;
  Integer n;
};

/// Outcome of one homology condition on one block: a witness with every
/// coefficient nonzero, or the reason none exists.
struct BlockVerdict {
  bool chargeless = false;
  std::vector<WitnessEntry> witness;  // ordered as GraphManifold::ends_of
  std::string obstruction;            // empty when chargeless
};

struct BlockReport {
  std::size_t block = 0;
  bool fully_glued = true;
  std::optional<Rational> charge;  // fully glued blocks only
  BlockVerdict verdict;
  /// Set when free boundary tori forced the literal system, whose reading of
  /// those tori is a modelling choice.
  bool interpretation_sensitive = false;
  /// Same condition in homology relative to the free boundary tori.
  BlockVerdict relative;
};

struct ChargeReport {
  std::vector<BlockReport> blocks;
  bool chargeless = false;           // conjunction of block verdicts
  bool relative_chargeless = false;  // conjunction of relative verdicts
  bool interpretation_sensitive = false;
};

/// Sum over the block's ends of b/a. UnsupportedConfiguration when the block
/// has a free boundary torus.
Rational block_charge(const GraphManifold& m, std::size_t block);

/// Homology condition on a block solved as an integer linear system over the
/// unknowns (n per end, multiple s of the boundary relation), keeping only
/// solutions with every n nonzero. With `relative`, classes carried by free
/// boundary tori are killed.
BlockVerdict solve_block_system(const GraphManifold& m, std::size_t block, bool relative);

/// True iff sum n_e * [fiber of the neighbour at e] is zero in H_1 of the block,
/// or with `relative` in H_1 relative to its free boundary tori.
bool witness_is_zero(const GraphManifold& m, std::size_t block, const std::vector<WitnessEntry>& witness,
                     bool relative = false);

/// Fully glued blocks use the closed form (t = lcm |a|, n = t / a); others the
/// literal system. Every witness is re-checked in the block's homology.
ChargeReport is_chargeless(const GraphManifold& m);

struct BruteForceOptions {
  std::uint64_t max_candidates = 100'000'000;
  bool parallel = false;
};

/// Exhaustive search over n in [-N, N] \ {0} per end, in the order
/// 1, -1, 2, -2, ... for each coordinate, lexicographically across ends.
/// Returns the first witness, or nullopt when the range is exhausted.
/// BudgetExceeded when (2N)^ends exceeds the cap.
std::optional<std::vector<WitnessEntry>> brute_force_witness(const GraphManifold& m, std::size_t block, long long N,
                                                             const BruteForceOptions& options = {});

struct TurbineEnd {
  EndRef end;
  std::size_t adjacent_block = 0;
  unsigned torus = 0;  // boundary torus of the block the end belongs to
  Integer n;
  Integer annulus_copies;         // 2|n|, placed in the adjacent block
  Integer slope_c, slope_h;       // n times the neighbour fiber class
};

struct TurbineBlock {
  std::size_t block = 0;
  unsigned surface_copies = 2;
  std::vector<TurbineEnd> ends;
};

struct VerticalAnnulus {
  std::size_t block = 0;
  unsigned torus = 0;
  std::string label;  // opaque name of the torus collection it caps
};

struct TurbineManifest {
  std::vector<TurbineBlock> blocks;
  std::vector<VerticalAnnulus> vertical_annuli;  // one per free boundary torus of the manifold
  bool relative = false;
};

/// InvalidInput unless the chosen verdict (relative or not) is chargeless.
TurbineManifest turbine_manifest(const GraphManifold& m, const ChargeReport& report, bool relative = false);

/// Whether is_chargeless gives the same verdict and the same per-block flags
/// after the retwist.
bool retwist_invariance_check(const GraphManifold& m, const Retwist& r);

}  // namespace cubuland
