#include "cubuland/generate.hpp"

#include "cubuland/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace cubuland {

long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  require(lo <= hi, "empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long long>(rng());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return static_cast<long long>(static_cast<std::uint64_t>(lo) + x % span);
}

namespace {

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_int(rng, 0, static_cast<long long>(i) - 1)]);
}

struct Mat2 {
  long long a, p, b, q;  // [[a, p], [b, q]]
};

Mat2 multiply(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.p * y.b, x.a * y.p + x.p * y.q, x.b * y.a + x.q * y.b, x.b * y.p + x.q * y.q};
}

GluingMatrix random_gluing(std::mt19937_64& rng, long long bound) {
  static const Mat2 generators[] = {{0, -1, 1, 0}, {1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 0, -1}};
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Mat2 m{1, 0, 0, 1};
    long long length = uniform_int(rng, 1, 8);
    bool ok = true;
    for (long long i = 0; i < length && ok; ++i) {
      m = multiply(m, generators[uniform_int(rng, 0, 3)]);
      ok = std::max({std::llabs(m.a), std::llabs(m.b), std::llabs(m.p), std::llabs(m.q)}) <= 64;
    }
    if (!ok || m.a == 0) continue;
    if (std::max({std::llabs(m.a), std::llabs(m.b), std::llabs(m.p), std::llabs(m.q)}) > bound) continue;
    return GluingMatrix{m.a, m.b, m.p, m.q};
  }
  fail(ErrorKind::InvalidInput, "could not sample a gluing matrix within the bound");
}

}  // namespace

GraphManifold generate_manifold(std::uint64_t seed, const ManifoldParams& params) {
  require(params.blocks >= 1, "manifold generator needs at least one block");
  require(params.bound >= 1, "matrix bound must be at least 1");
  std::mt19937_64 rng(seed);
  const long long k = static_cast<long long>(params.blocks);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (long long i = 1; i < k; ++i) pairs.emplace_back(uniform_int(rng, 0, i - 1), i);
  std::size_t extra = params.extra_edges;
  if (pairs.empty() && extra == 0) extra = 1;
  for (std::size_t e = 0; e < extra; ++e) pairs.emplace_back(uniform_int(rng, 0, k - 1), uniform_int(rng, 0, k - 1));

  std::vector<unsigned> ends(params.blocks, 0), free(params.blocks, 0);
  for (auto [u, v] : pairs) {
    ++ends[u];
    ++ends[v];
  }
  for (std::size_t f = 0; f < params.free_tori; ++f) ++free[uniform_int(rng, 0, k - 1)];

  std::vector<Block> blocks;
  std::vector<std::vector<unsigned>> tori(params.blocks);
  for (std::size_t i = 0; i < params.blocks; ++i) {
    Block b;
    b.id = "v" + std::to_string(i);
    b.boundary_count = ends[i] + free[i];
    b.genus = b.boundary_count >= 3 ? static_cast<unsigned>(uniform_int(rng, 0, 1))
                                    : static_cast<unsigned>(uniform_int(rng, 1, 2));
    tori[i].resize(b.boundary_count);
    std::iota(tori[i].begin(), tori[i].end(), 0u);
    shuffle(tori[i], rng);
    blocks.push_back(std::move(b));
  }

  std::vector<std::size_t> next(params.blocks, 0);
  std::vector<GluedEdge> edges;
  for (auto [u, v] : pairs) {
    GluedEdge e;
    e.end1 = EdgeEnd{u, tori[u][next[u]++], random_gluing(rng, params.bound)};
    e.end2 = EdgeEnd{v, tori[v][next[v]++], far_side_matrix(e.end1.matrix)};
    edges.push_back(std::move(e));
  }
  return GraphManifold::make(std::move(blocks), std::move(edges));
}

Wallspace generate_wallspace(std::uint64_t seed, const WallspaceParams& params) {
  require(params.points >= 2 && params.points <= 20, "wallspace generator needs between 2 and 20 points");
  std::mt19937_64 rng(seed);
  // distinct bipartitions up to swapping sides: masks over points 1..P-1, not all zero
  const long long distinct = (1LL << (params.points - 1)) - 1;
  std::set<long long> chosen;
  std::vector<BipartitionEntry> entries;
  std::size_t total = 0;
  while (total < params.walls && static_cast<long long>(chosen.size()) < distinct) {
    long long mask = uniform_int(rng, 1, distinct);
    if (!chosen.insert(mask).second) continue;
    BipartitionEntry e;
    for (int p = 0; p < params.points; ++p) {
      bool far = p > 0 && ((mask >> (p - 1)) & 1);
      (far ? e.wall.side1 : e.wall.side0).push_back(p);
    }
    if (uniform_int(rng, 0, 1) == 1) std::swap(e.wall.side0, e.wall.side1);
    e.multiplicity = (total + 2 <= params.walls && uniform_int(rng, 0, 7) == 0) ? 2 : 1;
    total += static_cast<std::size_t>(e.multiplicity);
    entries.push_back(std::move(e));
  }
  return Wallspace::bipartition(params.points, std::move(entries));
}

GeodesicWallPattern generate_pattern(std::uint64_t seed, const PatternParams& params) {
  require(params.period >= 1, "pattern period must be positive");
  require(params.orbits >= 1 && params.orbits <= params.period, "orbit count must lie in [1, period]");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 5000; ++attempt) {
    std::vector<std::size_t> residues(params.period);
    std::iota(residues.begin(), residues.end(), 0);
    shuffle(residues, rng);
    residues.resize(params.orbits);
    std::sort(residues.begin(), residues.end());
    std::vector<Orbit> orbits;
    for (std::size_t i = 0; i < residues.size(); ++i) orbits.push_back({"o" + std::to_string(i), residues[i]});

    std::vector<RuleEntry> rules;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (std::size_t j = i; j < orbits.size(); ++j) {
        CrossRule r;
        long long roll = uniform_int(rng, 0, 7);
        std::size_t cap = params.max_radius;
        if (i == j) cap = std::min(cap, params.period - 1);
        if (i != j && params.allow_always && roll < 2) {
          r.kind = RuleKind::Always;
        } else if (roll < 5 && cap >= 1) {
          r.kind = RuleKind::Within;
          r.radius = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(cap)));
        }
        rules.push_back({orbits[i].id, orbits[j].id, r});
      }
    auto p = GeodesicWallPattern::make(params.period, orbits, rules);
    if (validate_pattern(p, p.minimum_window()).ok()) return p;
  }
  fail(ErrorKind::InvalidInput, "no valid pattern found for these parameters");
}

Retwist generate_retwist(std::uint64_t seed, const GraphManifold& m, long long bound) {
  std::mt19937_64 rng(seed);
  Retwist r;
  for (std::size_t b = 0; b < m.blocks().size(); ++b) {
    std::vector<Integer> shifts;
    Integer sum = 0;
    for (unsigned t = 0; t + 1 < m.blocks()[b].boundary_count; ++t) {
      shifts.emplace_back(uniform_int(rng, -bound, bound));
      sum += shifts.back();
    }
    shifts.push_back(-sum);
    r.shifts.emplace(b, std::move(shifts));
  }
  return r;
}

GraphCover generate_cover(std::uint64_t seed, const GraphManifold& m, std::size_t degree) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> perms;
  for (std::size_t e = 0; e < m.edges().size(); ++e) {
    std::vector<std::size_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    shuffle(p, rng);
    perms.push_back(std::move(p));
  }
  return cover_from_permutations(m, degree, perms);
}

}  // namespace cubuland
