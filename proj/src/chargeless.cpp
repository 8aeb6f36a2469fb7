#include "cubuland/chargeless.hpp"

#include "cubuland/error.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <thread>

namespace cubuland {

Rational block_charge(const GraphManifold& m, std::size_t block) {
  require(block < m.blocks().size(), "block index out of range");
  if (!m.fully_glued(block))
    fail(ErrorKind::UnsupportedConfiguration, "block '" + m.blocks()[block].id +
                                                  "' has free boundary; its condition is solved by the literal system");
  Rational charge = 0;
  for (EndRef r : m.ends_of(block)) {
    auto [a, b] = neighbor_fiber_class(m, r);
    charge += quotient(b, a);
  }
  return charge;
}

bool witness_is_zero(const GraphManifold& m, std::size_t block, const std::vector<WitnessEntry>& witness,
                     bool relative) {
  require(block < m.blocks().size(), "block index out of range");
  BlockHomology hom = h1_block(m.blocks()[block], relative ? m.free_tori(block) : std::vector<unsigned>{});
  std::vector<Integer> sum(hom.generator_count());
  for (const auto& w : witness) {
    require(m.end(w.end).block == block, "witness entry belongs to another block");
    auto v = neighbor_fiber_vector(m, hom, w.end);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += w.n * v[i];
  }
  return hom.is_zero(sum);
}

namespace {

std::string torus_name(const GraphManifold& m, std::size_t block, unsigned torus) {
  return "block '" + m.blocks()[block].id + "' torus " + std::to_string(torus);
}

}  // namespace

BlockVerdict solve_block_system(const GraphManifold& m, std::size_t block, bool relative) {
  require(block < m.blocks().size(), "block index out of range");
  const auto ends = m.ends_of(block);
  const auto free = m.free_tori(block);
  const std::size_t unknowns = ends.size() + 1;  // n per end, then s
  const std::size_t s = ends.size();

  std::vector<std::vector<Integer>> rows;
  for (unsigned t = 0; t < m.blocks()[block].boundary_count; ++t) {
    std::vector<Integer> row(unknowns);
    auto r = m.end_at(block, t);
    if (r) {
      std::size_t k = std::find(ends.begin(), ends.end(), *r) - ends.begin();
      row[k] = m.end(*r).matrix.a;
    } else if (relative) {
      continue;  // c_t is killed
    }
    row[s] = -1;
    rows.push_back(std::move(row));
  }
  if (!relative || free.empty()) {
    std::vector<Integer> row(unknowns);
    for (std::size_t k = 0; k < ends.size(); ++k) row[k] = m.end(ends[k]).matrix.b;
    rows.push_back(std::move(row));
  }

  IntegerMatrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) system(i, j) = rows[i][j];
  IntegerMatrix kernel = integer_kernel(system);

  BlockVerdict out;
  for (std::size_t k = 0; k < ends.size(); ++k) {
    bool forced_zero = true;
    for (std::size_t j = 0; j < kernel.cols(); ++j)
      if (kernel(k, j) != 0) forced_zero = false;
    if (forced_zero) {
      out.obstruction = "every solution has n = 0 at " + torus_name(m, block, m.end(ends[k]).torus);
      return out;
    }
  }

  // no coordinate vanishes on the whole kernel, so some (1, t, t^2, ...) combination avoids all zeros
  std::vector<Integer> x(unknowns);
  for (Integer t = 1;; ++t) {
    std::fill(x.begin(), x.end(), Integer(0));
    Integer coeff = 1;
    for (std::size_t j = 0; j < kernel.cols(); ++j, coeff *= t)
      for (std::size_t i = 0; i < unknowns; ++i) x[i] += coeff * kernel(i, j);
    if (std::all_of(x.begin(), x.begin() + ends.size(), [](const Integer& v) { return v != 0; })) break;
  }
  Integer g = 0;
  for (const auto& v : x) g = gcd(g, v);
  if (g == 0) g = 1;
  bool flip = x[s] != 0 ? x[s] < 0 : (!ends.empty() && x[0] < 0);
  if (flip) g = -g;
  out.chargeless = true;
  for (std::size_t k = 0; k < ends.size(); ++k) out.witness.push_back({ends[k], x[k] / g});
  return out;
}

ChargeReport is_chargeless(const GraphManifold& m) {
  ChargeReport report;
  report.chargeless = true;
  report.relative_chargeless = true;
  for (std::size_t b = 0; b < m.blocks().size(); ++b) {
    BlockReport br;
    br.block = b;
    br.fully_glued = m.fully_glued(b);
    if (br.fully_glued) {
      br.charge = block_charge(m, b);
      if (*br.charge == 0) {
        Integer t = 1;
        for (EndRef r : m.ends_of(b)) t = lcm(t, abs(m.end(r).matrix.a));
        br.verdict.chargeless = true;
        for (EndRef r : m.ends_of(b)) br.verdict.witness.push_back({r, t / m.end(r).matrix.a});
      } else {
        br.verdict.obstruction = "charge " + format_rational(*br.charge) + " is nonzero";
      }
      br.relative = br.verdict;
    } else {
      br.verdict = solve_block_system(m, b, false);
      br.relative = solve_block_system(m, b, true);
      br.interpretation_sensitive = true;
      report.interpretation_sensitive = true;
    }
    if ((br.verdict.chargeless && !witness_is_zero(m, b, br.verdict.witness)) ||
        (br.relative.chargeless && !witness_is_zero(m, b, br.relative.witness, true)))
        fail(ErrorKind::StructuralFailure, "witness for block '" + m.blocks()[b].id + "' is not zero in homology");
    report.chargeless = report.chargeless && br.verdict.chargeless;
    report.relative_chargeless = report.relative_chargeless && br.relative.chargeless;
    report.blocks.push_back(std::move(br));
  }
  return report;
}

namespace {

long long candidate_value(long long k) { return (k / 2 + 1) * (k % 2 == 0 ? 1 : -1); }

struct BruteSetup {
  std::vector<EndRef> ends;
  std::vector<std::vector<long long>> images;  // left Smith transform applied to each end's class
  std::vector<long long> invariants;           // per row; 0 marks rows that must vanish
};

std::optional<std::vector<long long>> search_range(const BruteSetup& s, long long N, long long first_lo,
                                                   long long first_hi) {
  const std::size_t E = s.ends.size();
  const std::size_t R = s.invariants.size();
  const long long K = 2 * N;
  if (E == 0) return std::vector<long long>{};
  std::vector<long long> k(E, 0);
  k[0] = first_lo;
  std::vector<long long> w(R);
  while (k[0] < first_hi) {
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t e = 0; e < E; ++e) {
      long long n = candidate_value(k[e]);
      for (std::size_t r = 0; r < R; ++r) w[r] += n * s.images[e][r];
    }
    bool zero = true;
    for (std::size_t r = 0; r < R && zero; ++r)
      zero = s.invariants[r] == 0 ? w[r] == 0 : w[r] % s.invariants[r] == 0;
    if (zero) {
      std::vector<long long> n(E);
      for (std::size_t e = 0; e < E; ++e) n[e] = candidate_value(k[e]);
      return n;
    }
    std::size_t pos = E;
    while (pos > 0) {
      --pos;
      if (++k[pos] < K || pos == 0) break;
      k[pos] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<WitnessEntry>> brute_force_witness(const GraphManifold& m, std::size_t block, long long N,
                                                             const BruteForceOptions& options) {
  require(N >= 1, "search bound N must be at least 1");
  require(block < m.blocks().size(), "block index out of range");
  BruteSetup s;
  s.ends = m.ends_of(block);
  BlockHomology hom = h1_block(m.blocks()[block]);

  long double space = 1;
  for (std::size_t e = 0; e < s.ends.size(); ++e) space *= 2.0L * N;
  if (space > static_cast<long double>(options.max_candidates))
    fail(ErrorKind::BudgetExceeded, "search space of " + std::to_string(static_cast<unsigned long long>(space)) +
                                        " candidates exceeds the cap of " + std::to_string(options.max_candidates));

  const Integer limit = Integer(1) << 40;
  for (std::size_t r = 0; r < hom.generator_count(); ++r)
    s.invariants.push_back(r < hom.smith.rank ? static_cast<long long>(hom.smith.invariants[r]) : 0);
  for (EndRef r : s.ends) {
    auto image = hom.smith.left * neighbor_fiber_vector(m, hom, r);
    std::vector<long long> row;
    for (const auto& v : image) {
      if (abs(v) * N * static_cast<long long>(s.ends.size()) >= limit)
        fail(ErrorKind::BudgetExceeded, "gluing entries too large for the exhaustive search");
      row.push_back(static_cast<long long>(v));
    }
    s.images.push_back(std::move(row));
  }

  std::optional<std::vector<long long>> found;
  if (!options.parallel || s.ends.empty()) {
    found = search_range(s, N, 0, 2 * N);
  } else {
    std::vector<std::future<std::optional<std::vector<long long>>>> tasks;
    long long chunks = std::clamp<long long>(std::thread::hardware_concurrency(), 1, 2 * N);
    for (long long c = 0; c < chunks; ++c)
      tasks.push_back(std::async(std::launch::async, search_range, std::cref(s), N, 2 * N * c / chunks,
                                 2 * N * (c + 1) / chunks));
    // slices are in search order, so the first hit is the least witness
    for (auto& t : tasks) {
      auto r = t.get();
      if (!found && r) found = std::move(r);
    }
  }
  if (!found) return std::nullopt;
  std::vector<WitnessEntry> out;
  for (std::size_t e = 0; e < s.ends.size(); ++e) out.push_back({s.ends[e], Integer((*found)[e])});
  return out;
}

TurbineManifest turbine_manifest(const GraphManifold& m, const ChargeReport& report, bool relative) {
  require(report.blocks.size() == m.blocks().size(), "report does not match the manifold");
  require(relative ? report.relative_chargeless : report.chargeless,
          relative ? "manifold is not chargeless relative to its boundary" : "manifold is not chargeless");
  TurbineManifest out;
  out.relative = relative;
  for (const auto& br : report.blocks) {
    TurbineBlock tb;
    tb.block = br.block;
    for (const auto& w : (relative ? br.relative : br.verdict).witness) {
      TurbineEnd te;
      te.end = w.end;
      te.adjacent_block = m.opposite(w.end).block;
      te.torus = m.end(w.end).torus;
      te.n = w.n;
      te.annulus_copies = 2 * abs(w.n);
      auto [a, b] = neighbor_fiber_class(m, w.end);
      te.slope_c = w.n * a;
      te.slope_h = w.n * b;
      tb.ends.push_back(std::move(te));
    }
    out.blocks.push_back(std::move(tb));
    for (unsigned t : m.free_tori(br.block))
      out.vertical_annuli.push_back({br.block, t, "T(" + m.blocks()[br.block].id + "," + std::to_string(t) + ")"});
  }
  return out;
}

bool retwist_invariance_check(const GraphManifold& m, const Retwist& r) {
  ChargeReport before = is_chargeless(m);
  ChargeReport after = is_chargeless(retwist(m, r));
  if (before.chargeless != after.chargeless) return false;
  for (std::size_t b = 0; b < before.blocks.size(); ++b)
    if (before.blocks[b].verdict.chargeless != after.blocks[b].verdict.chargeless) return false;
  return true;
}

}  // namespace cubuland
