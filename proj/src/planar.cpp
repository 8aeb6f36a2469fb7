#include "cubuland/planar.hpp"

#include "cubuland/error.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace cubuland {

namespace {

IntVector direction_of_normal(const IntVector& n) {
  IntVector d{-n.second, n.first};
  if (d.first < 0 || (d.first == 0 && d.second < 0)) d = {-d.first, -d.second};
  return d;
}

Integer spacing_along(const IntVector& n, const Lattice& lattice) {
  return gcd(n.first * lattice.u[0] + n.second * lattice.u[1], n.first * lattice.w[0] + n.second * lattice.w[1]);
}

std::array<Point, 4> corners(const Window& w) {
  return {Point{w.x0, w.y0}, Point{w.x0, w.y1}, Point{w.x1, w.y0}, Point{w.x1, w.y1}};
}

bool on_some_line(const Wallspace& ws, const Point& p) {
  for (const auto& e : ws.line_entries())
    if (evaluate(e.line, p) == Rational(e.line.c)) return true;
  return false;
}

Window shifted(const Window& w, const Rational& dx, const Rational& dy) {
  return Window{w.x0 + dx, w.y0 + dy, w.x1 + dx, w.y1 + dy};
}

// Slope r such that (1, r) is parallel to none of the given normals.
Integer transverse_slope(const Wallspace& finite_planar) {
  Integer r = 1;
  for (const auto& e : finite_planar.line_entries()) r = std::max(r, Integer(abs(e.line.a) + 1));
  return r;
}

std::optional<std::string> certify_chain(const CubeComplex& factor, const std::vector<std::vector<std::size_t>>& groups) {
  std::size_t expected_vertices = 1;
  std::size_t max_dim = 0;
  for (const auto& g : groups) {
    expected_vertices += (std::size_t{1} << g.size()) - 1;
    max_dim = std::max(max_dim, g.size());
  }
  if (factor.vertex_count() != expected_vertices)
    return "factor has " + std::to_string(factor.vertex_count()) + " vertices, chain of cubes predicts " +
           std::to_string(expected_vertices);
  if (factor.dimension() != max_dim) return "factor dimension differs from the largest coinciding group";

  for (std::size_t d = 1; d <= max_dim; ++d) {
    std::size_t expected = 0;
    for (const auto& g : groups) {
      std::size_t k = g.size();
      if (d > k) continue;
      std::size_t choose = 1;
      for (std::size_t i = 0; i < d; ++i) choose = choose * (k - i) / (i + 1);
      expected += choose << (k - d);
    }
    if (factor.cube_count(d) != expected)
      return "factor has " + std::to_string(factor.cube_count(d)) + " cubes of dimension " + std::to_string(d) +
             ", chain predicts " + std::to_string(expected);
  }

  std::vector<const Cube*> chain;
  for (const auto& g : groups) {
    const Cube* found = nullptr;
    std::size_t hits = 0;
    for (const auto& q : factor.cubes(g.size()))
      if (q.walls == g) {
        found = &q;
        ++hits;
      }
    if (hits != 1) return "coinciding group does not span exactly one cube";
    chain.push_back(found);
  }
  std::vector<std::size_t> joints;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    std::vector<std::size_t> shared;
    std::set_intersection(chain[i]->vertices.begin(), chain[i]->vertices.end(), chain[i + 1]->vertices.begin(),
                          chain[i + 1]->vertices.end(), std::back_inserter(shared));
    if (shared.size() != 1) return "consecutive cubes are not glued along a single vertex";
    joints.push_back(shared[0]);
  }
  for (std::size_t i = 1; i < chain.size() - 1 && chain.size() >= 3; ++i)
    if (factor.distance(joints[i - 1], joints[i]) != groups[i].size())
      return "gluing vertices of a cube are not opposite";
  return std::nullopt;
}

}  // namespace

PeriodicArrangement make_arrangement(Wallspace periodic, std::vector<ExtraWall> extra_walls) {
  require(periodic.kind() == WallspaceKind::PeriodicPlanar,
          "parallel families are only defined for periodic arrangements; a finite family always loses its "
          "outermost lines");
  require(!periodic.line_entries().empty(), "arrangement has no lines");
  for (const auto& e : extra_walls) require(e.side == 0 || e.side == 1, "extra wall side must be 0 or 1");
  return PeriodicArrangement{std::move(periodic), std::move(extra_walls)};
}

ParallelFamilyReport parallel_families(const PeriodicArrangement& arr) {
  require(arr.lines.kind() == WallspaceKind::PeriodicPlanar, "parallel families need a periodic arrangement");
  require(!arr.lines.line_entries().empty(), "arrangement has no lines");
  const Lattice& lattice = *arr.lines.lattice();
  ParallelFamilyReport report;
  const auto& entries = arr.lines.line_entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    IntVector n = primitive_normal(entries[i].line);
    auto it = std::find_if(report.families.begin(), report.families.end(),
                           [&](const ParallelFamily& f) { return f.normal == n; });
    if (it == report.families.end()) {
      Integer spacing = spacing_along(n, lattice);
      if (spacing == 0)
        fail(ErrorKind::InvalidLattice, "no lattice translate crosses lines of direction (" +
                                            direction_of_normal(n).first.str() + ", " +
                                            direction_of_normal(n).second.str() + ")");
      report.families.push_back(ParallelFamily{direction_of_normal(n), n, spacing, {}});
      it = std::prev(report.families.end());
    }
    it->entries.push_back(i);
  }
  report.n = report.families.size();
  for (const auto& f : report.families) report.directions.push_back(f.direction);
  return report;
}

Window nudge_window(const PeriodicArrangement& arr, const Window& window, std::size_t wall_budget) {
  Wallspace lines = expand_window(arr.lines, window, wall_budget);
  auto hits = [&](const Window& w, const Wallspace& ws) {
    for (const auto& p : corners(w))
      if (on_some_line(ws, p)) return true;
    return false;
  };
  if (!hits(window, lines)) return window;

  // smallest positive gap between parallel lines, in offset units
  auto report = parallel_families(arr);
  std::optional<Rational> min_gap;
  for (const auto& f : report.families) {
    std::vector<Rational> offsets;
    for (const auto& e : lines.line_entries())
      if (primitive_normal(e.line) == f.normal) offsets.push_back(normal_offset(e.line));
    std::sort(offsets.begin(), offsets.end());
    Rational gap(f.spacing);
    for (std::size_t i = 1; i < offsets.size(); ++i)
      if (offsets[i] != offsets[i - 1]) gap = std::min(gap, Rational(offsets[i] - offsets[i - 1]));
    if (!min_gap || gap < *min_gap) min_gap = gap;
  }
  Integer r = 1;
  for (const auto& f : report.families) r = std::max(r, Integer(abs(f.normal.first) + 1));

  Rational step = *min_gap / 2;
  for (int attempt = 0; attempt < 64; ++attempt, step /= 2) {
    Window candidate = shifted(window, step, step * Rational(r));
    if (!hits(candidate, expand_window(arr.lines, candidate, wall_budget))) return candidate;
  }
  fail(ErrorKind::InvalidInput, "could not move the window corners off the lines");
}

Point generic_point(const Wallspace& finite_planar, const Window& window) {
  Point center{(window.x0 + window.x1) / 2, (window.y0 + window.y1) / 2};
  if (!on_some_line(finite_planar, center)) return center;
  Integer r = transverse_slope(finite_planar);
  Rational step = std::min(Rational(window.x1 - window.x0), Rational((window.y1 - window.y0) / Rational(r))) / 4;
  for (int attempt = 0; attempt < 256; ++attempt, step /= 2) {
    Point p{center.x + step, center.y + step * Rational(r)};
    if (!on_some_line(finite_planar, p)) return p;
  }
  fail(ErrorKind::DegenerateBasepoint, "no point of the window avoids the lines");
}

DualFlat dual_flat(const PeriodicArrangement& arr, const Window& window, std::size_t wall_budget) {
  auto report = parallel_families(arr);
  DualFlat out;
  out.window = nudge_window(arr, window, wall_budget);
  out.window_walls = expand_window(arr.lines, out.window, wall_budget);
  const auto& walls = out.window_walls.walls();
  const auto& entries = out.window_walls.line_entries();

  out.family_walls.assign(report.n, {});
  out.window_patterns.assign(report.n, {});
  std::vector<std::vector<std::vector<std::size_t>>> groups(report.n);  // per family, per line group, wall ids
  {
    // line entries of the expansion are distinct lines; order groups by offset
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return normal_offset(entries[a].line) < normal_offset(entries[b].line);
    });
    for (std::size_t e : order) {
      IntVector n = primitive_normal(entries[e].line);
      std::size_t f = 0;
      while (f < report.n && report.families[f].normal != n) ++f;
      std::vector<std::size_t> ids;
      for (const auto& w : walls)
        if (w.entry == e) ids.push_back(w.id);
      out.family_walls[f].insert(out.family_walls[f].end(), ids.begin(), ids.end());
      out.window_patterns[f].push_back(entries[e].multiplicity);
      groups[f].push_back(std::move(ids));
    }
  }
  for (std::size_t f = 0; f < report.n; ++f) {
    require(!out.family_walls[f].empty(), "window meets no line of family " + std::to_string(f));
    std::sort(out.family_walls[f].begin(), out.family_walls[f].end());
  }

  out.complex = build_dual(out.window_walls, generic_point(out.window_walls, out.window));

  // certify: one chain-of-cubes factor per family, and c is their product
  std::size_t product = 1;
  for (std::size_t f = 0; f < report.n; ++f) {
    const auto& fw = out.family_walls[f];
    Orientation start;
    for (std::size_t w : fw) start.sides.push_back(out.complex.vertices()[0].sides[w]);
    CubeComplex factor = build_dual(out.complex.walls().restricted(fw), start);
    std::vector<std::vector<std::size_t>> local;
    for (const auto& g : groups[f]) {
      std::vector<std::size_t> ids;
      for (std::size_t w : g) ids.push_back(static_cast<std::size_t>(std::lower_bound(fw.begin(), fw.end(), w) - fw.begin()));
      local.push_back(std::move(ids));
    }
    if (auto problem = certify_chain(factor, local))
      fail(ErrorKind::StructuralFailure, "family " + std::to_string(f) + ": " + *problem);
    product *= factor.vertex_count();
  }
  if (product != out.complex.vertex_count())
    fail(ErrorKind::StructuralFailure, "dual complex is not the product of its family factors");

  out.flat.n = report.n;
  for (const auto& f : report.families) {
    std::vector<std::pair<Rational, int>> pattern;
    for (std::size_t e : f.entries) {
      Rational o = normal_offset(arr.lines.line_entries()[e].line) / Rational(f.spacing);
      o -= Rational(floor_of(o));
      pattern.emplace_back(o, arr.lines.line_entries()[e].multiplicity);
    }
    std::sort(pattern.begin(), pattern.end());
    std::vector<int> mults;
    for (const auto& [o, m] : pattern) {
      mults.push_back(m);
      if (m != 1) out.flat.standard_tiling = false;
    }
    out.flat.period_patterns.push_back(std::move(mults));
  }
  return out;
}

YComplex build_Y(const PeriodicArrangement& arr, const Window& window, std::size_t wall_budget) {
  const auto& extras = arr.extra_walls;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    Wall wi{i, i, HalfplanePair{extras[i].line}};
    for (std::size_t j = 0; j < i; ++j) {
      Wall wj{j, j, HalfplanePair{extras[j].line}};
      require(sides_intersect(wi, extras[i].side, wj, extras[j].side),
              "designated sides of extra walls " + std::to_string(j) + " and " + std::to_string(i) + " are disjoint");
    }
  }

  YComplex out;
  out.flat = dual_flat(arr, window, wall_budget);
  const Window& w = out.flat.window;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const Line& l = extras[i].line;
    Rational lo, hi;
    bool first = true;
    for (const auto& p : corners(w)) {
      Rational v = evaluate(l, p);
      if (first || v < lo) lo = v;
      if (first || v > hi) hi = v;
      first = false;
    }
    bool meets = extras[i].side == 0 ? lo <= Rational(l.c) : hi >= Rational(l.c);
    require(meets, "designated side of extra wall " + std::to_string(i) + " misses the window");
  }

  const WallSystem& essential = out.flat.complex.walls();
  const std::size_t e = essential.size();
  const std::size_t k = extras.size();
  WallSystem ambient_walls(e + k, [&](std::size_t i, Side si, std::size_t j, Side sj) {
    if (i < e && j < e) return essential.meets(i, si, j, sj);
    return true;
  });
  Orientation start = out.flat.complex.vertices()[0];
  for (const auto& x : extras) start.sides.push_back(x.side);
  out.ambient = build_dual(std::move(ambient_walls), std::move(start));
  for (std::size_t i = 0; i < e; ++i) out.essential_walls.push_back(i);
  for (std::size_t i = 0; i < k; ++i) out.extra_walls.push_back(e + i);

  std::vector<std::size_t> members;
  for (std::size_t v = 0; v < out.ambient.vertex_count(); ++v) {
    const auto& s = out.ambient.vertices()[v].sides;
    bool frozen = true;
    for (std::size_t i = 0; i < k && frozen; ++i) frozen = s[e + i] == extras[i].side;
    if (frozen) members.push_back(v);
  }
  out.y = spanned_subcomplex(out.ambient, members);

  const CubeComplex& flat = out.flat.complex;
  if (members.size() != flat.vertex_count())
    fail(ErrorKind::StructuralFailure, "Y has " + std::to_string(members.size()) + " vertices, the flat has " +
                                           std::to_string(flat.vertex_count()));
  for (std::size_t v : members) {
    Orientation x;
    x.sides.assign(out.ambient.vertices()[v].sides.begin(), out.ambient.vertices()[v].sides.begin() + e);
    if (!flat.find(x)) fail(ErrorKind::StructuralFailure, "Y vertex does not restrict to a flat vertex");
  }
  for (std::size_t d = 1; d <= std::max(flat.dimension(), out.ambient.dimension()); ++d)
    if (out.y.cell_count(d) != flat.cube_count(d))
      fail(ErrorKind::StructuralFailure, "Y and the flat differ in cubes of dimension " + std::to_string(d));
  if (!is_isometrically_embedded(out.ambient, out.y).isometric)
    fail(ErrorKind::StructuralFailure, "Y 1-skeleton is not isometrically embedded");
  return out;
}

Subcomplex relaxed_hull(const YComplex& y) {
  const std::size_t e = y.essential_walls.size();
  std::vector<std::size_t> relaxed;
  for (std::size_t v = 0; v < y.ambient.vertex_count(); ++v) {
    Orientation x;
    x.sides.assign(y.ambient.vertices()[v].sides.begin(), y.ambient.vertices()[v].sides.begin() + e);
    if (y.flat.complex.find(x)) relaxed.push_back(v);
  }
  return convex_hull(y.ambient, relaxed);
}

FamilyClassification classify_families(const PeriodicArrangement& arr, const Window& window, std::size_t wall_budget) {
  auto report = parallel_families(arr);
  if (report.n < 2)
    fail(ErrorKind::BelowMinimum,
         "only one parallel family: a cocompact plane needs two essential lines crossing transversely");
  if (report.n == 2) return TwoFamilies{std::move(report)};
  return FlatCase{report.n, dual_flat(arr, window, wall_budget)};
}

}  // namespace cubuland
