#include "cubuland/wallspace.hpp"

#include "cubuland/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cubuland {

std::strong_ordering operator<=>(const Line& l, const Line& r) {
  if (l.a != r.a) return l.a < r.a ? std::strong_ordering::less : std::strong_ordering::greater;
  if (l.b != r.b) return l.b < r.b ? std::strong_ordering::less : std::strong_ordering::greater;
  if (l.c != r.c) return l.c < r.c ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Line make_line(const Rational& a, const Rational& b, const Rational& c) {
  require(a != 0 || b != 0, "line has zero normal (A, B) = (0, 0)");
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer scale = lcm(lcm(denominator(a), denominator(b)), denominator(c));
  Integer ia = numerator(a) * (scale / denominator(a));
  Integer ib = numerator(b) * (scale / denominator(b));
  Integer ic = numerator(c) * (scale / denominator(c));
  Integer g = gcd(gcd(ia, ib), ic);
  ia /= g;
  ib /= g;
  ic /= g;
  if (ia < 0 || (ia == 0 && ib < 0)) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  return Line{ia, ib, ic};
}

Rational evaluate(const Line& line, const Point& p) {
  return Rational(line.a) * p.x + Rational(line.b) * p.y;
}

bool parallel(const Line& l, const Line& r) { return l.a * r.b - l.b * r.a == 0; }

std::pair<Integer, Integer> primitive_normal(const Line& line) {
  Integer g = gcd(line.a, line.b);
  return {line.a / g, line.b / g};
}

Rational normal_offset(const Line& line) { return Rational(line.c, gcd(line.a, line.b)); }

namespace {

bool sorted_sets_meet(const std::vector<int>& x, const std::vector<int>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

const std::vector<int>& side_points(const Bipartition& w, Side s) { return s == 0 ? w.side0 : w.side1; }

bool halfplanes_meet(const Line& l1, Side s1, const Line& l2, Side s2) {
  if (!parallel(l1, l2)) return true;
  // Parallel canonical lines share the primitive normal n; compare along n.
  Rational o1 = normal_offset(l1);
  Rational o2 = normal_offset(l2);
  if (s1 == s2) return true;
  if (s1 == 0) return o2 <= o1;  // n.p <= o1 and n.p >= o2
  return o1 <= o2;
}

}  // namespace

bool sides_intersect(const Wall& w1, Side s1, const Wall& w2, Side s2) {
  if (w1.geometry.index() != w2.geometry.index())
    fail(ErrorKind::InvalidInput, "cannot compare a bipartition wall with a half-plane wall");
  if (const auto* b1 = std::get_if<Bipartition>(&w1.geometry)) {
    // Copies of one recorded wall cross, like coinciding closed half-planes;
    // read literally their opposite sides would be disjoint point sets.
    if (w1.entry == w2.entry && w1.id != w2.id) return true;
    const auto& b2 = std::get<Bipartition>(w2.geometry);
    return sorted_sets_meet(side_points(*b1, s1), side_points(b2, s2));
  }
  return halfplanes_meet(std::get<HalfplanePair>(w1.geometry).line, s1,
                         std::get<HalfplanePair>(w2.geometry).line, s2);
}

bool cross(const Wall& w1, const Wall& w2) {
  for (Side s1 = 0; s1 < 2; ++s1)
    for (Side s2 = 0; s2 < 2; ++s2)
      if (!sides_intersect(w1, s1, w2, s2)) return false;
  return true;
}

Wallspace Wallspace::bipartition(int points, std::vector<BipartitionEntry> entries) {
  require(points >= 2, "a bipartition wallspace needs at least two points");
  std::set<std::vector<int>> seen;
  for (auto& e : entries) {
    require(e.multiplicity >= 1, "wall multiplicity must be positive");
    auto& w = e.wall;
    std::sort(w.side0.begin(), w.side0.end());
    std::sort(w.side1.begin(), w.side1.end());
    require(!w.side0.empty() && !w.side1.empty(), "bipartition wall with an empty side");
    std::vector<int> all;
    std::merge(w.side0.begin(), w.side0.end(), w.side1.begin(), w.side1.end(), std::back_inserter(all));
    bool exact_cover = static_cast<int>(all.size()) == points;
    for (int i = 0; exact_cover && i < points; ++i) exact_cover = all[i] == i;
    require(exact_cover, "bipartition wall sides must partition points 0.." + std::to_string(points - 1));
    // A wall and its side-swap are the same geometric wall.
    const auto& key = w.side0.front() == 0 ? w.side0 : w.side1;
    require(seen.insert(key).second, "duplicate bipartition wall; record it once with a multiplicity");
  }
  Wallspace ws;
  ws.kind_ = WallspaceKind::FiniteBipartition;
  ws.points_ = points;
  ws.bipartitions_ = std::move(entries);
  ws.expand();
  return ws;
}

Wallspace Wallspace::planar(std::vector<LineEntry> entries) {
  std::set<Line> seen;
  for (const auto& e : entries) {
    require(e.multiplicity >= 1, "line multiplicity must be positive");
    require(seen.insert(e.line).second, "duplicate line; record coinciding lines with a multiplicity");
  }
  Wallspace ws;
  ws.kind_ = WallspaceKind::FinitePlanar;
  ws.lines_ = std::move(entries);
  ws.expand();
  return ws;
}

namespace {

Integer dot(const std::pair<Integer, Integer>& n, const std::array<Integer, 2>& v) {
  return n.first * v[0] + n.second * v[1];
}

// Spacing of the translates of a line with primitive normal n.
Integer translate_spacing(const std::pair<Integer, Integer>& n, const Lattice& lattice) {
  return gcd(dot(n, lattice.u), dot(n, lattice.w));
}

}  // namespace

Wallspace Wallspace::periodic(Lattice lattice, std::vector<LineEntry> entries) {
  require(lattice.u[0] * lattice.w[1] - lattice.u[1] * lattice.w[0] != 0,
          "lattice vectors must be linearly independent");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require(entries[i].multiplicity >= 1, "line multiplicity must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      const Line& l1 = entries[i].line;
      const Line& l2 = entries[j].line;
      if (!parallel(l1, l2)) continue;
      Integer spacing = translate_spacing(primitive_normal(l1), lattice);
      Rational diff = (normal_offset(l1) - normal_offset(l2)) / Rational(spacing);
      require(boost::multiprecision::denominator(diff) != 1,
              "periodic lines " + std::to_string(j) + " and " + std::to_string(i) +
                  " are lattice translates of each other; list one with a multiplicity");
    }
  }
  Wallspace ws;
  ws.kind_ = WallspaceKind::PeriodicPlanar;
  ws.lattice_ = std::move(lattice);
  ws.lines_ = std::move(entries);
  return ws;
}

void Wallspace::expand() {
  walls_.clear();
  if (kind_ == WallspaceKind::FiniteBipartition) {
    for (std::size_t e = 0; e < bipartitions_.size(); ++e)
      for (int k = 0; k < bipartitions_[e].multiplicity; ++k)
        walls_.push_back(Wall{walls_.size(), e, bipartitions_[e].wall});
  } else if (kind_ == WallspaceKind::FinitePlanar) {
    for (std::size_t e = 0; e < lines_.size(); ++e)
      for (int k = 0; k < lines_[e].multiplicity; ++k)
        walls_.push_back(Wall{walls_.size(), e, HalfplanePair{lines_[e].line}});
  }
}

Orientation principal_orientation(const Wallspace& ws, const Basepoint& basepoint) {
  require(ws.finite(), "principal orientation needs a finite wallspace; expand a window first");
  Orientation out;
  out.sides.reserve(ws.walls().size());
  if (ws.kind() == WallspaceKind::FiniteBipartition) {
    const int* point = std::get_if<int>(&basepoint);
    require(point != nullptr, "bipartition wallspaces take a point id as basepoint");
    require(*point >= 0 && *point < ws.point_count(), "basepoint id out of range");
    for (const auto& w : ws.walls()) {
      const auto& side1 = std::get<Bipartition>(w.geometry).side1;
      out.sides.push_back(std::binary_search(side1.begin(), side1.end(), *point) ? 1 : 0);
    }
    return out;
  }
  const Point* p = std::get_if<Point>(&basepoint);
  require(p != nullptr, "planar wallspaces take a rational point as basepoint");
  for (const auto& w : ws.walls()) {
    const Line& line = std::get<HalfplanePair>(w.geometry).line;
    Rational v = evaluate(line, *p);
    if (v == Rational(line.c))
      fail(ErrorKind::DegenerateBasepoint,
           "basepoint (" + format_rational(p->x) + ", " + format_rational(p->y) + ") lies on wall " +
               std::to_string(w.id));
    out.sides.push_back(v < Rational(line.c) ? 0 : 1);
  }
  return out;
}

Wallspace expand_window(const Wallspace& ws, const Window& window, std::size_t wall_budget) {
  require(ws.kind() == WallspaceKind::PeriodicPlanar, "expand_window needs a periodic wallspace");
  require(window.x0 < window.x1 && window.y0 < window.y1, "degenerate window");
  const Lattice& lattice = *ws.lattice();

  struct Range {
    const LineEntry* entry;
    std::pair<Integer, Integer> normal;
    Rational offset;
    Integer spacing, k_lo, k_hi;
  };
  std::vector<Range> ranges;
  Integer wall_count = 0;
  for (const auto& entry : ws.line_entries()) {
    auto n = primitive_normal(entry.line);
    Rational offset = normal_offset(entry.line);
    Integer spacing = translate_spacing(n, lattice);
    if (spacing == 0) fail(ErrorKind::InvalidLattice, "no lattice translate moves the line off itself");
    Rational nx(n.first), ny(n.second);
    Rational lo = std::min(nx * window.x0, nx * window.x1) + std::min(ny * window.y0, ny * window.y1);
    Rational hi = std::max(nx * window.x0, nx * window.x1) + std::max(ny * window.y0, ny * window.y1);
    Integer k_lo = ceil_of((lo - offset) / Rational(spacing));
    Integer k_hi = floor_of((hi - offset) / Rational(spacing));
    if (k_hi >= k_lo) wall_count += (k_hi - k_lo + 1) * entry.multiplicity;
    ranges.push_back(Range{&entry, n, offset, spacing, k_lo, k_hi});
  }
  if (wall_count > wall_budget)
    fail(ErrorKind::BudgetExceeded, "window holds " + wall_count.str() + " walls, budget is " +
                                        std::to_string(wall_budget));

  std::vector<LineEntry> out;
  for (const auto& r : ranges)
    for (Integer k = r.k_lo; k <= r.k_hi; ++k)
      out.push_back(LineEntry{make_line(Rational(r.normal.first), Rational(r.normal.second),
                                        r.offset + Rational(k * r.spacing)),
                              r.entry->multiplicity});
  std::sort(out.begin(), out.end(), [](const LineEntry& l, const LineEntry& r) { return l.line < r.line; });
  return Wallspace::planar(std::move(out));
}

}  // namespace cubuland
