#include "cubuland/cli.hpp"

#include "cubuland/chargeless.hpp"
#include "cubuland/dual_complex.hpp"
#include "cubuland/error.hpp"
#include "cubuland/generate.hpp"
#include "cubuland/geodesic_halfplane.hpp"
#include "cubuland/graph_manifold.hpp"
#include "cubuland/json_io.hpp"
#include "cubuland/planar.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace cubuland {
namespace {

struct Options {
  std::string file;
  std::string file2;
  bool json = false;
  std::string format = "text";
  long long brute = 0;
  bool parallel = false;
  std::uint64_t max_candidates = BruteForceOptions{}.max_candidates;
  bool relative = false;
  std::string window;
  std::size_t budget = kDefaultWallBudget;
  std::size_t max_vertices = BuildOptions{}.max_vertices;
  std::size_t horizon = 1;
  std::string vertices;
  std::size_t window_len = 0;
  std::uint64_t seed = 0;
  ManifoldParams manifold;
  WallspaceParams wallspace;
  PatternParams pattern;
  bool no_always = false;
  bool crossing = false;
};

using Action = std::function<int(const Options&, std::ostream&)>;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string list_text(const std::vector<std::string>& items) {
  std::string s = "(";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + ")";
}

std::string witness_text(const std::vector<WitnessEntry>& w) {
  std::vector<std::string> items;
  for (const auto& e : w) items.push_back(e.n.str());
  return list_text(items);
}

std::string verdict_text(const BlockVerdict& v) {
  return v.chargeless ? "chargeless, witness n = " + witness_text(v.witness) : "not chargeless (" + v.obstruction + ")";
}

// ---- gm ----

int gm_charge(const Options& o, std::ostream& out) {
  GraphManifold m = manifold_from_json(load_json_file(o.file));
  ChargeReport r = is_chargeless(m);
  if (o.json) {
    out << report_to_json(m, r).dump(2) << "\n";
  } else {
    out << "realizes: chargeless condition (each block carries a horizontal surface with vertical boundary)\n";
    for (const auto& b : r.blocks) {
      out << "block " << m.blocks()[b.block].id << ": ";
      if (b.fully_glued) {
        out << "charge " << format_rational(*b.charge) << ", " << verdict_text(b.verdict) << "\n";
      } else {
        out << "free boundary, literal system: " << verdict_text(b.verdict) << " [interpretation-sensitive]\n";
        out << "block " << m.blocks()[b.block].id << " relative to boundary: " << verdict_text(b.relative) << "\n";
      }
    }
    if (r.interpretation_sensitive) out << "chargeless relative to boundary: " << yes_no(r.relative_chargeless) << "\n";
    out << "chargeless: " << yes_no(r.chargeless) << "\n";
  }
  return r.chargeless ? kExitOk : kExitNegative;
}

int gm_witness(const Options& o, std::ostream& out) {
  GraphManifold m = manifold_from_json(load_json_file(o.file));
  bool all = true;
  if (o.brute > 0) {
    out << "realizes: exhaustive witness search over n in [-" << o.brute << ", " << o.brute << "] minus 0\n";
    BruteForceOptions opts{o.max_candidates, o.parallel};
    for (std::size_t b = 0; b < m.blocks().size(); ++b) {
      auto w = brute_force_witness(m, b, o.brute, opts);
      out << "block " << m.blocks()[b].id << ": ";
      if (w) {
        out << "witness n = " << witness_text(*w) << "\n";
      } else {
        out << "exhausted at N=" << o.brute << "\n";
        all = false;
      }
    }
  } else {
    out << "realizes: closed-form witness t = lcm |a|, n = t / a\n";
    ChargeReport r = is_chargeless(m);
    for (const auto& b : r.blocks) out << "block " << m.blocks()[b.block].id << ": " << verdict_text(b.verdict) << "\n";
    all = r.chargeless;
  }
  return all ? kExitOk : kExitNegative;
}

int gm_turbine(const Options& o, std::ostream& out) {
  GraphManifold m = manifold_from_json(load_json_file(o.file));
  ChargeReport r = is_chargeless(m);
  TurbineManifest t = turbine_manifest(m, r, o.relative);
  if (o.json) {
    out << manifest_to_json(m, t).dump(2) << "\n";
    return kExitOk;
  }
  out << "realizes: turbine collection (doubled horizontal surfaces glued to vertical annuli)\n";
  for (const auto& b : t.blocks) {
    out << "block " << m.blocks()[b.block].id << ": " << b.surface_copies << " surface copies\n";
    for (const auto& e : b.ends)
      out << "  torus " << e.torus << ": n = " << e.n << ", " << e.annulus_copies << " annuli in block "
          << m.blocks()[e.adjacent_block].id << ", slope " << e.slope_c << "c + " << e.slope_h << "h\n";
  }
  for (const auto& a : t.vertical_annuli)
    out << "vertical annulus at block " << m.blocks()[a.block].id << " torus " << a.torus << " [" << a.label << "]\n";
  return kExitOk;
}

int gm_cover(const Options& o, std::ostream& out) {
  GraphManifold m = manifold_from_json(load_json_file(o.file));
  CoverResult c = induced_cover(m, cover_from_json(load_json_file(o.file2), m));
  ChargeReport base = is_chargeless(m);
  ChargeReport lifted = is_chargeless(c.manifold);
  if (o.json) {
    Json j = to_json(c.manifold);
    j["schema"] = kSchemaVersion;
    out << j.dump(2) << "\n";
  } else {
    out << "realizes: induced cover of a graph manifold from a cover of its graph\n";
    out << "degree: " << c.degree << "\n";
    out << "components: " << c.components << "\n";
    out << "blocks: " << c.manifold.blocks().size() << "\n";
    out << "base chargeless: " << yes_no(base.chargeless) << "\n";
    out << "cover chargeless: " << yes_no(lifted.chargeless) << "\n";
    out << "verdict preserved: " << yes_no(base.chargeless == lifted.chargeless) << "\n";
  }
  return lifted.chargeless ? kExitOk : kExitNegative;
}

int gm_retwist(const Options& o, std::ostream& out) {
  GraphManifold m = manifold_from_json(load_json_file(o.file));
  Retwist r = retwist_from_json(load_json_file(o.file2), m);
  bool same = retwist_invariance_check(m, r);
  out << "realizes: independence of the verdict from the choice of sections\n";
  out << "chargeless before: " << yes_no(is_chargeless(m).chargeless) << "\n";
  out << "chargeless after: " << yes_no(is_chargeless(retwist(m, r)).chargeless) << "\n";
  out << "verdict unchanged: " << yes_no(same) << "\n";
  return same ? kExitOk : kExitNegative;
}

// ---- cube ----

CubeComplex load_complex(const Options& o) {
  Json j = load_json_file(o.file);
  Wallspace ws = wallspace_from_json(j);
  if (!ws.finite()) {
    require(!o.window.empty(), "a periodic wallspace needs --window x0,y0,x1,y1");
    return dual_flat(arrangement_from_json(j), parse_window(o.window), o.budget).complex;
  }
  Basepoint bp = 0;
  if (auto given = basepoint_from_json(j)) {
    bp = *given;
  } else if (ws.kind() == WallspaceKind::FinitePlanar) {
    bp = generic_point(ws, Window{-1, -1, 1, 1});
  }
  return build_dual(ws, bp, BuildOptions{o.max_vertices});
}

void complex_summary(const CubeComplex& c, std::ostream& out) {
  out << "walls: " << c.walls().size() << "\n";
  out << "vertices: " << c.vertex_count() << "\n";
  out << "cells by dimension:";
  for (std::size_t d = 0; d <= c.dimension(); ++d) out << " " << c.cube_count(d);
  out << "\ndimension: " << c.dimension() << "\n";
  out << "hyperplanes: " << c.hyperplanes().size() << "\n";
}

int cube_dual(const Options& o, std::ostream& out) {
  CubeComplex c = load_complex(o);
  if (o.format == "json") {
    out << complex_to_json(c).dump(2) << "\n";
  } else if (o.format == "dot") {
    out << (o.crossing ? crossing_graph_to_dot(c) : complex_to_dot(c));
  } else {
    out << "realizes: dual cube complex of a wallspace (consistent orientations joined by single flips)\n";
    complex_summary(c, out);
  }
  return kExitOk;
}

std::string walls_text(const std::vector<std::size_t>& walls) {
  std::vector<std::string> items;
  for (auto w : walls) items.push_back(std::to_string(w));
  return list_text(items);
}

int cube_decompose(const Options& o, std::ostream& out) {
  CubeComplex c = load_complex(o);
  ProductDecomposition d = decompose_product(c);
  out << "realizes: product decomposition along the non-crossing relation of hyperplanes\n";
  out << "factors: " << d.factors.size() << "\n";
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    out << "factor " << i << ": walls " << walls_text(d.factors[i].walls) << ", vertices "
        << d.factors[i].complex.vertex_count() << ", dimension " << d.factors[i].complex.dimension() << "\n";
  out << "product: " << yes_no(d.is_product) << "\n";
  if (d.obstruction) out << "missing combination: " << orientation_bits(*d.obstruction) << "\n";
  if (d.irreducible()) out << "irreducible\n";
  return kExitOk;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty() && std::all_of(item.begin(), item.end(), ::isdigit), "bad vertex list '" + text + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

int cube_core(const Options& o, std::ostream& out) {
  CubeComplex c = load_complex(o);
  Subcomplex sub = whole_complex(c);
  if (!o.vertices.empty()) {
    auto vs = parse_index_list(o.vertices);
    for (auto v : vs) require(v < c.vertex_count(), "vertex " + std::to_string(v) + " out of range");
    sub = spanned_subcomplex(c, vs);
  }
  EssentialCore core = essential_core(c, sub, o.horizon);
  out << "realizes: essential core (hyperplanes with both halfspaces deep in the subcomplex)\n";
  out << "horizon: " << o.horizon << "\n";
  out << "retained walls: " << walls_text(core.walls) << "\n";
  out << "core vertices: " << core.core.vertex_count() << "\n";
  out << "core dimension: " << core.core.dimension() << "\n";
  return kExitOk;
}

// ---- flat ----

std::string vector_text(const IntVector& v) { return "(" + v.first.str() + ", " + v.second.str() + ")"; }

std::string pattern_text(const std::vector<int>& p) {
  std::vector<std::string> items;
  for (int x : p) items.push_back(std::to_string(x));
  return list_text(items);
}

int flat_families(const Options& o, std::ostream& out) {
  PeriodicArrangement arr = arrangement_from_json(load_json_file(o.file));
  ParallelFamilyReport r = parallel_families(arr);
  out << "realizes: parallel families of a periodic line arrangement\n";
  out << "families: " << r.n << "\n";
  for (const auto& f : r.families)
    out << "direction " << vector_text(f.direction) << ", normal " << vector_text(f.normal) << ", spacing " << f.spacing
        << ", lines " << f.entries.size() << "\n";
  return kExitOk;
}

void flat_summary(const DualFlat& f, std::ostream& out) {
  out << "window: " << format_rational(f.window.x0) << "," << format_rational(f.window.y0) << ","
      << format_rational(f.window.x1) << "," << format_rational(f.window.y1) << "\n";
  complex_summary(f.complex, out);
  for (std::size_t i = 0; i < f.flat.period_patterns.size(); ++i)
    out << "family " << i << ": period pattern " << pattern_text(f.flat.period_patterns[i]) << ", window pattern "
        << pattern_text(f.window_patterns[i]) << "\n";
  out << "standard tiling: " << yes_no(f.flat.standard_tiling) << "\n";
  out << "certified: yes\n";
}

Window window_option(const Options& o) {
  require(!o.window.empty(), "--window x0,y0,x1,y1 is required");
  return parse_window(o.window);
}

int flat_dual(const Options& o, std::ostream& out) {
  PeriodicArrangement arr = arrangement_from_json(load_json_file(o.file));
  DualFlat f = dual_flat(arr, window_option(o), o.budget);
  if (o.format == "json") {
    out << complex_to_json(f.complex).dump(2) << "\n";
    return kExitOk;
  }
  out << "realizes: dual of a plane's lines is a product of cube chains, one per family\n";
  flat_summary(f, out);
  return kExitOk;
}

int flat_classify(const Options& o, std::ostream& out) {
  PeriodicArrangement arr = arrangement_from_json(load_json_file(o.file));
  FamilyClassification c = classify_families(arr, window_option(o), o.budget);
  out << "realizes: classification of a periodic plane by its parallel families\n";
  if (const auto* flat = std::get_if<FlatCase>(&c)) {
    out << "flat of dimension " << flat->n << "\n";
    flat_summary(flat->flat, out);
  } else {
    const auto& two = std::get<TwoFamilies>(c);
    out << "two families:";
    for (const auto& d : two.report.directions) out << " " << vector_text(d);
    out << "\n";
  }
  return kExitOk;
}

int flat_build_y(const Options& o, std::ostream& out) {
  PeriodicArrangement arr = arrangement_from_json(load_json_file(o.file));
  YComplex y = build_Y(arr, window_option(o), o.budget);
  Subcomplex hull = relaxed_hull(y);
  out << "realizes: plane complex cut out of an ambient dual by fixing the sides of walls containing the plane\n";
  out << "ambient vertices: " << y.ambient.vertex_count() << "\n";
  out << "extra walls: " << y.extra_walls.size() << "\n";
  out << "Y cells by dimension:";
  for (std::size_t d = 0; d < y.y.cells.size(); ++d) out << " " << y.y.cell_count(d);
  out << "\nrelaxed hull vertices: " << hull.cell_count(0) << "\n";
  out << "certified: yes\n";
  return kExitOk;
}

// ---- halfplane ----

int halfplane_validate(const Options& o, std::ostream& out) {
  GeodesicWallPattern p = pattern_from_json(load_json_file(o.file));
  std::size_t len = o.window_len ? o.window_len : p.minimum_window();
  PatternCheck c = validate_pattern(p, len);
  out << "realizes: betweenness of hyperplanes crossing a periodic geodesic\n";
  out << "window: " << len << "\n";
  if (c.ok()) {
    out << "valid\n";
    return kExitOk;
  }
  const auto& v = *c.violation;
  if (v.kind == PatternViolation::Kind::SameOrbitCrossing)
    out << "violation: orbit crosses its translate at (" << v.positions[0] << ", " << v.positions[2] << ")\n";
  else
    out << "violation: betweenness at (" << v.positions[0] << ", " << v.positions[1] << ", " << v.positions[2] << ")\n";
  return kExitNegative;
}

int halfplane_classify(const Options& o, std::ostream& out) {
  GeodesicWallPattern p = pattern_from_json(load_json_file(o.file));
  PatternClass c = classify(p);
  out << "realizes: dichotomy for hyperplanes crossing a periodic geodesic\n";
  if (c.kind == PatternClass::Case::BoundedCrossing) {
    out << "Case2 R=" << c.radius << "\n";
    return kExitOk;
  }
  const auto& orbits = p.orbits();
  out << "Case1 witness=(" << orbits[c.witness->first].id << ", " << orbits[c.witness->second].id << ")\n";
  ABPartition ab = partition_AB(p);
  std::vector<std::string> a, b;
  for (auto i : ab.A) a.push_back(orbits[i].id);
  for (auto i : ab.B) b.push_back(orbits[i].id);
  out << "A: " << list_text(a) << "\n";
  out << "B: " << list_text(b) << "\n";
  out << "A/B verified on window " << p.minimum_window() << "\n";
  return kExitOk;
}

void halfplane_summary(const HalfplaneComplex& h, std::ostream& out) {
  long long euler = static_cast<long long>(h.vertex_count()) - static_cast<long long>(h.edge_count()) +
                    static_cast<long long>(h.square_count());
  out << "window: " << h.window_len << "\n";
  out << "V E F: " << h.vertex_count() << " " << h.edge_count() << " " << h.square_count() << "\n";
  out << "V-E+F: " << euler << "\n";
  out << "isometric: yes\n";
}

int halfplane_build(const Options& o, std::ostream& out) {
  GeodesicWallPattern p = pattern_from_json(load_json_file(o.file));
  HalfplaneComplex h = build_halfplane(p, o.window_len ? o.window_len : 8);
  out << "realizes: combinatorial half-plane bounded by the geodesic\n";
  halfplane_summary(h, out);
  return kExitOk;
}

int halfplane_pair(const Options& o, std::ostream& out) {
  GeodesicWallPattern alpha = pattern_from_json(load_json_file(o.file));
  GeodesicWallPattern beta = pattern_from_json(load_json_file(o.file2));
  TwoPatternClass c = classify_two_patterns(alpha, beta, o.window_len ? o.window_len : 8);
  out << "realizes: two commuting geodesics give a half-plane times a line, or a cocompact hull\n";
  if (const auto* f = std::get_if<HalfplaneFactor>(&c)) {
    out << "half-plane in " << (f->which == 0 ? "alpha" : "beta") << "\n";
    halfplane_summary(f->halfplane, out);
    out << "product vertices: " << f->product_vertex_count << "\n";
  } else {
    const auto& h = std::get<CocompactHull>(c);
    out << "cocompact hull: " << h.alpha_per_period << " x " << h.beta_per_period << " = " << h.vertices_per_period
        << " vertices per period\n";
  }
  return kExitOk;
}

// ---- generate ----

int generate_cmd(const std::string& kind, const Options& o, std::ostream& out) {
  Json j;
  if (kind == "manifold") {
    j = to_json(generate_manifold(o.seed, o.manifold));
  } else if (kind == "wallspace") {
    j = to_json(generate_wallspace(o.seed, o.wallspace));
  } else {
    PatternParams p = o.pattern;
    p.allow_always = !o.no_always;
    j = to_json(generate_pattern(o.seed, p));
  }
  Json doc{{"schema", kSchemaVersion}};
  for (auto& [k, v] : j.items()) doc[k] = v;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cube complexes dual to walls, periodic planes, geodesic half-planes and chargeless graph manifolds",
               "cubuland"};
  app.require_subcommand(1);
  Options o;
  Action action;
  auto bind = [&](CLI::App* sub, Action a) { sub->callback([&action, a] { action = a; }); };

  auto* gm = app.add_subcommand("gm", "graph manifolds");
  gm->require_subcommand(1);
  {
    auto* s = gm->add_subcommand("charge", "decide whether a graph manifold is chargeless");
    s->add_option("manifold", o.file, "manifold JSON")->required();
    s->add_flag("--json", o.json, "emit the report as JSON");
    bind(s, gm_charge);

    s = gm->add_subcommand("witness", "print witnesses, or search for them exhaustively");
    s->add_option("manifold", o.file, "manifold JSON")->required();
    s->add_option("--brute", o.brute, "exhaustive search bound N")->check(CLI::PositiveNumber);
    s->add_flag("--parallel", o.parallel, "split the exhaustive search across threads");
    s->add_option("--max-candidates", o.max_candidates, "cap on the exhaustive search space");
    bind(s, gm_witness);

    s = gm->add_subcommand("turbine", "turbine collection manifest of a chargeless manifold");
    s->add_option("manifold", o.file, "manifold JSON")->required();
    s->add_flag("--relative", o.relative, "use the verdict relative to the boundary");
    s->add_flag("--json", o.json, "emit the manifest as JSON");
    bind(s, gm_turbine);

    s = gm->add_subcommand("cover", "induced cover from a cover of the underlying graph");
    s->add_option("manifold", o.file, "manifold JSON")->required();
    s->add_option("cover", o.file2, "cover JSON")->required();
    s->add_flag("--json", o.json, "emit the covering manifold as JSON");
    bind(s, gm_cover);

    s = gm->add_subcommand("retwist-check", "check the verdict is unchanged by a zero-sum change of sections");
    s->add_option("manifold", o.file, "manifold JSON")->required();
    s->add_option("retwist", o.file2, "retwist JSON")->required();
    bind(s, gm_retwist);
  }

  auto* cube = app.add_subcommand("cube", "dual cube complexes");
  cube->require_subcommand(1);
  {
    auto add_input = [&](CLI::App* s) {
      s->add_option("wallspace", o.file, "wallspace JSON")->required();
      s->add_option("--window", o.window, "window x0,y0,x1,y1 for periodic input");
      s->add_option("--budget", o.budget, "wall budget for periodic windows");
      s->add_option("--max-vertices", o.max_vertices, "vertex budget of the dual construction");
    };
    auto* s = cube->add_subcommand("dual", "build the dual cube complex");
    add_input(s);
    s->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    s->add_flag("--crossing", o.crossing, "with --format dot, draw the crossing graph");
    bind(s, cube_dual);

    s = cube->add_subcommand("decompose", "split the dual into a product");
    add_input(s);
    bind(s, cube_decompose);

    s = cube->add_subcommand("core", "essential core of a subcomplex");
    add_input(s);
    s->add_option("--horizon", o.horizon, "depth a halfspace must reach")->check(CLI::PositiveNumber);
    s->add_option("--vertices", o.vertices, "comma-separated vertex ids spanning the subcomplex (default: all)");
    bind(s, cube_core);
  }

  auto* flat = app.add_subcommand("flat", "periodic planes");
  flat->require_subcommand(1);
  {
    auto add_input = [&](CLI::App* s, bool window) {
      s->add_option("arrangement", o.file, "arrangement JSON")->required();
      if (window) {
        s->add_option("--window", o.window, "window x0,y0,x1,y1")->required();
        s->add_option("--budget", o.budget, "wall budget for the window");
      }
    };
    auto* s = flat->add_subcommand("families", "parallel families");
    add_input(s, false);
    bind(s, flat_families);
    s = flat->add_subcommand("dual", "certified dual of the window's lines");
    add_input(s, true);
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    bind(s, flat_dual);
    s = flat->add_subcommand("classify", "flat or two families");
    add_input(s, true);
    bind(s, flat_classify);
    s = flat->add_subcommand("build-y", "plane complex inside the ambient dual");
    add_input(s, true);
    bind(s, flat_build_y);
  }

  auto* half = app.add_subcommand("halfplane", "hyperplanes along a periodic geodesic");
  half->require_subcommand(1);
  {
    auto* s = half->add_subcommand("validate", "check the betweenness condition");
    s->add_option("pattern", o.file, "pattern JSON")->required();
    s->add_option("--window", o.window_len, "positions to check (default 4m(R+1))");
    bind(s, halfplane_validate);
    s = half->add_subcommand("classify", "unbounded or bounded crossing");
    s->add_option("pattern", o.file, "pattern JSON")->required();
    bind(s, halfplane_classify);
    s = half->add_subcommand("build", "combinatorial half-plane on a window");
    s->add_option("pattern", o.file, "pattern JSON")->required();
    s->add_option("--window", o.window_len, "hyperplane positions (default 8)");
    bind(s, halfplane_build);
    s = half->add_subcommand("pair", "classify a pair of commuting geodesics");
    s->add_option("alpha", o.file, "pattern JSON")->required();
    s->add_option("beta", o.file2, "pattern JSON")->required();
    s->add_option("--window", o.window_len, "hyperplane positions (default 8)");
    bind(s, halfplane_pair);
  }

  auto* gen = app.add_subcommand("generate", "deterministic random instances");
  gen->require_subcommand(1);
  {
    auto* s = gen->add_subcommand("manifold", "graph manifold JSON");
    s->add_option("--seed", o.seed, "64-bit seed");
    s->add_option("--blocks", o.manifold.blocks, "number of blocks");
    s->add_option("--extra-edges", o.manifold.extra_edges, "edges beyond a spanning tree");
    s->add_option("--bound", o.manifold.bound, "max |entry| of gluing matrices");
    s->add_option("--free-tori", o.manifold.free_tori, "free boundary tori");
    bind(s, [](const Options& opt, std::ostream& os) { return generate_cmd("manifold", opt, os); });
    s = gen->add_subcommand("wallspace", "finite bipartition wallspace JSON");
    s->add_option("--seed", o.seed, "64-bit seed");
    s->add_option("--points", o.wallspace.points, "number of points");
    s->add_option("--walls", o.wallspace.walls, "number of walls");
    bind(s, [](const Options& opt, std::ostream& os) { return generate_cmd("wallspace", opt, os); });
    s = gen->add_subcommand("pattern", "geodesic wall pattern JSON");
    s->add_option("--seed", o.seed, "64-bit seed");
    s->add_option("--period", o.pattern.period, "period m");
    s->add_option("--orbits", o.pattern.orbits, "number of orbits");
    s->add_option("--max-radius", o.pattern.max_radius, "largest Within radius");
    s->add_flag("--no-always", o.no_always, "only bounded crossings");
    bind(s, [](const Options& opt, std::ostream& os) { return generate_cmd("pattern", opt, os); });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return action(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitInvalid;
  }
}

}  // namespace cubuland
