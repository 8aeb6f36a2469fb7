#include "cubuland/json_io.hpp"

#include "cubuland/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace cubuland {

Json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // drop the library's own "[json.exception.parse_error.101] parse error at line x, column y: " prefix
    auto colon = what.find(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    fail(ErrorKind::InvalidInput, source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

namespace {

const Json& field(const Json& j, const char* key) {
  require(j.is_object(), std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  require(it != j.end(), std::string("missing field '") + key + "'");
  return *it;
}

Integer to_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    require(denominator(r) == 1, std::string(what) + " must be an integer");
    return numerator(r);
  }
  fail(ErrorKind::InvalidInput, std::string(what) + " must be an integer or a decimal string");
}

Rational to_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(to_integer(j, what));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::InvalidInput, std::string(what) + " must be a rational string \"p/q\" or an integer");
}

long long to_small(const Json& j, const char* what, long long lo, long long hi) {
  Integer v = to_integer(j, what);
  require(v >= lo && v <= hi, std::string(what) + " is out of range");
  return static_cast<long long>(v);
}

std::string to_string_field(const Json& j, const char* what) {
  require(j.is_string(), std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json int_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

std::vector<LineEntry> lines_from_json(const Json& j) {
  require(j.is_array(), "'lines' must be an array");
  std::vector<LineEntry> out;
  for (const auto& l : j) {
    LineEntry e;
    e.line = make_line(to_rational(field(l, "A"), "A"), to_rational(field(l, "B"), "B"), to_rational(field(l, "C"), "C"));
    if (l.contains("mult")) e.multiplicity = static_cast<int>(to_small(l["mult"], "mult", 1, 1 << 20));
    out.push_back(std::move(e));
  }
  return out;
}

Json line_json(const Line& l) {
  Json j = Json::object();
  j["A"] = l.a.str();
  j["B"] = l.b.str();
  j["C"] = l.c.str();
  return j;
}

Json lines_json(const std::vector<LineEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json j = line_json(e.line);
    j["mult"] = e.multiplicity;
    out.push_back(std::move(j));
  }
  return out;
}

Lattice lattice_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() && j[1].size() == 2,
          "'lattice' must be [[u1,u2],[w1,w2]]");
  return Lattice{{to_integer(j[0][0], "lattice"), to_integer(j[0][1], "lattice")},
                 {to_integer(j[1][0], "lattice"), to_integer(j[1][1], "lattice")}};
}

Json lattice_json(const Lattice& l) {
  return Json::array({Json::array({int_json(l.u[0]), int_json(l.u[1])}), Json::array({int_json(l.w[0]), int_json(l.w[1])})});
}

}  // namespace

Wallspace wallspace_from_json(const Json& j) {
  std::string kind = to_string_field(field(j, "kind"), "kind");
  if (kind == "finite-bipartition") {
    int points = static_cast<int>(to_small(field(j, "points"), "points", 0, 1 << 20));
    const Json& walls = field(j, "walls");
    require(walls.is_array(), "'walls' must be an array");
    std::vector<BipartitionEntry> entries;
    for (const auto& w : walls) {
      BipartitionEntry e;
      for (auto [key, side] : {std::pair{"side0", &e.wall.side0}, std::pair{"side1", &e.wall.side1}}) {
        const Json& s = field(w, key);
        require(s.is_array(), std::string("'") + key + "' must be an array of point ids");
        for (const auto& p : s) side->push_back(static_cast<int>(to_small(p, "point id", 0, points - 1)));
      }
      if (w.contains("mult")) e.multiplicity = static_cast<int>(to_small(w["mult"], "mult", 1, 1 << 20));
      entries.push_back(std::move(e));
    }
    return Wallspace::bipartition(points, std::move(entries));
  }
  if (kind == "finite-planar") return Wallspace::planar(lines_from_json(field(j, "lines")));
  if (kind == "periodic-planar")
    return Wallspace::periodic(lattice_from_json(field(j, "lattice")), lines_from_json(field(j, "lines")));
  fail(ErrorKind::InvalidInput, "unknown wallspace kind '" + kind + "'");
}

Json to_json(const Wallspace& ws) {
  Json j = Json::object();
  switch (ws.kind()) {
    case WallspaceKind::FiniteBipartition: {
      j["kind"] = "finite-bipartition";
      j["points"] = ws.point_count();
      Json walls = Json::array();
      for (const auto& e : ws.bipartition_entries())
        walls.push_back(Json{{"side0", e.wall.side0}, {"side1", e.wall.side1}, {"mult", e.multiplicity}});
      j["walls"] = std::move(walls);
      break;
    }
    case WallspaceKind::FinitePlanar:
      j["kind"] = "finite-planar";
      j["lines"] = lines_json(ws.line_entries());
      break;
    case WallspaceKind::PeriodicPlanar:
      j["kind"] = "periodic-planar";
      j["lattice"] = lattice_json(*ws.lattice());
      j["lines"] = lines_json(ws.line_entries());
      break;
  }
  return j;
}

std::optional<Basepoint> basepoint_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basepoint")) return std::nullopt;
  const Json& b = j["basepoint"];
  if (b.is_array()) {
    require(b.size() == 2, "'basepoint' must be a point id or [x, y]");
    return Basepoint{Point{to_rational(b[0], "basepoint"), to_rational(b[1], "basepoint")}};
  }
  return Basepoint{static_cast<int>(to_small(b, "basepoint", 0, 1 << 20))};
}

PeriodicArrangement arrangement_from_json(const Json& j) {
  Wallspace ws = wallspace_from_json(j);
  std::vector<ExtraWall> extra;
  if (j.contains("extra_walls")) {
    require(j["extra_walls"].is_array(), "'extra_walls' must be an array");
    for (const auto& e : j["extra_walls"]) {
      const Json& l = field(e, "line");
      ExtraWall w;
      w.line = make_line(to_rational(field(l, "A"), "A"), to_rational(field(l, "B"), "B"), to_rational(field(l, "C"), "C"));
      w.side = static_cast<Side>(to_small(field(e, "side"), "side", 0, 1));
      extra.push_back(std::move(w));
    }
  }
  return make_arrangement(std::move(ws), std::move(extra));
}

Json to_json(const PeriodicArrangement& arr) {
  Json j = to_json(arr.lines);
  if (!arr.extra_walls.empty()) {
    Json extra = Json::array();
    for (const auto& e : arr.extra_walls) extra.push_back(Json{{"line", line_json(e.line)}, {"side", e.side}});
    j["extra_walls"] = std::move(extra);
  }
  return j;
}

GeodesicWallPattern pattern_from_json(const Json& j) {
  auto period = static_cast<std::size_t>(to_small(field(j, "m"), "m", 1, 1 << 20));
  const Json& orbits = field(j, "orbits");
  require(orbits.is_array(), "'orbits' must be an array");
  std::vector<Orbit> os;
  for (const auto& o : orbits)
    os.push_back(Orbit{to_string_field(field(o, "id"), "orbit id"),
                       static_cast<std::size_t>(to_small(field(o, "pos"), "pos", 0, 1 << 20))});
  std::vector<RuleEntry> rules;
  if (j.contains("rules")) {
    require(j["rules"].is_array(), "'rules' must be an array");
    for (const auto& r : j["rules"]) {
      const Json& pair = field(r, "pair");
      require(pair.is_array() && pair.size() == 2, "'pair' must name two orbits");
      RuleEntry e{to_string_field(pair[0], "orbit id"), to_string_field(pair[1], "orbit id"), {}};
      std::string kind = to_string_field(field(r, "rule"), "rule");
      if (kind == "always") {
        e.rule.kind = RuleKind::Always;
      } else if (kind == "never") {
        e.rule.kind = RuleKind::Never;
      } else if (kind == "within") {
        e.rule.kind = RuleKind::Within;
        e.rule.radius = static_cast<std::size_t>(to_small(field(r, "R"), "R", 0, 1 << 20));
      } else {
        fail(ErrorKind::InvalidInput, "unknown rule '" + kind + "' (expected always, never or within)");
      }
      rules.push_back(std::move(e));
    }
  }
  return GeodesicWallPattern::make(period, std::move(os), rules);
}

Json to_json(const GeodesicWallPattern& p) {
  Json j = Json::object();
  j["m"] = p.period();
  Json orbits = Json::array();
  for (const auto& o : p.orbits()) orbits.push_back(Json{{"id", o.id}, {"pos", o.position}});
  j["orbits"] = std::move(orbits);
  Json rules = Json::array();
  for (const auto& r : p.rule_entries()) {
    Json e{{"pair", {r.first, r.second}}};
    switch (r.rule.kind) {
      case RuleKind::Always: e["rule"] = "always"; break;
      case RuleKind::Never: e["rule"] = "never"; break;
      case RuleKind::Within:
        e["rule"] = "within";
        e["R"] = r.rule.radius;
        break;
    }
    rules.push_back(std::move(e));
  }
  j["rules"] = std::move(rules);
  return j;
}

namespace {

std::size_t block_ref(const Json& j, const std::vector<Block>& blocks) {
  std::string id = to_string_field(j, "block");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].id == id) return i;
  fail(ErrorKind::InvalidInput, "unknown block '" + id + "'");
}

GluingMatrix matrix_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() && j[1].size() == 2,
          "'matrix' must be [[a,p],[b,q]]");
  return GluingMatrix{to_integer(j[0][0], "a"), to_integer(j[1][0], "b"), to_integer(j[0][1], "p"),
                      to_integer(j[1][1], "q")};
}

Json matrix_json(const GluingMatrix& g) {
  return Json::array({Json::array({int_json(g.a), int_json(g.p)}), Json::array({int_json(g.b), int_json(g.q)})});
}

}  // namespace

GraphManifold manifold_from_json(const Json& j) {
  const Json& blocks = field(j, "blocks");
  require(blocks.is_array(), "'blocks' must be an array");
  std::vector<Block> bs;
  for (const auto& b : blocks) {
    Block block;
    block.id = to_string_field(field(b, "id"), "block id");
    block.genus = static_cast<unsigned>(to_small(field(b, "genus"), "genus", 0, 1 << 16));
    block.boundary_count = static_cast<unsigned>(to_small(field(b, "boundary"), "boundary", 0, 1 << 16));
    bool singular = b.contains("singular_fibers") && !(b["singular_fibers"].is_array() && b["singular_fibers"].empty());
    bool twisted = b.contains("euler") && to_integer(b["euler"], "euler") != 0;
    if (singular || twisted)
      fail(ErrorKind::UnsupportedConfiguration,
           "block '" + block.id + "' is not a product circle bundle; pass to a finite cover without singular fibers "
           "(where bundles over surfaces with boundary are trivial) before ingesting");
    bs.push_back(std::move(block));
  }
  const Json& edges = field(j, "edges");
  require(edges.is_array(), "'edges' must be an array");
  std::vector<GluedEdge> es;
  for (const auto& e : edges) {
    const Json& j1 = field(e, "end1");
    const Json& j2 = field(e, "end2");
    GluedEdge edge;
    edge.end1 = EdgeEnd{block_ref(field(j1, "block"), bs),
                        static_cast<unsigned>(to_small(field(j1, "torus"), "torus", 0, 1 << 16)),
                        matrix_from_json(field(j1, "matrix"))};
    edge.end2.block = block_ref(field(j2, "block"), bs);
    edge.end2.torus = static_cast<unsigned>(to_small(field(j2, "torus"), "torus", 0, 1 << 16));
    edge.end2.matrix = j2.contains("matrix") ? matrix_from_json(j2["matrix"]) : far_side_matrix(edge.end1.matrix);
    es.push_back(std::move(edge));
  }
  return GraphManifold::make(std::move(bs), std::move(es));
}

Json to_json(const GraphManifold& m) {
  Json j = Json::object();
  Json blocks = Json::array();
  for (const auto& b : m.blocks()) blocks.push_back(Json{{"id", b.id}, {"genus", b.genus}, {"boundary", b.boundary_count}});
  j["blocks"] = std::move(blocks);
  Json edges = Json::array();
  for (const auto& e : m.edges()) {
    auto end = [&](const EdgeEnd& x) {
      return Json{{"block", m.blocks()[x.block].id}, {"torus", x.torus}, {"matrix", matrix_json(x.matrix)}};
    };
    edges.push_back(Json{{"end1", end(e.end1)}, {"end2", end(e.end2)}});
  }
  j["edges"] = std::move(edges);
  return j;
}

GraphCover cover_from_json(const Json& j, const GraphManifold& base) {
  if (j.contains("permutations")) {
    auto degree = static_cast<std::size_t>(to_small(field(j, "degree"), "degree", 1, 1 << 16));
    std::vector<std::vector<std::size_t>> perms;
    require(j["permutations"].is_array(), "'permutations' must be an array");
    for (const auto& p : j["permutations"]) {
      require(p.is_array(), "each permutation must be an array");
      std::vector<std::size_t> perm;
      for (const auto& x : p) perm.push_back(static_cast<std::size_t>(to_small(x, "permutation entry", 0, 1 << 16)));
      perms.push_back(std::move(perm));
    }
    return cover_from_permutations(base, degree, perms);
  }
  GraphCover c;
  const Json& vertices = field(j, "vertices");
  require(vertices.is_array(), "'vertices' must be an array");
  std::map<std::string, std::size_t> index;
  for (const auto& v : vertices) {
    std::string id = to_string_field(field(v, "id"), "vertex id");
    auto over = base.block_index(to_string_field(field(v, "over"), "over"));
    require(over.has_value(), "cover vertex '" + id + "' lies over an unknown block");
    require(index.emplace(id, c.vertices.size()).second, "duplicate cover vertex '" + id + "'");
    c.vertices.push_back({id, *over});
  }
  const Json& edges = field(j, "edges");
  require(edges.is_array(), "'edges' must be an array");
  auto vertex = [&](const Json& x) {
    std::string id = to_string_field(x, "cover vertex");
    auto it = index.find(id);
    require(it != index.end(), "unknown cover vertex '" + id + "'");
    return it->second;
  };
  for (const auto& e : edges)
    c.edges.push_back({static_cast<std::size_t>(to_small(field(e, "over"), "over", 0, 1 << 20)), vertex(field(e, "end1")),
                       vertex(field(e, "end2"))});
  return c;
}

Json to_json(const GraphCover& c, const GraphManifold& base) {
  Json vertices = Json::array();
  for (const auto& v : c.vertices) vertices.push_back(Json{{"id", v.id}, {"over", base.blocks().at(v.over).id}});
  Json edges = Json::array();
  for (const auto& e : c.edges)
    edges.push_back(Json{{"over", e.over}, {"end1", c.vertices.at(e.end1).id}, {"end2", c.vertices.at(e.end2).id}});
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Retwist retwist_from_json(const Json& j, const GraphManifold& m) {
  Retwist r;
  const Json& twists = field(j, "twists");
  require(twists.is_array(), "'twists' must be an array");
  for (const auto& t : twists) {
    std::string id = to_string_field(field(t, "block"), "block");
    auto b = m.block_index(id);
    require(b.has_value(), "retwist names unknown block '" + id + "'");
    const Json& shifts = field(t, "m");
    require(shifts.is_array(), "'m' must be an array");
    std::vector<Integer> ms;
    for (const auto& x : shifts) ms.push_back(to_integer(x, "m"));
    require(r.shifts.emplace(*b, std::move(ms)).second, "block '" + id + "' is retwisted twice");
  }
  return r;
}

Json to_json(const Retwist& r, const GraphManifold& m) {
  Json twists = Json::array();
  for (const auto& [b, ms] : r.shifts) {
    Json arr = Json::array();
    for (const auto& x : ms) arr.push_back(int_json(x));
    twists.push_back(Json{{"block", m.blocks().at(b).id}, {"m", std::move(arr)}});
  }
  return Json{{"twists", std::move(twists)}};
}

Window parse_window(std::string_view text) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  require(v.size() == 4, "window must be x0,y0,x1,y1");
  require(v[0] < v[2] && v[1] < v[3], "window must have x0 < x1 and y0 < y1");
  return Window{v[0], v[1], v[2], v[3]};
}

std::string orientation_bits(const Orientation& x) {
  std::string s;
  for (Side b : x.sides) s.push_back(b ? '1' : '0');
  return s;
}

Json complex_to_json(const CubeComplex& c) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["walls"] = c.walls().size();
  j["dimension"] = c.dimension();
  Json counts = Json::array();
  for (std::size_t d = 0; d <= c.dimension(); ++d) counts.push_back(c.cube_count(d));
  j["counts"] = std::move(counts);
  Json vertices = Json::array();
  for (const auto& v : c.vertices()) vertices.push_back(orientation_bits(v));
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : c.edges()) edges.push_back(Json::array({e.u, e.v, e.wall}));
  j["edges"] = std::move(edges);
  Json cubes = Json::object();
  for (std::size_t d = 2; d <= c.dimension(); ++d) {
    Json list = Json::array();
    for (const auto& q : c.cubes(d)) list.push_back(Json{{"base", q.base}, {"walls", q.walls}});
    cubes[std::to_string(d)] = std::move(list);
  }
  j["cubes"] = std::move(cubes);
  Json hyperplanes = Json::array();
  for (const auto& h : c.hyperplanes())
    hyperplanes.push_back(Json{{"wall", h.wall}, {"side0", h.side0}, {"side1", h.side1}});
  j["hyperplanes"] = std::move(hyperplanes);
  return j;
}

std::string complex_to_dot(const CubeComplex& c) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (std::size_t v = 0; v < c.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << orientation_bits(c.vertices()[v]) << "\"];\n";
  for (const auto& e : c.edges()) out << "  " << e.u << " -- " << e.v << " [label=\"w" << e.wall << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string crossing_graph_to_dot(const CubeComplex& c) {
  std::ostringstream out;
  out << "graph crossing {\n";
  const auto& hs = c.hyperplanes();
  for (std::size_t h = 0; h < hs.size(); ++h) out << "  " << h << " [label=\"w" << hs[h].wall << "\"];\n";
  auto g = c.crossing_graph();
  for (std::size_t h = 0; h < g.size(); ++h)
    for (std::size_t k : g[h])
      if (h < k) out << "  " << h << " -- " << k << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

Json verdict_json(const GraphManifold& m, const BlockVerdict& v) {
  Json j = Json::object();
  j["chargeless"] = v.chargeless;
  if (v.chargeless) {
    Json w = Json::array();
    for (const auto& e : v.witness)
      w.push_back(Json{{"edge", e.end.edge}, {"end", e.end.side + 1}, {"torus", m.end(e.end).torus}, {"n", int_json(e.n)}});
    j["witness"] = std::move(w);
  } else {
    j["obstruction"] = v.obstruction;
  }
  return j;
}

}  // namespace

Json report_to_json(const GraphManifold& m, const ChargeReport& report) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["chargeless"] = report.chargeless;
  j["relative_chargeless"] = report.relative_chargeless;
  j["interpretation_sensitive"] = report.interpretation_sensitive;
  Json blocks = Json::array();
  for (const auto& b : report.blocks) {
    Json e = Json::object();
    e["id"] = m.blocks()[b.block].id;
    e["fully_glued"] = b.fully_glued;
    e["charge"] = b.charge ? Json(format_rational(*b.charge)) : Json(nullptr);
    e["verdict"] = verdict_json(m, b.verdict);
    if (b.interpretation_sensitive) e["relative"] = verdict_json(m, b.relative);
    e["interpretation_sensitive"] = b.interpretation_sensitive;
    blocks.push_back(std::move(e));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json manifest_to_json(const GraphManifold& m, const TurbineManifest& manifest) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["relative"] = manifest.relative;
  Json blocks = Json::array();
  for (const auto& b : manifest.blocks) {
    Json ends = Json::array();
    for (const auto& e : b.ends)
      ends.push_back(Json{{"edge", e.end.edge},
                          {"end", e.end.side + 1},
                          {"torus", e.torus},
                          {"adjacent_block", m.blocks()[e.adjacent_block].id},
                          {"n", int_json(e.n)},
                          {"annulus_copies", int_json(e.annulus_copies)},
                          {"slope", Json::array({int_json(e.slope_c), int_json(e.slope_h)})}});
    blocks.push_back(Json{{"id", m.blocks()[b.block].id}, {"surface_copies", b.surface_copies}, {"ends", std::move(ends)}});
  }
  j["blocks"] = std::move(blocks);
  Json annuli = Json::array();
  for (const auto& a : manifest.vertical_annuli)
    annuli.push_back(Json{{"block", m.blocks()[a.block].id}, {"torus", a.torus}, {"label", a.label}});
  j["vertical_annuli"] = std::move(annuli);
  return j;
}

}  // namespace cubuland
