#include "cubuland/cli.hpp"
#include "cubuland/generate.hpp"
#include "cubuland/json_io.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cubuland;
using namespace testing_support;

namespace {

std::string data(const std::string& name) { return std::string(CUBULAND_DATA_DIR) + "/" + name + ".json"; }

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Scratch file removed with the object.
class TempFile {
 public:
  TempFile(const std::string& name, const std::string& contents)
      : path_(std::filesystem::temp_directory_path() / ("cubuland_test_" + name)) {
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("charge verdicts map to exit codes") {
  CHECK(call({"gm", "charge", data("flip")}).code == kExitOk);
  Outcome single = call({"gm", "charge", data("single_end")});
  CHECK(single.code == kExitNegative);
  CHECK(contains(single.out, "charge 1 is nonzero"));
  CHECK(call({"gm", "charge", data("balanced_loop")}).code == kExitOk);
}

TEST_CASE("text output names the construction") {
  Outcome r = call({"gm", "charge", data("flip")});
  CHECK(r.out.rfind("realizes: ", 0) == 0);
  Outcome c = call({"halfplane", "classify", data("pattern")});
  CHECK(c.code == kExitOk);
  CHECK(contains(c.out, "Case2 R=3"));
}

TEST_CASE("json reports") {
  Outcome r = call({"cube", "dual", data("triangle"), "--format", "json"});
  REQUIRE(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j["schema"] == "cubuland/1");
  CHECK(j["vertices"].size() == 8);
  CHECK(j["counts"] == Json::array({8, 12, 6, 1}));

  Outcome charge = call({"gm", "charge", data("balanced_loop"), "--json"});
  Json report = Json::parse(charge.out);
  CHECK(report["chargeless"] == true);
  CHECK(report["blocks"][0]["verdict"]["witness"].size() == 2);

  Outcome turbine = call({"gm", "turbine", data("balanced_loop"), "--json"});
  CHECK(Json::parse(turbine.out)["blocks"][0]["ends"][0]["annulus_copies"] == 2);
  CHECK(call({"gm", "turbine", data("single_end")}).code == kExitInvalid);
}

TEST_CASE("witness search from the command line") {
  Outcome r = call({"gm", "witness", data("balanced_loop"), "--brute", "3", "--parallel"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "n = (1, 1)"));
  CHECK(call({"gm", "witness", data("single_end"), "--brute", "5"}).code == kExitNegative);
  CHECK(call({"gm", "witness", data("balanced_loop"), "--brute", "1000", "--max-candidates", "10"}).code ==
        kExitBudget);
}

TEST_CASE("cover and retwist commands") {
  GraphManifold loop = manifold_from_json(load_json_file(data("balanced_loop")));
  TempFile cover("cover.json", to_json(cover_from_permutations(loop, 2, {{1, 0}}), loop).dump());
  Outcome c = call({"gm", "cover", data("balanced_loop"), cover.path(), "--json"});
  REQUIRE(c.code == kExitOk);
  GraphManifold lifted = manifold_from_json(Json::parse(c.out));
  CHECK(lifted.blocks().size() == 2);
  CHECK(lifted.component_count() == 1);

  Retwist r;
  r.shifts[0] = {1, -1};
  TempFile twist("retwist.json", to_json(r, loop).dump());
  CHECK(call({"gm", "retwist-check", data("balanced_loop"), twist.path()}).code == kExitOk);
  Retwist bad;
  bad.shifts[0] = {1, 1};
  TempFile bad_twist("bad_retwist.json", to_json(bad, loop).dump());
  Outcome b = call({"gm", "retwist-check", data("balanced_loop"), bad_twist.path()});
  CHECK(b.code == kExitInvalid);
  CHECK(contains(b.err, "invalid-retwist"));
}

TEST_CASE("malformed input reports line and column") {
  TempFile broken("broken.json", "{\n  \"blocks\": [\n    {\"id\": \"v\",, }\n  ]\n}\n");
  Outcome r = call({"gm", "charge", broken.path()});
  CHECK(r.code == kExitInvalid);
  CHECK(contains(r.err, broken.path() + ":3:"));

  TempFile wrong("wrong.json", R"({"blocks": [{"id": "v", "genus": 0, "boundary": 1}], "edges": []})");
  CHECK(call({"gm", "charge", wrong.path()}).code == kExitInvalid);
  CHECK(call({"gm", "charge", "/nonexistent/cubuland.json"}).code == kExitInvalid);
  CHECK(call({"gm", "nonsense"}).code == kExitInvalid);
  CHECK(call({"cube", "dual", data("triangle"), "--format", "svg"}).code == kExitInvalid);
}

TEST_CASE("budgets map to their exit code") {
  Outcome r = call({"cube", "dual", data("square_lattice"), "--window", "0,0,30,30"});
  CHECK(r.code == kExitBudget);
  CHECK(contains(r.err, "budget"));
}

TEST_CASE("generators are deterministic") {
  for (const std::string kind : {"manifold", "wallspace", "pattern"}) {
    Outcome a = call({"generate", kind, "--seed", "7"});
    Outcome b = call({"generate", kind, "--seed", "7"});
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out != call({"generate", kind, "--seed", "8"}).out);
  }
}

TEST_CASE("property: generated manifolds are accepted by the CLI") {
  for (int seed = 0; seed < 100; ++seed) {
    Outcome g = call({"generate", "manifold", "--seed", std::to_string(seed), "--blocks", std::to_string(1 + seed % 4),
                      "--free-tori", std::to_string(seed % 2)});
    REQUIRE(g.code == kExitOk);
    TempFile f("generated.json", g.out);
    int code = call({"gm", "charge", f.path()}).code;
    CHECK((code == kExitOk || code == kExitNegative));
  }
}

TEST_CASE("property: json round-trips") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GraphManifold m = generate_manifold(seed, ManifoldParams{3, 2, 3, 1});
    Json mj = to_json(m);
    CHECK(to_json(manifold_from_json(mj)) == mj);

    GraphCover c = generate_cover(seed, m, 2);
    Json cj = to_json(c, m);
    CHECK(to_json(cover_from_json(cj, m), m) == cj);

    Retwist r = generate_retwist(seed, m, 3);
    Json rj = to_json(r, m);
    CHECK(to_json(retwist_from_json(rj, m), m) == rj);

    Wallspace ws = generate_wallspace(seed, WallspaceParams{5, 8});
    Json wj = to_json(ws);
    CHECK(to_json(wallspace_from_json(wj)) == wj);

    GeodesicWallPattern p = generate_pattern(seed, PatternParams{});
    Json pj = to_json(p);
    CHECK(to_json(pattern_from_json(pj)) == pj);
  }
  for (const char* name : {"square_lattice", "multiplicity_21", "three_families"}) {
    Json aj = to_json(arrangement_from_json(load_json_file(data(name))));
    CHECK(to_json(arrangement_from_json(aj)) == aj);
  }
}

}  // TEST_SUITE
