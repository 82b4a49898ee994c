#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "srgddg/cli.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/graph6.hpp"
#include "srgddg/io.hpp"

using namespace srgddg;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json report(const Run& r) { return Json::parse(r.out); }

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "srgddg_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("graph files") {
  std::istringstream ok(">>graph6<<Dhc\n\nC~\r\nIheA@GUAo\n");
  auto file = io::read_graphs(ok);
  REQUIRE(file.graphs.size() == 3);
  CHECK(file.graphs[1].line == 3);
  CHECK(file.graphs[2].graph == gen::petersen());

  std::ostringstream back;
  std::vector<Graph> gs;
  for (auto& r : file.graphs) gs.push_back(r.graph);
  io::write_graphs(back, gs);
  CHECK(back.str() == "Dhc\nC~\nIheA@GUAo\n");

  std::istringstream corrupt("Dhc\nD!!\nC~\n");
  auto kept = io::read_graphs(corrupt, true);
  CHECK(kept.graphs.size() == 2);
  REQUIRE(kept.diagnostics.size() == 1);
  CHECK(kept.diagnostics[0].line == 2);

  std::istringstream corrupt2("Dhc\nD!!\nC~\n");
  try {
    io::read_graphs(corrupt2, false);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream empty("");
  CHECK(io::read_graphs(empty).graphs.empty());
}

TEST_CASE("design and partition JSON") {
  auto d = io::design_from_json(Json::parse(R"({"v":3,"blocks":[[0,1],[0,2],[1,2]]})"));
  CHECK(d.block_size() == 2);
  CHECK(io::design_to_json(d)["blocks"] == Json::parse("[[0,1],[0,2],[1,2]]"));
  CHECK_THROWS_AS(io::design_from_json(Json::parse(R"({"v":3,"blocks":[[0,5]]})")), ParseError);
  auto p = io::partition_from_json(Json::parse("[[1,3,5],[0,2,4]]"), 6);
  CHECK(p.classes[0].members() == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(io::partition_from_json(Json::parse("[[0,1],[1,2]]"), 3), Error);
  CHECK(io::fnv1a64("") == "cbf29ce484222325");
  CHECK(io::fnv1a64("a") == "af63dc4c8601ec8c");
}

TEST_CASE("cli: gen piped into recognize") {
  auto g = run({"gen", "sp-complement", "--d", "2", "--q", "2"});
  CHECK(g.code == 0);
  auto r = run({"recognize", "-"}, g.out);
  CHECK(r.code == 0);
  Json j = report(r);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "recognize");
  const auto& srg = j["results"][0]["srg"];
  CHECK(srg["v"] == 15);
  CHECK(srg["k"] == 8);
  CHECK(srg["lambda"] == 4);
  CHECK(srg["mu"] == 4);
}

TEST_CASE("cli: feasible") {
  Json j = report(run({"feasible", "--s", "-6", "--n-max", "40", "--json"}));
  const auto& rows = j["results"]["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["n"] == 9);
  CHECK(rows[0]["handshake_ok"] == false);
  CHECK(rows[2]["ddg"]["V"] == 252);
  auto text = run({"feasible", "--s-range", "-3..-2", "--n-max", "20"});
  CHECK(text.code == 0);
  CHECK(text.out.find("(40,27,18,18)") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"coclique", "--mode", "some"}).code == 2);
  CHECK(run({"feasible"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto not_srg = run({"decompose", "-"}, "Dhc\n");
  CHECK(not_srg.code == 1);
  CHECK(report(not_srg)["error"]["code"] == "InvalidArgument");
  auto bad = run({"recognize", "-"}, "Dhc\nD!!\n");
  CHECK(bad.code == 1);
  CHECK(report(bad)["error"]["line"] == 2);
  auto kept = run({"recognize", "-", "--keep-going"}, "Dhc\nD!!\n");
  CHECK(kept.code == 0);
  CHECK(report(kept)["diagnostics"].size() == 1);
  auto missing = run({"spectrum", "/nonexistent/file.g6"});
  CHECK(missing.code == 1);
  auto empty = run({"recognize", "-"}, "");
  CHECK(empty.code == 0);
  CHECK(report(empty)["results"].empty());
}

TEST_CASE("cli: reports are deterministic apart from timing") {
  auto g = run({"gen", "sp-complement", "--d", "2", "--q", "3"}).out;
  Json a = report(run({"decompose", "-", "--all"}, g));
  Json b = report(run({"decompose", "-", "--all"}, g));
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump() == b.dump());
  CHECK(a["results"][0]["decompositions"].size() == 40);
}

TEST_CASE("cli: construct from files, then canon and iso") {
  auto dir = temp_dir();
  auto g = run({"gen", "sp-complement", "--d", "2", "--q", "2"}).out;
  Json dec = report(run({"decompose", "-"}, g))["results"][0]["decompositions"][0];

  // Rebuild the DDG file in delta numbering from the report.
  Graph gamma = graph6::decode(g.substr(0, g.size() - 1));
  std::vector<int> members = dec["coclique"].get<std::vector<int>>();
  Bitset keep = Bitset::from_members(15, members).complement();
  std::vector<int> delta_vertices = keep.members();
  Graph delta = induced_subgraph(gamma, keep);
  Json classes = Json::array();
  for (const auto& cls : dec["classes"]) {
    Json c = Json::array();
    for (int v : cls.get<std::vector<int>>())
      c.push_back(std::find(delta_vertices.begin(), delta_vertices.end(), v) - delta_vertices.begin());
    classes.push_back(c);
  }
  write(dir / "delta.g6", graph6::encode(delta) + "\n");
  write(dir / "partition.json", Json{{"classes", classes}}.dump());
  write(dir / "design.json", dec["design"].dump());

  auto built = run({"construct", "--ddg", (dir / "delta.g6").string(), "--partition", (dir / "partition.json").string(),
                    "--design", (dir / "design.json").string(), "--phi", "2,0,1"});
  REQUIRE(built.code == 0);
  write(dir / "built.g6", built.out);
  write(dir / "orig.g6", g);
  Json iso = report(run({"iso", (dir / "built.g6").string(), (dir / "orig.g6").string()}));
  CHECK(iso["results"]["isomorphic"] == true);

  auto bad_phi = run({"construct", "--ddg", (dir / "delta.g6").string(), "--partition",
                      (dir / "partition.json").string(), "--design", (dir / "design.json").string(), "--phi", "0,0,1"});
  CHECK(bad_phi.code == 1);
  CHECK(report(bad_phi)["error"]["code"] == "PhiNotBijective");

  auto canon = run({"canon", (dir / "built.g6").string()});
  auto canon2 = run({"canon", (dir / "orig.g6").string()});
  CHECK(canon.out == canon2.out);
}

TEST_CASE("cli: census") {
  std::string g15 = run({"gen", "sp-complement", "--d", "2", "--q", "2"}).out;
  std::string g15b = run({"gen", "triangular", "6"}).out;
  std::string grid = run({"gen", "grid", "6", "6"}).out;
  Json j = report(run({"census", "-", "--threads", "2", "--keep-going"}, g15 + "junk!\n" + g15b + grid));
  CHECK(j["results"]["graphs"] == 3);
  CHECK(j["results"]["decomposable"] == 2);
  CHECK(j["results"]["distinct_ddg_certificates"] == 1);
  CHECK(j["diagnostics"].size() == 1);
  CHECK(j["results"]["per_graph"][2]["decompositions"] == 0);
}
