#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/svg.hpp"

using namespace fundom::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"poincare", "1", "2", "--mode", "both"}, "poincare_1_2_both.json"},
      {{"fixed-points", "1", "1"}, "fixed_points_1_1.json"},
      {{"series", "4"}, "series_4.json"},
      {{"svg", "triangle", "1", "2"}, "svg_triangle_1_2.svg"},
  };
  for (const auto& [args, file] : cases) {
    CAPTURE(file);
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == slurp(std::string(FUNDOM_GOLDEN_DIR) + "/" + file));
  }
}

TEST_CASE("poincare") {
  auto doc = Json::parse(run_cli({"poincare", "1", "1", "--mode", "both"}).out);
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["payload"]["equal"] == true);
  CHECK(doc["payload"]["closed"]["t"] == "1 + t^2 + 4*t^4 + t^6");
  CHECK(doc["payload"]["pipeline"]["t"] == "1 + t^2 + 4*t^4 + t^6");

  doc = Json::parse(run_cli({"poincare", "2", "1"}).out);
  CHECK(doc["payload"]["swapped"] == true);
  CHECK(doc["payload"]["closed"]["t"] == "1 + t^2 + 3*t^4 + 4*t^6 + t^8");
  CHECK(doc["metadata"].contains("symmetry"));

  CHECK(run_cli({"poincare", "0", "1"}).code == 2);
  CHECK(run_cli({"poincare", "1", "1", "--mode", "fast"}).code == 2);
  CHECK(run_cli({"poincare", "1"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("fixed points") {
  auto doc = Json::parse(run_cli({"fixed-points", "1", "1"}).out);
  CHECK(doc["payload"]["count"] == 7);

  doc = Json::parse(run_cli({"fixed-points", "1", "2", "--regions", "triangle"}).out);
  CHECK(doc["payload"]["count"] == 15);
  int fixed = 0;
  for (const auto& p : doc["payload"]["points"]) fixed += p["fixed"].get<bool>() ? 1 : 0;
  CHECK(fixed == 10);

  doc = Json::parse(run_cli({"fixed-points", "1", "2", "--regions", "v"}).out);
  CHECK(doc["payload"]["count"] == 10);
  CHECK(doc["payload"]["gaps"].empty());

  doc = Json::parse(run_cli({"fixed-points", "2", "2", "--regions", "v"}).out);
  CHECK(doc["payload"]["gaps"] == Json::parse("[[4,1,1]]"));

  doc = Json::parse(run_cli({"fixed-points", "1", "2", "--regions", "ak"}).out);
  for (const auto& p : doc["payload"]["points"]) CHECK(p["label"] == "G");
  CHECK(doc["metadata"].contains("tie_break"));

  CHECK(run_cli({"fixed-points", "2", "1"}).code == 2);
  CHECK(run_cli({"fixed-points", "1", "2", "--regions", "x"}).code == 2);
}

TEST_CASE("series") {
  auto doc = Json::parse(run_cli({"series", "2"}).out);
  REQUIRE(doc["payload"]["table"].size() == 1);
  CHECK(doc["payload"]["table"][0]["n1"] == 1);
  CHECK(doc["payload"]["table"][0]["n2"] == 1);
  CHECK(doc["payload"]["equal"] == true);
  doc = Json::parse(run_cli({"series", "6"}).out);
  CHECK(doc["payload"]["diagnostics"]["folded_equal"] == true);
  CHECK(run_cli({"series", "0"}).code == 2);
}

TEST_CASE("vertices and classify") {
  auto doc = Json::parse(run_cli({"vertices", "1", "2"}).out);
  CHECK(doc["payload"]["count"] == 6);
  CHECK(doc["payload"]["level"] == 4);
  CHECK(doc["payload"]["vertices"][0]["sigma"] == "123");
  CHECK(doc["payload"]["vertices"][0]["vertex"] == Json::parse("[0,1,3]"));
  CHECK(run_cli({"vertices", "1", "1", "1", "1", "1"}).code == 0);
  CHECK(run_cli({"vertices", "1", "1", "1", "1", "1", "1"}).code == 2);
  CHECK(run_cli({"vertices", "1", "0"}).code == 2);

  doc = Json::parse(run_cli({"classify", "1", "1", "1", "1", "1"}).out);
  CHECK(doc["payload"]["label"] == "G");
  doc = Json::parse(run_cli({"classify", "1", "1", "10", "-4", "-3"}).out);
  CHECK(doc["payload"]["label"] == "P{1}|{2,3}");
  CHECK(doc["payload"]["levi_component"] == Json::parse("[10,-7]"));
  CHECK(run_cli({"classify", "1", "1", "1", "1"}).code == 2);
}

TEST_CASE("payloads round-trip through their echoed arguments") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"poincare", "2", "3", "--mode", "both"},
                                                                {"fixed-points", "1", "3", "--regions", "triangle"},
                                                                {"series", "5"},
                                                                {"vertices", "2", "1", "3"},
                                                                {"classify", "2", "1", "7", "-3", "1"}}) {
    const Json doc = Json::parse(run_cli(args).out);
    const Json& a = doc["command"]["args"];
    const std::string name = doc["command"]["name"];
    Json again;
    if (name == "poincare") again = cmd_poincare(a["n1"], a["n2"], a["mode"]);
    if (name == "fixed-points") again = cmd_fixed_points(a["n1"], a["n2"], a["regions"].get<std::string>());
    if (name == "series") again = cmd_series(a["order"]);
    if (name == "vertices") again = cmd_vertices(a["n"].get<std::vector<int>>());
    if (name == "classify") again = cmd_classify(a["n"].get<std::vector<int>>(), a["mu"].get<std::vector<int>>());
    CHECK(again == doc);
  }
}

TEST_CASE("csv tables") {
  auto r = run_cli({"fixed-points", "1", "1", "--format", "csv"});
  CHECK(r.out.rfind("mu\n0 1 2\n", 0) == 0);
  r = run_cli({"series", "3", "--format", "csv"});
  CHECK(r.out.rfind("n1,n2,direct,expanded,equal\n1,1,1 + t^2 + 4*t^4 + t^6,1 + t^2 + 4*t^4 + t^6,true\n", 0) == 0);
  r = run_cli({"--format", "csv", "poincare", "1", "1"});
  CHECK(r.out == "source,q_power,coefficient\nclosed,0,1\nclosed,1,1\nclosed,2,4\nclosed,3,1\n");
}

TEST_CASE("svg output") {
  for (const char* fig : {"partition", "hexagon", "nonstandard", "triangle", "complement"}) {
    const std::string s = render_svg(fig, 1, 2);
    CHECK(s.rfind("<?xml", 0) == 0);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(s == render_svg(fig, 1, 2));
  }
  const std::string hex = render_svg("hexagon", 1, 2);
  for (const char* label : {"(2,2,0)", "(1,3,0)", "(0,3,1)", "(0,1,3)", "(1,0,3)", "(2,0,2)"}) {
    CHECK(hex.find(label) != std::string::npos);
  }
  const std::string part = render_svg("partition", 1, 1);
  CHECK(part.find(">G<") != std::string::npos);
  CHECK(part.find(">B[123]<") != std::string::npos);
  CHECK(part.find(">P{1}|{2,3}<") != std::string::npos);
  const std::string tri = render_svg("triangle", 1, 2);
  for (const char* r : {">R1<", ">R1p<", ">R2<", ">R2p<", ">R3<", ">R4<", ">R4p<"}) CHECK(tri.find(r) != std::string::npos);

  CHECK(run_cli({"svg", "triangle", "1", "2", "/nonexistent-dir/x.svg"}).code == 1);
  CHECK(run_cli({"svg", "pentagon", "1", "2"}).code == 2);
  CHECK(run_cli({"svg", "triangle", "2", "1"}).code == 2);
}
