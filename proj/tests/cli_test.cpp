#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "helpers.hpp"
#include "outerdraw/io.hpp"

using namespace outerdraw;
using outerdraw::testing::data_path;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  Json json() const { return parse_json(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "outerdraw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, Count) {
  const Outcome r = run({"count", "--k", "2", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "90\n");
  EXPECT_EQ(run({"count", "--k", "3", "--n", "6", "--closed"}).out, run({"count", "--k", "3", "--n", "6"}).out);
  EXPECT_EQ(run({"count", "--k", "0", "--n", "5"}).code, 2);
}

TEST(Cli, CheckTables) {
  const Outcome ok = run({"check", data_path("four_curves.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(ok.json()["consistent"].get<bool>());
  EXPECT_EQ(run({"check", "--k", "2", data_path("quad_guard_off.json")}).code, 0);
  EXPECT_EQ(run({"check", data_path("five_curves_b.json")}).code, 0);
  EXPECT_EQ(run({"check", data_path("five_curves_a.json")}).code, 0);

  const Outcome bad = run({"check", data_path("illegal_triple.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json()["witness"]["rule"], "triple");
  EXPECT_EQ(run({"check", data_path("illegal_triple_atgraph.json")}).code, 1);
  // --k must agree with the document
  EXPECT_EQ(run({"check", "--k", "3", data_path("four_curves.json")}).code, 2);
}

TEST(Cli, CheckUniform) {
  const Outcome r = run({"check", data_path("tree_example_uniform.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["tree"], "(1,((2,3)_2,4)_1)_2");
  EXPECT_EQ(run({"check", data_path("tree_example.json")}).code, 0);
}

TEST(Cli, InfeasibleRotationSystems) {
  const Outcome p = run({"check", data_path("infeasible_k3.json")});
  EXPECT_EQ(p.code, 1);
  EXPECT_EQ(p.json()["witness"]["inner"], (std::vector<int>{1, 2, 3, 4}));
  const Outcome k4 = run({"rotations", data_path("k4_infeasible.json")});
  EXPECT_EQ(k4.code, 1);
  EXPECT_EQ(k4.json()["witness"]["rule"], "infeasible_rotations");
}

TEST(Cli, NonstretchableSystem) {
  const Outcome top = run({"rotations", data_path("nonstretchable.json")});
  EXPECT_EQ(top.code, 0);
  EXPECT_EQ(top.json()["assignment"]["alphabet"], "K32");
  const Outcome st = run({"stretch", data_path("nonstretchable.json")});
  EXPECT_EQ(st.code, 1);
  EXPECT_FALSE(st.json()["feasible"].get<bool>());
}

TEST(Cli, SchemaErrorsCarryAPath) {
  const std::string file = write_temp("bad.json", R"({"kind": "type_table", "alphabet": "ABN", "n": 2,
      "table": {"1,2": "Q"}})");
  const Outcome r = run({"check", file});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["path"], "$.table.\"1,2\"");
  EXPECT_FALSE(r.err.empty());

  EXPECT_EQ(run({"check", write_temp("garbage.json", "{not json")}).json()["path"], "$");
  EXPECT_EQ(run({"check", write_temp("kind.json", R"({"kind": "poem"})")}).json()["path"], "$.kind");
  EXPECT_EQ(run({"check", data_path("does_not_exist.json")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, RealizeThenCheck) {
  const Outcome r = run({"realize", data_path("five_curves_b.json")});
  ASSERT_EQ(r.code, 0);
  const Json doc = r.json();
  EXPECT_EQ(doc["kind"], "wiring");
  const std::string file = write_temp("five_curves.wiring.json", r.out);
  EXPECT_EQ(run({"check", file}).code, 0);
  const Outcome svg = run({"render", file});
  EXPECT_EQ(svg.code, 0);
  EXPECT_NE(svg.out.find("<svg"), std::string::npos);
  EXPECT_EQ(run({"render", file}).out, svg.out);

  EXPECT_EQ(run({"realize", data_path("illegal_triple.json")}).code, 1);
}

TEST(Cli, RenderWithoutCrossings) {
  const std::string file = write_temp("plain.json", R"({"kind": "wiring", "n": 3, "events": [
      {"op": "vertex", "curve": 1}, {"op": "vertex", "curve": 2}, {"op": "vertex", "curve": 3}]})");
  const std::string out = (std::filesystem::path(::testing::TempDir()) / "plain.svg").string();
  EXPECT_EQ(run({"render", file, "-o", out}).code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("</svg>"), std::string::npos);
  // a swap of two red parts is not a drawing
  const std::string bad = write_temp("redred.json", R"({"kind": "wiring", "n": 2, "events": [
      {"op": "swap", "pos": 0}, {"op": "vertex", "curve": 1}, {"op": "vertex", "curve": 2}]})");
  EXPECT_EQ(run({"render", bad}).code, 2);
}

TEST(Cli, RandomPointsAreStretchable) {
  const Outcome r = run({"random-points", "--n", "6", "--seed", "9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, run({"random-points", "--n", "6", "--seed", "9"}).out);
  const std::string file = write_temp("points.json", r.out);
  const Outcome st = run({"stretch", file});
  EXPECT_EQ(st.code, 0);
  EXPECT_EQ(st.json()["points"].size(), 6u);
  EXPECT_EQ(run({"rotations", file}).code, 0);
}

TEST(Cli, Enumerate) {
  const Outcome r = run({"enumerate", "--k", "2", "--n", "4"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(parse_json(line).contains("tree"));
    ++count;
  }
  EXPECT_EQ(count, 22);
  const Outcome d = run({"enumerate", "--k", "2", "--n", "3", "--drawings"});
  EXPECT_EQ(std::count(d.out.begin(), d.out.end(), '\n'), 17);
  EXPECT_EQ(run({"enumerate", "--k", "2", "--n", "7", "--drawings"}).code, 2);
}
