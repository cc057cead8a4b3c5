#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bier/cli.hpp"
#include "oracles.hpp"

namespace {

using namespace bier;
using io::Json;

std::string sample(const std::string& name) { return std::string(BIER_SAMPLES_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string text;
  Json json;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  const int code = cli::run(args, out);
  Outcome o{code, out.str(), Json()};
  if (!o.text.empty() && o.text.front() == '{') o.json = Json::parse(o.text);
  return o;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("bier_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, FVectorBothSpellings) {
  for (const auto& args : {std::vector<std::string>{"fvector", "--input", sample("hexagon.json")},
                           std::vector<std::string>{"bier", "fvector", "--input", sample("hexagon.json")}}) {
    const auto o = run(args);
    ASSERT_EQ(o.code, 0) << o.text;
    EXPECT_EQ(o.json, Json::parse(R"({"f_vector":[6,6]})"));
  }
}

TEST(Cli, Dual) {
  const auto o = run({"dual", "--input", sample("hexagon.json")});
  ASSERT_EQ(o.code, 0) << o.text;
  // The dual of the 0-skeleton on [3] is itself.
  EXPECT_EQ(io::complex_from_json(o.json), skeleton_complex(3, 1));
}

TEST(Cli, FacetsAndRidges) {
  const auto f = run({"bier", "facets", "--input", sample("hexagon.json")});
  ASSERT_EQ(f.code, 0) << f.text;
  EXPECT_EQ(f.json["facets"].size(), 6u);
  const auto r = run({"bier", "ridges", "--input", sample("hexagon_plus_edge.json")});
  ASSERT_EQ(r.code, 0) << r.text;
  int cross = 0;
  for (const auto& ridge : r.json["ridges"]) cross += ridge["class"] == "Cross";
  EXPECT_GT(cross, 0);
}

TEST(Cli, SolveHexagon) {
  const auto o = run({"polytopality", "solve", "--input", sample("hexagon.json")});
  ASSERT_EQ(o.code, 0) << o.text;
  EXPECT_EQ(o.json["status"], "feasible");
  // Round trip: the emitted witness verifies through the CLI.
  const auto path = temp_file("witness.json", o.json["witness"].dump());
  const auto v = run({"polytopality", "verify", "--input", sample("hexagon.json"), "--witness", path});
  ASSERT_EQ(v.code, 0) << v.text;
  EXPECT_EQ(v.json["valid"], true);
}

TEST(Cli, ThresholdWitnessVerifiesAndRealizes) {
  const auto t = run({"threshold", "--weights", sample("weights3.json")});
  ASSERT_EQ(t.code, 0) << t.text;
  const auto complex_path = temp_file("threshold.json", t.json["complex"].dump());
  const auto v = run({"polytopality", "verify", "--input", complex_path, "--weights", sample("weights3.json")});
  EXPECT_EQ(v.json["valid"], true);
  const auto r = run({"polytopality", "realize", "--input", complex_path, "--weights", sample("weights3.json")});
  ASSERT_EQ(r.code, 0) << r.text;
  EXPECT_EQ(r.json["vertices"].size(), facets(io::complex_from_json(t.json["complex"])).size());
}

TEST(Cli, PolarIso) {
  const auto o = run({"vkf", "polar-iso", "--n", "4"});
  ASSERT_EQ(o.code, 0) << o.text;
  EXPECT_EQ(o.json["iso"], "Delta(4,2)");
  EXPECT_EQ(o.json["vertices"], 6);
  EXPECT_EQ(o.json["pass"], true);
}

TEST(Cli, VolumeAndDelta) {
  const auto v = run({"volume", "--input", sample("cube_points.json")});
  ASSERT_EQ(v.code, 0) << v.text;
  EXPECT_EQ(v.json["normalized"], 12);
  EXPECT_EQ(v.json["euclid_sq"], "1");
  const auto d = run({"delta-volume", "--input", sample("hexagon.json"), "--face", "1,2"});
  ASSERT_EQ(d.code, 0) << d.text;
  EXPECT_EQ(d.json["delta"], -1);
}

TEST(Cli, GeometryQueries) {
  const auto s = run({"star-contains", "--input", sample("hexagon.json"), "--point", "1/3,0,-1/3"});
  ASSERT_EQ(s.code, 0) << s.text;
  EXPECT_EQ(s.json["contains"], true);
  const auto f = run({"vkf", "face", "--n", "4", "--I", "1,2", "--J", "3"});
  EXPECT_EQ(f.json["face"], true);
  const auto g = run({"vkf", "face", "--n", "4", "--I", "1,2,3"});
  EXPECT_EQ(g.json["face"], false);
  const auto m = run({"vkf", "minkowski", "--n", "3", "--point", "2/3,-1/3,-1/3"});
  ASSERT_EQ(m.code, 0) << m.text;
  EXPECT_EQ(m.json["mu_simplex"], "1");
  EXPECT_EQ(m.json["mu_polar"], m.json["mu_opposite"]);
  const auto h = run({"hypersimplex", "--n", "4", "--r", "2"});
  EXPECT_EQ(h.json["count"], 6);
}

TEST(Cli, FanCommands) {
  const auto v = run({"fan", "verify", "--input", sample("n4_mixed.json"), "--seed", "7"});
  ASSERT_EQ(v.code, 0) << v.text;
  EXPECT_EQ(v.json["pass"], true);
  const auto c = run({"fan", "cone", "--n", "3", "--a1", "1", "--a2", "3"});
  ASSERT_EQ(c.code, 0) << c.text;
  const auto r = run({"fan", "rays", "--n", "3", "--a1", "1", "--a2", "3", "--input", sample("hexagon.json")});
  ASSERT_EQ(r.code, 0) << r.text;
  EXPECT_EQ(r.json["rays"].size(), 2u);
  const auto bad = run({"fan", "rays", "--n", "3", "--a1", "1,2", "--a2", "3", "--input", sample("hexagon.json")});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, ErrorsAreJsonWithExitCodes) {
  const auto missing = run({"volume", "--input", "/nonexistent/file.json"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(missing.json.contains("error"));

  const auto garbage = run({"volume", "--input", temp_file("garbage.json", "{not json")});
  EXPECT_EQ(garbage.code, 2);
  EXPECT_TRUE(garbage.json["error"].contains("code"));

  const auto improper = run({"volume", "--input", temp_file("improper.json", R"({"n":2,"facets":[[1,2]]})")});
  EXPECT_EQ(improper.code, 2);

  const auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_TRUE(unknown.json.contains("error"));

  const auto budget = run({"polytopality", "solve", "--input", sample("n4_mixed.json"), "--max-pivots", "0"});
  EXPECT_EQ(budget.code, 3);
  EXPECT_TRUE(budget.json.contains("error"));

  const auto fv = run({"fvector", "--input", sample("n4_mixed.json"), "--max-n", "3"});
  EXPECT_EQ(fv.code, 3);

  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ByteIdenticalRepeats) {
  for (const auto& args : {std::vector<std::string>{"fan", "verify", "--input", sample("n4_mixed.json"), "--seed", "3"},
                           std::vector<std::string>{"polytopality", "solve", "--input", sample("n4_mixed.json")},
                           std::vector<std::string>{"polytopality", "realize", "--input", sample("hexagon.json")}}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0) << a.text;
    EXPECT_EQ(a.text, b.text);
  }
}

TEST(Io, Parsing) {
  EXPECT_EQ(io::parse_point("1/3,0,-1/3"), (RationalVector{Rational(1, 3), 0, Rational(-1, 3)}));
  EXPECT_THROW(io::parse_point("1/0"), Error);
  EXPECT_THROW(io::parse_point("x"), Error);
  EXPECT_EQ(io::parse_face("", 3), FaceSet{});
  EXPECT_EQ(io::parse_face("1,3", 3), oracle::S({1, 3}));
  EXPECT_THROW(io::parse_face("4", 3), Error);
  EXPECT_THROW(io::complex_from_json(Json::parse(R"({"n":0,"facets":[]})")), Error);
  EXPECT_THROW(io::complex_from_json(Json::parse(R"({"facets":[]})")), Error);
  const auto w = io::weights_from_json(Json::parse(R"({"l":["3/10","3/10","4/10"],"nu":"1/2"})"));
  EXPECT_EQ(w.nu(), Rational(1, 2));
  EXPECT_THROW(io::witness_from_json(Json::parse(R"({"7":"1"})"), 3), Error);
  const auto f = io::witness_from_json(Json::parse(R"({"witness":{"1":"2","3bar":"1/2"}})"), 3);
  EXPECT_EQ(f.values()[0], 2);
}

}  // namespace
