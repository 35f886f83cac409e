#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adefam/cli.hpp"

using namespace adefam;
using cli::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(ADEFAM_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(ParseSpec, Examples) {
  EXPECT_EQ(cli::parse_spec("A7"), build_diagram(Family::A, 7));
  EXPECT_EQ(cli::parse_spec("e8"), build_diagram(Family::E, 8));
  EXPECT_EQ(cli::parse_spec("  d5\t"), build_diagram(Family::D, 5));
  try {
    cli::parse_spec("D3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRank);
  }
}

TEST(ParseSpec, ErrorsCarryPosition) {
  for (auto [text, pos] : {std::pair{"X4", "position 0"}, {"A", "position 1"}, {" A4x", "position 3"}, {"", "position 0"}}) {
    try {
      cli::parse_spec(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      EXPECT_NE(std::string(e.what()).find(pos), std::string::npos) << e.what();
    }
  }
}

TEST(Run, VerifyE8) {
  const auto r = run({"verify", "E8"});
  EXPECT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["command"], "verify");
  EXPECT_EQ(doc["result"]["summary"], "240 roots, all |f|=24");
}

TEST(Run, UsageErrors) {
  EXPECT_EQ(run({"roots", "D3"}).code, 2);
  EXPECT_EQ(run({"roots", "Q3"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"roots", "A2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"index", "ade", "A2", "--root", "1,-1"}).code, 2);
  EXPECT_EQ(run({"lattice", "--m", "1", "--a", "1/2"}).code, 2);
  EXPECT_EQ(run({"glue", "/nonexistent/pipeline.json"}).code, 2);
}

TEST(Run, IndexCommands) {
  auto r = run({"index", "blowup"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["result"]["index"], "-1");
  r = run({"index", "ade", "E8", "--root", "0,0,0,0,0,0,0,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["result"]["index"], "1");
  r = run({"index", "sphere", "--k", "-2", "--n", "-4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["result"]["index"], "1");
}

TEST(Run, RootsRoundTrip) {
  const auto r = run({"roots", "D5"});
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  const auto g = build_diagram(Family::D, 5);
  const auto q = intersection_form(g);
  std::vector<IntVector> roots;
  for (const auto& v : doc["result"]["roots"]) {
    const auto x = v.get<IntVector>();
    EXPECT_EQ(q.square(x), -2);
    roots.push_back(x);
  }
  EXPECT_EQ(roots.size(), 40u);
  EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
}

TEST(Run, WeightsAndFTableRoundTrip) {
  auto doc = Json::parse(run({"weights", "E7"}).out);
  for (const auto& v : doc["result"]["vertices"]) EXPECT_EQ(v["a"].get<int>() + v["b"].get<int>(), 2);
  for (const auto& e : doc["result"]["edges"]) EXPECT_EQ(e["w_ij"].get<int>() + e["w_ji"].get<int>(), 2);
  doc = Json::parse(run({"f-table", "A4"}).out);
  for (const auto& row : doc["result"]["rows"]) {
    const auto t = row["root"].get<IntVector>();
    EXPECT_EQ(row["f"].get<int>(), t[0] + t[1] + t[2] + t[3] > 0 ? 24 : -24);
  }
}

TEST(Run, LatticeRoundTrip) {
  const auto r = run({"lattice", "--m", "2", "--square", "-9", "--a", "3/4"});
  ASSERT_EQ(r.code, 0);
  const auto res = Json::parse(r.out)["result"];
  EXPECT_EQ(res["a"], "3/4");
  EXPECT_EQ(res["count"], 2);
  for (const auto& v : res["solutions"]) {
    const auto x = v.get<IntVector>();
    EXPECT_EQ(x[0] * x[0] - x[1] * x[1] - x[2] * x[2], -9);
    EXPECT_LT(4 * x[0], 3 * x[1]);
  }
  const auto by_dim = run({"lattice", "--m", "2", "--n", "-4", "--a", "3/4"});
  EXPECT_EQ(Json::parse(by_dim.out)["result"]["square"], -9);
}

TEST(Run, Tsv) {
  const auto r = run({"roots", "A2", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "root\theight\tpositive\n-1,-1\t-2\t0\n-1,0\t-1\t0\n0,-1\t-1\t0\n0,1\t1\t1\n1,0\t1\t1\n1,1\t2\t1\n");
}

TEST(Run, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "adefam_cli_out.json";
  const auto r = run({"index", "blowup", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["result"]["index"], "-1");
  std::filesystem::remove(path);
}

TEST(Run, GlueSamples) {
  auto r = run({"glue", sample("ade_pipeline.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto res = Json::parse(r.out)["result"];
  EXPECT_EQ(res["magnitude"], "1");
  EXPECT_EQ(res["stages"].size(), 3u);
  r = run({"glue", sample("blowup_pipeline.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  res = Json::parse(r.out)["result"];
  EXPECT_EQ(res["fsw"], "2");
}

TEST(Run, GlueRejectsMalformedPipelines) {
  const auto path = std::filesystem::temp_directory_path() / "adefam_bad_pipeline.json";
  for (const char* text : {"{", "[]", R"([{"kind": "teleport"}])", R"([{"kind": "pairing", "params": {"sw": 1}}])",
                           R"([{"kind": "arrow", "params": {"c": 1, "d": 3}}, {"kind": "wall", "params": {"j": 1, "b_plus": 2}}])"}) {
    std::ofstream(path) << text;
    EXPECT_EQ(run({"glue", path.string()}).code, 2) << text;
  }
  std::filesystem::remove(path);
}

TEST(Run, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"roots", "E7"}, {"f-table", "D6", "--format", "tsv"}, {"glue", sample("ade_pipeline.json")}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
