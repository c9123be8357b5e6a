#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "conelab/json_io.hpp"
#include "support/oracles.hpp"

namespace conelab::cli {
namespace {

using io::Json;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("conelab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string write(const std::string& name, const Json& j) { return write(name, io::dump(j)); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SigmaFromDims) {
  const auto dims = write("d.json", io::to_json(DimTable::powers_of_two(4)));
  const auto r = run_cli({"sigma", "--dims", dims});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.json()["degrees"], Json::parse("[1,2,4,8]"));

  const auto one = run_cli({"sigma", "--dims", write("one.json", std::string(R"({"r":1})"))});
  EXPECT_EQ(one.json()["degrees"], Json::parse("[1]"));
}

TEST_F(CliTest, SigmaInputErrors) {
  const auto negative = run_cli({"sigma", "--dims", write("n.json", std::string(R"({"r":2,"dims":{"d21":-1}})"))});
  EXPECT_EQ(negative.code, kInputError);
  EXPECT_NE(negative.err.find("dims.dims.d21"), std::string::npos) << negative.err;

  const auto malformed = run_cli({"sigma", "--dims", write("m.json", std::string("{\"r\": 2,"))});
  EXPECT_EQ(malformed.code, kInputError);

  const auto inconsistent =
      run_cli({"sigma", "--dims", write("i.json", std::string(R"({"r":3,"dims":{"d21":1,"d31":1,"d32":2}})"))});
  EXPECT_EQ(inconsistent.code, kSemanticFailure);
}

TEST_F(CliTest, SigmaFromCone) {
  const auto cone = write("c.json", io::to_json(testing::omega3()));
  const auto r = run_cli({"sigma", "--cone", cone});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.json()["degrees"], Json::parse("[1,2,4]"));
}

TEST_F(CliTest, Theorem) {
  const auto r3 = run_cli({"theorem", "--rank", "3"});
  ASSERT_EQ(r3.code, kSuccess) << r3.err;
  EXPECT_EQ(r3.json()["N"], 7);
  EXPECT_EQ(r3.json()["degrees"], Json::parse("[1,2,4]"));
  EXPECT_EQ(r3.json()["verified"], true);

  const auto r1 = run_cli({"theorem", "--rank", "1"});
  EXPECT_EQ(r1.json()["N"], 1);
  EXPECT_EQ(r1.json()["degrees"], Json::parse("[1]"));

  const auto r6 = run_cli({"theorem", "--rank", "6"});
  EXPECT_EQ(r6.json()["N"], 63);
  EXPECT_EQ(r6.json()["degrees"].back(), 32);
}

TEST_F(CliTest, RankCapFromEnvironment) {
  ::setenv("CONELAB_RANK_CAP", "3", 1);
  const auto capped = run_cli({"theorem", "--rank", "4"});
  ::unsetenv("CONELAB_RANK_CAP");
  EXPECT_EQ(capped.code, kInputError);
  EXPECT_EQ(run_cli({"theorem", "--rank", "13"}).code, kInputError);
}

TEST_F(CliTest, IterateDoubleVerify) {
  const auto out = (dir_ / "o2.json").string();
  ASSERT_EQ(run_cli({"iterate", "--rank", "2", "--out", out}).code, kSuccess);
  EXPECT_EQ(io::realization_from_json(io::read_json_file(out)), testing::omega2());

  const auto doubled = run_cli({"double", "--in", out});
  ASSERT_EQ(doubled.code, kSuccess) << doubled.err;
  EXPECT_EQ(io::realization_from_json(doubled.json()), testing::omega3());

  const auto ok = run_cli({"verify", "--cone", out});
  EXPECT_EQ(ok.code, kSuccess);
  EXPECT_EQ(ok.json()["passed"], true);

  const Realization bad(BlockPartition({1, 2}), {{Matrix::from_rows({{1}, {0}})}});
  const auto failed = run_cli({"verify", "--cone", write("bad.json", io::to_json(bad))});
  EXPECT_EQ(failed.code, kSemanticFailure);
  EXPECT_EQ(failed.json()["V3"]["passed"], false);
  EXPECT_EQ(run_cli({"double", "--in", write("bad2.json", io::to_json(bad))}).code, kSemanticFailure);
}

TEST_F(CliTest, Member) {
  const auto cone = write("c.json", io::to_json(testing::omega2()));
  const auto identity = run_cli({"member", "--cone", cone, "--point", write("i.json", std::string(R"({"diag":[1,1]})"))});
  ASSERT_EQ(identity.code, kSuccess) << identity.err;
  EXPECT_EQ(identity.json()["pivots"], Json::parse(R"(["1","1"])"));

  const auto inside = run_cli(
      {"member", "--cone", cone, "--point",
       write("p.json", std::string(R"({"diag":[2,1],"off":[{"k":2,"j":1,"coords":[1,0]}]})"))});
  EXPECT_EQ(inside.code, kSuccess);
  EXPECT_EQ(inside.json()["pivots"], Json::parse(R"(["2","1/2"])"));

  const auto outside = run_cli(
      {"member", "--cone", cone, "--point",
       write("q.json", std::string(R"({"diag":[1,1],"off":[{"k":2,"j":1,"coords":[2,0]}]})"))});
  EXPECT_EQ(outside.code, kSemanticFailure);
  EXPECT_EQ(outside.json()["member"], false);
  EXPECT_EQ(outside.json()["pivots"], Json::parse(R"(["1","-3"])"));
}

TEST_F(CliTest, MemberMatrixOutsideV) {
  const auto cone = write("c.json", io::to_json(testing::omega2()));
  const auto r = run_cli({"member", "--cone", cone, "--point",
                          write("m.json", std::string(R"({"matrix":[[1,0,0],[0,2,0],[0,0,1]]})"))});
  EXPECT_EQ(r.code, kSemanticFailure);
  EXPECT_NE(r.err.find("block (1, 1)"), std::string::npos) << r.err;

  const auto ok = run_cli({"member", "--cone", cone, "--point",
                           write("n.json", std::string(R"({"matrix":[[2,0,1],[0,2,0],[1,0,1]]})"))});
  EXPECT_EQ(ok.code, kSuccess);
}

TEST_F(CliTest, Rank3Commands) {
  const auto fixture = testing::fixture_path("family_3_5_7.json").string();
  const auto verified = run_cli({"rank3", "verify", "--family", fixture});
  ASSERT_EQ(verified.code, kSuccess) << verified.err;
  EXPECT_EQ(verified.json()["passed"], true);

  const auto built = run_cli({"rank3", "build", "--family", fixture});
  ASSERT_EQ(built.code, kSuccess);
  EXPECT_EQ(io::realization_from_json(built.json()).total_size(), 11u);
  const auto dual = run_cli({"rank3", "build", "--dual", "--family", fixture});
  EXPECT_EQ(io::realization_from_json(dual.json()).total_size(), 13u);

  const auto family = run_cli({"rank3", "family", "--r", "2", "--n", "2"});
  EXPECT_EQ(family.json()["A"][1], Json::parse(R"([["0","-1"],["1","0"]])"));
  EXPECT_EQ(run_cli({"rank3", "family", "--r", "3", "--n", "2"}).code, kInputError);

  const auto classified = run_cli({"rank3", "classify", "--triple", "3", "5", "7"});
  EXPECT_EQ(classified.json()["case"], 3);
  EXPECT_EQ(classified.json()["dual"], Json::parse("[4,2,1]"));
  EXPECT_EQ(run_cli({"rank3", "classify", "--triple", "3", "3", "3"}).code, kSemanticFailure);

  const auto duality = run_cli({"--seed", "5", "rank3", "duality", "--family", fixture, "--samples", "5"});
  EXPECT_EQ(duality.code, kSuccess) << duality.err;
  EXPECT_EQ(duality.json()["pairs"], 5);
}

TEST_F(CliTest, Rank3Det) {
  const auto fixture = testing::fixture_path("family_3_5_7.json").string();
  const auto point = write("x.json", io::to_json(rank3::identity_point(rank3::family_3_5_7())));
  const auto r = run_cli({"rank3", "det", "--family", fixture, "--point", point});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.json()["det"], "1");
  EXPECT_EQ(r.json()["member"], true);

  const auto dual_point = write("xi.json", io::to_json(rank3::identity_dual_point(rank3::family_3_5_7())));
  const auto d = run_cli({"--approx", "rank3", "det", "--dual", "--family", fixture, "--point", dual_point});
  ASSERT_EQ(d.code, kSuccess) << d.err;
  EXPECT_EQ(d.json()["det"]["exact"], "1");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kInputError);
  EXPECT_EQ(run_cli({"bogus"}).code, kInputError);
  EXPECT_EQ(run_cli({"sigma", "--dims", (dir_ / "missing.json").string()}).code, kInputError);
  EXPECT_EQ(run_cli({"--help"}).code, kSuccess);
}

TEST_F(CliTest, Deterministic) {
  const auto fixture = testing::fixture_path("family_3_5_7.json").string();
  const auto a = run_cli({"--seed", "9", "rank3", "duality", "--family", fixture, "--samples", "3"});
  const auto b = run_cli({"--seed", "9", "rank3", "duality", "--family", fixture, "--samples", "3"});
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace conelab::cli
