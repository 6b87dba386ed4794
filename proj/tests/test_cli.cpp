#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "orr/cli.hpp"

namespace {

namespace fs = std::filesystem;
using orr::cli::dispatch;
using orr::io::json;

const fs::path kSource = ORR_SOURCE_DIR;

std::string fx(const std::string& name) { return (kSource / "fixtures" / name).string(); }

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
  return {
      {"info_k4", {"info", fx("k4.graph")}},
      {"info_lollipop", {"info", fx("lollipop.graph")}},
      {"reduce_c3_b", {"reduce", fx("c3.graph"), fx("c3_m111.div"), "--q", "b"}},
      {"reduce_k4_ones", {"reduce", fx("k4.graph"), fx("k4_ones.div")}},
      {"rank_c3_zero", {"rank", fx("c3.graph"), fx("zero.div")}},
      {"rank_c3_111_witnesses", {"rank", fx("c3.graph"), fx("c3_111.div"), "--witnesses"}},
      {"rr_check_k4_ones", {"rr-check", fx("k4.graph"), fx("k4_ones.div")}},
      {"orient_c3_zero", {"orient", fx("c3.graph"), fx("zero.div")}},
      {"orient_c3_m111", {"orient", fx("c3.graph"), fx("c3_m111.div")}},
      {"orient_k4_zero_q", {"orient", fx("k4.graph"), fx("zero.div"), "--q", "b"}},
      {"unfurl_c3_cyclic", {"unfurl", fx("c3.graph"), fx("c3_cyclic.ori")}},
      {"unfurl_lollipop", {"unfurl", fx("lollipop.graph"), fx("lollipop_cycle.ori")}},
      {"rank_orient_c3_cyclic", {"rank-orient", fx("c3.graph"), fx("c3_cyclic.ori")}},
      {"rank_orient_lollipop", {"rank-orient", fx("lollipop.graph"), fx("lollipop_cycle.ori")}},
      {"break_c3_m111", {"break-divisor", fx("c3.graph"), fx("c3_m111.div")}},
      {"break_b3", {"break-divisor", fx("b3.graph"), fx("b3_20.div")}},
      {"maxflow_cut4", {"maxflow", fx("cut4.net"), "--s", "s", "--t", "t"}},
      {"maxflow_cut4_orient", {"maxflow", fx("cut4.net"), "--s", "s", "--t", "t", "--via-orientability"}},
      {"maxflow_zero", {"maxflow", fx("zero.net"), "--s", "s", "--t", "t"}},
      {"orientable_c3_zero", {"orientable", fx("c3.graph"), fx("zero.div")}},
      {"orientable_c3_m111_partial", {"orientable", fx("c3.graph"), fx("c3_m111.div"), "--partial"}},
      {"oracle_verify_c3_rr", {"oracle", "verify", fx("c3.graph"), "--suite", "rr"}},
      {"oracle_verify_b3_torsor", {"oracle", "verify", fx("b3.graph"), "--suite", "torsor"}},
      {"oracle_mfmc", {"oracle", "mfmc", "--seed", "7", "--count", "10"}},
      {"error_degree_too_high", {"orient", fx("b3.graph"), fx("b3_20.div")}},
      {"error_wrong_degree", {"break-divisor", fx("c3.graph"), fx("zero.div")}},
  };
}

json run_case(const GoldenCase& c) {
  const auto r = dispatch(c.args);
  return {{"exit", r.exit_code}, {"payload", r.payload}};
}

TEST(CliGolden, MatchesCheckedInOutput) {
  const bool update = std::getenv("ORR_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    SCOPED_TRACE(c.name);
    const json got = run_case(c);
    const fs::path file = kSource / "tests" / "golden" / (c.name + ".json");
    if (update) {
      std::ofstream(file) << got.dump(2) << "\n";
      continue;
    }
    std::ifstream in(file);
    ASSERT_TRUE(in) << "missing golden file " << file;
    EXPECT_EQ(got, json::parse(in));
  }
}

TEST(CliGolden, VerifyNeverChangesThePayload) {
  for (const auto& c : golden_cases()) {
    SCOPED_TRACE(c.name);
    auto args = c.args;
    args.push_back("--verify");
    const auto plain = dispatch(c.args);
    const auto verified = dispatch(args);
    EXPECT_EQ(plain.exit_code, verified.exit_code);
    EXPECT_EQ(plain.payload, verified.payload);
  }
}

TEST(CliGolden, Deterministic) {
  for (const auto& c : golden_cases()) {
    SCOPED_TRACE(c.name);
    EXPECT_EQ(dispatch(c.args).payload, dispatch(c.args).payload);
  }
}

TEST(Cli, DocumentedExamples) {
  EXPECT_EQ(dispatch({"rank", fx("c3.graph"), fx("zero.div")}).payload.at("rank"), 0);
  EXPECT_EQ(dispatch({"break-divisor", fx("c3.graph"), fx("c3_m111.div")}).payload,
            json::parse(R"({"break":[["a",1],["b",0],["c",0]]})"));
  const auto info = dispatch({"info", fx("k4.graph")}).payload;
  EXPECT_EQ(info.at("genus"), 3);
  EXPECT_EQ(info.at("trees"), 16);
  EXPECT_EQ(info.at("K"), json::parse("[1,1,1,1]"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(dispatch({}).exit_code, 2);
  EXPECT_EQ(dispatch({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(dispatch({"rank", fx("c3.graph")}).exit_code, 2);
  EXPECT_EQ(dispatch({"maxflow", fx("cut4.net"), "--s", "s"}).exit_code, 2);
  EXPECT_EQ(dispatch({"oracle", "verify", fx("c3.graph"), "--suite", "nope"}).exit_code, 2);
  EXPECT_EQ(dispatch({"oracle"}).exit_code, 2);
  const auto r = dispatch({"rank", fx("c3.graph")});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.payload.at("error").at("code"), "UsageError");
}

TEST(Cli, DomainErrorsExitOneWithCode) {
  auto r = dispatch({"info", fx("missing.graph")});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.payload.at("error").at("code"), "ParseError");
  r = dispatch({"reduce", fx("c3.graph"), fx("zero.div"), "--q", "zz"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.payload.at("error").at("code"), "UnknownVertex");
  r = dispatch({"maxflow", fx("cut4.net"), "--s", "s", "--t", "s"});
  EXPECT_EQ(r.exit_code, 1);
  r = dispatch({"orientable", fx("c3.graph"), fx("c3_111.div")});
  EXPECT_EQ(r.payload.at("error").at("code"), "WrongDegree");
}

TEST(Cli, HelpExitsZero) {
  const auto r = dispatch({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.render().find("break-divisor"), std::string::npos);
  EXPECT_EQ(dispatch({"rank", "--help"}).exit_code, 0);
}

TEST(Cli, CapsFlagIsEnforced) {
  const auto r = dispatch({"oracle", "verify", fx("k4.graph"), "--suite", "gioan", "--caps", "full=5"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.payload.at("error").at("code"), "TooLarge");
  EXPECT_EQ(dispatch({"oracle", "verify", fx("k4.graph"), "--suite", "gioan"}).exit_code, 0);
}

TEST(Cli, TextAndAsciiModes) {
  auto r = dispatch({"unfurl", fx("c3.graph"), fx("c3_acyclic.ori"), "--ascii"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.render().find("->"), std::string::npos);
  r = dispatch({"--text", "info", fx("c3.graph")});
  EXPECT_NE(r.render().find("3 spanning trees"), std::string::npos);
}

TEST(Cli, SeedFixesRandomNetworks) {
  const auto a = dispatch({"oracle", "mfmc", "--seed", "11", "--count", "4"});
  const auto b = dispatch({"--seed", "11", "oracle", "mfmc", "--count", "4"});
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.payload, b.payload);
}

}  // namespace
