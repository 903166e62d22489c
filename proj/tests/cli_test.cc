#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "optiform/oracle.h"
#include "support.h"

namespace optiform {
namespace {

using testing::Invoke;

class Cli : public ::testing::Test {
 protected:
  std::string Write(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() /
                ("optiform_cli_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(path) << text;
    written_.push_back(path);
    return path.string();
  }
  std::string Write(const std::string& name, const io::Document& doc) {
    return Write(name, io::Serialize(doc));
  }
  void TearDown() override {
    for (const auto& p : written_) std::filesystem::remove(p);
  }

 private:
  std::vector<std::filesystem::path> written_;
};

PayoffGame Coordination() {
  auto q = [](int n) { return SemiringValue::Number(n); };
  return PayoffGame{std::nullopt,
                    {{"x", {"a", "b"}}, {"y", {"a", "b"}}},
                    {{1}, {0}},
                    {{q(2), q(0), q(0), q(1)}, {q(2), q(0), q(0), q(1)}}};
}

TEST_F(Cli, NashReportCarriesWitnesses) {
  auto r = Invoke({"game-nash", Write("coord.game", Coordination())});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto report = nlohmann::json::parse(r.out);
  ASSERT_EQ(report["equilibria"].size(), 2u);
  auto& w = report["equilibria"][0]["witness"]["x"];
  EXPECT_EQ(w["plays"], "a");
  EXPECT_EQ(w["best_responses"], nlohmann::json::array({"a"}));
}

TEST_F(Cli, ReportsAreDeterministic) {
  std::string path = Write("coord.game", Coordination());
  for (const char* cmd : {"game-nash", "game-pareto", "pareto-nash",
                          "map-to-scsp", "regret-constraints"}) {
    auto a = Invoke({cmd, path});
    auto b = Invoke({cmd, path});
    EXPECT_EQ(a.code, kExitOk) << cmd << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST_F(Cli, TranslationsPipe) {
  oracle::GeneratorConfig cfg;
  cfg.seed = 9;
  CpNet net = oracle::RandomCpnet(cfg);
  auto game = Invoke({"to-game", Write("n.cpnet", net)});
  ASSERT_EQ(game.code, kExitOk) << game.err;
  auto back = Invoke({"to-cpnet", Write("g.ppgame", game.out)});
  ASSERT_EQ(back.code, kExitOk) << back.err;
  auto reduced = Invoke({"cpnet-reduce", Write("b.cpnet", back.out)});
  ASSERT_EQ(reduced.code, kExitOk) << reduced.err;
  EXPECT_EQ(std::get<CpNet>(io::ParseDocument(reduced.out)), Reduce(net));
}

TEST_F(Cli, FormatCanonicalises) {
  auto r = Invoke({"format", Write("g.graph", R"({"nodes": ["a", "b"],
      "kind": "graph", "edges": [["a", "b"]]})")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, io::Serialize(Digraph{{"a", "b"}, {{0, 1}}}));
}

TEST_F(Cli, ValidationErrorsExitTwo) {
  auto r = Invoke({"scsp-solve", Write("bad.scsp", "{\"kind\": \"scsp\"}")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(Invoke({"scsp-solve", "/nonexistent/file.scsp"}).code,
            kExitValidation);
  EXPECT_EQ(Invoke({"check", "--theorem", "t1", "--seeds", "5..1"}).code,
            kExitValidation);
  // Wrong document kind for the subcommand.
  EXPECT_EQ(Invoke({"cpnet-optimal", Write("c.game", Coordination())}).code,
            kExitValidation);
}

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(Invoke({}).code, kExitFailure);
  EXPECT_EQ(Invoke({"no-such-command"}).code, kExitFailure);
  EXPECT_EQ(Invoke({"cpnet-eliminate", "x.cpnet", "--mode", "q"}).code,
            kExitFailure);
}

TEST_F(Cli, BudgetExhaustionExitsThree) {
  CpNet net;
  net.variables = {{"A", {"a", "b"}}, {"B", {"a", "b"}}};
  net.tables = {{{}, {StrictOrder({0, 1})}}, {{}, {StrictOrder({0, 1})}}};
  std::string path = Write("n.cpnet", net);
  auto r = Invoke({"cpnet-dominates", path, "--better", "a,a", "--worse", "b,b",
                "--budget", "1"});
  EXPECT_EQ(r.code, kExitBound) << r.out << r.err;
  r = Invoke({"cpnet-dominates", path, "--better", "a,a", "--worse", "b,b"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"], "dominates");
}

TEST_F(Cli, EnumerationBoundExitsThree) {
  SoftCsp p{SemiringSpec::Fuzzy(), {}, {}};
  for (int i = 0; i < 4; ++i) {
    p.variables.push_back({"v" + std::to_string(i), {"0", "1", "2"}});
  }
  std::string path = Write("big.scsp", p);
  ::setenv("OPTIFORM_MAX_SPACE", "10", 1);
  int code = Invoke({"scsp-solve", path}).code;
  ::unsetenv("OPTIFORM_MAX_SPACE");
  EXPECT_EQ(code, kExitBound);
}

TEST_F(Cli, WellStructuredModes) {
  Digraph cycle{{"p", "q", "r"}, {{0, 1}, {1, 2}, {2, 0}}};
  std::string path = Write("c.graph", cycle);
  auto r = Invoke({"well-structured", path, "--exhaustive"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["well_structured"], false);
  r = Invoke({"well-structured", path, "--levels", "0,1,2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["well_structured"], false);

  Digraph big{{}, {}};
  for (int i = 0; i < 14; ++i) big.nodes.push_back("v" + std::to_string(i));
  EXPECT_EQ(Invoke({"well-structured", Write("big.graph", big), "--exhaustive"})
                .code,
            kExitBound);
}

TEST_F(Cli, TechGameFromGraph) {
  Digraph g{{"a", "b"}, {{0, 1}}};
  auto r = Invoke({"tech-game", Write("g.graph", g), "--k", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto game = std::get<PpGame>(io::ParseDocument(r.out));
  EXPECT_EQ(game, TechGame(g, 2));
}

TEST_F(Cli, CheckReportsCounts) {
  auto r = Invoke({"check", "--theorem", "G_of_N", "--seeds", "1..10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["pass"], 10);
  EXPECT_EQ(report["fail"], 0);

  r = Invoke({"check", "--theorem", "strict_monotone_pareto", "--seeds",
           "18..18"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_EQ(nlohmann::json::parse(r.out)["fail"], 1);
  EXPECT_EQ(Invoke({"check", "--theorem", "bogus", "--seeds", "1..2"}).code,
            kExitValidation);
}

}  // namespace
}  // namespace optiform
