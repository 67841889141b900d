#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "sgm/catalog.hpp"
#include "sgm/text_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = sgm::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sgm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string matroid_file(const std::string& name, const sgm::BinaryMatroid& m) {
    std::ostringstream s;
    sgm::write_matroid(s, m);
    return write_file(name, s.str());
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, sgm::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, sgm::cli::kExitUsage);
  EXPECT_EQ(run({"rank"}).code, sgm::cli::kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "rank", "x"}).code, sgm::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "lemma99"}).code, sgm::cli::kExitUsage);
  EXPECT_EQ(run({"negami-closure", "K3,5"}).code, sgm::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, sgm::cli::kExitOk);
}

TEST_F(CliTest, MissingAndMalformedFiles) {
  const Result missing = run({"rank", (dir_ / "nope.mat").string()});
  EXPECT_EQ(missing.code, sgm::cli::kExitUsage);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
  const Result bad = run({"rank", write_file("bad.mat", "2 2\n10\n1x\n")});
  EXPECT_EQ(bad.code, sgm::cli::kExitUsage);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"catalog", "K99,x"}).code, sgm::cli::kExitUsage);
}

TEST_F(CliTest, RankAndCircuits) {
  const std::string k4 = matroid_file("k4.mat", sgm::cycle_matroid(sgm::complete_graph(4)));
  const Result r = run({"rank", k4});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  const Result c = run({"--format", "json", "circuits", k4});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["circuits"].size(), 7U);
  const Result cc = run({"cocircuits", k4});
  EXPECT_EQ(std::count(cc.out.begin(), cc.out.end(), '\n'), 7);
}

TEST_F(CliTest, DualRoundTripsThroughFiles) {
  const std::string r15 = matroid_file("r15.mat", sgm::r15());
  const Result d = run({"dual", r15});
  ASSERT_EQ(d.code, 0);
  const std::string dual_path = write_file("r15d.mat", d.out);
  const Result dd = run({"dual", dual_path});
  ASSERT_EQ(dd.code, 0);
  std::istringstream in(dd.out);
  EXPECT_TRUE(sgm::same_circuits(sgm::read_matroid(in), sgm::r15()));
}

TEST_F(CliTest, BoundExceededExitsOne) {
  const std::string r16 = matroid_file("r16.mat", sgm::r16());
  const Result r = run({"--element-bound", "10", "circuits", r16});
  EXPECT_EQ(r.code, sgm::cli::kExitFailure);
  EXPECT_NE(r.err.find("bound exceeded"), std::string::npos);
}

TEST_F(CliTest, PreconditionFailureExitsOne) {
  const std::string k5 = matroid_file("k5d.mat", sgm::bond_matroid(sgm::complete_graph(5)));
  EXPECT_EQ(run({"realize", k5}).code, sgm::cli::kExitFailure);
  const std::string r15d = matroid_file("r15d.mat", sgm::dual(sgm::r15()));
  EXPECT_EQ(run({"recognize", "--check-preconditions", r15d}).code, sgm::cli::kExitFailure);
}

TEST_F(CliTest, MinorTestAndGraphicTest) {
  const std::string host = matroid_file("k35d.mat", sgm::bond_matroid(sgm::complete_bipartite(3, 5)));
  const std::string target = matroid_file("k33d.mat", sgm::bond_matroid(sgm::complete_bipartite(3, 3)));
  const Result m = run({"--format", "json", "minor-test", host, target});
  ASSERT_EQ(m.code, 0);
  const json j = json::parse(m.out);
  EXPECT_TRUE(j["minor"].get<bool>());
  EXPECT_EQ(j["witness"]["mapping"].size(), 9U);
  const Result g = run({"graphic-test", host});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "not graphic\nminor M*(K3,3)\n");
}

TEST_F(CliTest, RecognizeJsonIsDeterministic) {
  const std::string k35 = matroid_file("k35d.mat", sgm::bond_matroid(sgm::complete_bipartite(3, 5)));
  const Result a = run({"--format", "json", "recognize", k35});
  const Result b = run({"--format", "json", "recognize", k35});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["decision"], "not-signed-graphic");
  EXPECT_EQ(j["witness"]["family"]["name"], "K3,5");
  const std::string w5 = matroid_file("w5d.mat", sgm::bond_matroid(sgm::wheel(5)));
  const Result c = run({"recognize", "--check-preconditions", w5});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "signed-graphic");
}

TEST_F(CliTest, RecognizeGraphInput) {
  std::ostringstream s;
  sgm::write_graph(s, sgm::k44_minus_e());
  const Result r = run({"recognize", "--graph", write_file("k44m.graph", s.str())});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("match K44-"), std::string::npos);
}

TEST_F(CliTest, DecomposeAndRealize) {
  const std::string k35 = matroid_file("k35.mat", sgm::cycle_matroid(sgm::complete_bipartite(3, 5)));
  const Result r = run({"realize", k35});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  const sgm::Multigraph g = sgm::read_graph(in);
  EXPECT_TRUE(sgm::graph_iso(g, sgm::complete_bipartite(3, 5)).has_value());
  const Result d = run({"--format", "json", "decompose", k35});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(json::parse(d.out)["components"].size(), 1U);
}

TEST_F(CliTest, AuditAndConnectivity) {
  const std::string k35 = matroid_file("k35d.mat", sgm::bond_matroid(sgm::complete_bipartite(3, 5)));
  const Result a = run({"--format", "json", "cocircuit-audit", k35});
  ASSERT_EQ(a.code, 0);
  const json j = json::parse(a.out);
  EXPECT_TRUE(j["all_graphic"].get<bool>());
  EXPECT_EQ(j["ledger"].size(), 90U);
  const Result c = run({"connectivity", k35});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, 2), "3\n");
}

TEST_F(CliTest, CatalogExports) {
  const Result g = run({"catalog", "K3,5"});
  ASSERT_EQ(g.code, 0);
  std::istringstream in(g.out);
  EXPECT_EQ(sgm::read_graph(in), sgm::complete_bipartite(3, 5));
  const Result m = run({"--format", "json", "catalog", "R16"});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(json::parse(m.out)["matroid"]["rows"].size(), 8U);
  EXPECT_EQ(run({"catalog", "handcuff-loose"}).code, 0);
}

TEST_F(CliTest, NegamiClosureWritesManifest) {
  const fs::path out = dir_ / "closure";
  const Result r = run({"negami-closure", "K3,5", "--max-edges", "16", "--out-dir", out.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream f(out / "manifest.json");
  ASSERT_TRUE(f.good());
  const json manifest = json::parse(f);
  ASSERT_FALSE(manifest["graphs"].empty());
  for (const auto& entry : manifest["graphs"]) EXPECT_TRUE(fs::exists(out / entry["file"].get<std::string>()));
  EXPECT_EQ(run({"negami-closure", "W5", "--max-edges", "12"}).code, sgm::cli::kExitFailure);
}

TEST_F(CliTest, VerifyHarnesses) {
  const Result l = run({"verify", "lemma31"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(l.out.substr(0, 5), "PASS:");
  const Result t = run({"--format", "json", "verify", "thm34"});
  ASSERT_EQ(t.code, 0);
  const json j = json::parse(t.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j["r15_dual"]["certificate"].is_null());
  EXPECT_EQ(run({"verify", "families", "--n-max", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "families", "--n-max", "9"}).code, sgm::cli::kExitFailure);
}
