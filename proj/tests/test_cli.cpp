#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "walkcert/cli.hpp"

using namespace walkcert;
using walkcert::cli::run;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("walkcert_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }

  std::string w0w3() const {
    return R"({"terms": [{"coef": "1", "indices": [0, 3]}, {"coef": "-1", "indices": [1, 2]}]})";
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, WalksFamily) {
  const auto r = run({"walks", "--family", "path:3", "--max", "4"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["w"], json({"3", "4", "6", "8", "12"}));
}

TEST_F(Cli, WalksGraph6AndFiles) {
  EXPECT_EQ(run({"walks", "Bw", "--max", "2"}).payload["w"], json({"3", "6", "12"}));
  const auto el = write("tri.txt", "n 3\n0 1\n1 2\n0 2\n0 1\n");
  const auto r = run({"walks", el, "--max", "1"});
  EXPECT_EQ(r.payload["w"], json({"3", "6"}));
  EXPECT_EQ(r.diagnostics.size(), 1u);  // duplicate edge warning
  const auto g6 = write("c5.g6", "Dhc\n");
  EXPECT_EQ(run({"walks", g6, "--max", "1"}).payload["w"], json({"5", "10"}));
}

TEST_F(Cli, TwoFactor) {
  const auto r = run({"certify", "two-factor", "--alpha", "3,5", "--beta", "2,6"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["params"], json({{"a", 1}, {"b", 1}, {"c", 1}}));
  const auto bad = run({"certify", "two-factor", "--alpha", "1,2", "--beta", "0,3"});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.payload["refutation"]["kind"], "OddVertex");
}

TEST_F(Cli, FamilySearch) {
  const auto ineq = write("w0w3.json", w0w3());
  const auto r = run({"search", ineq, "--family", "union(complete:3,star:m)", "--range", "m=1..10"});
  EXPECT_EQ(r.exit_code, 1);
  const auto& v = r.payload["violations"][0];
  EXPECT_EQ(v["label"], "m=5");
  EXPECT_EQ(v["value"], "-6");
  EXPECT_EQ(v["walks"], json({"9", "16", "42", "74"}));
  const auto clean = run({"search", ineq, "--family", "union(complete:3,star:m)", "--range", "m=1..4"});
  EXPECT_EQ(clean.exit_code, 0);
  EXPECT_TRUE(clean.payload["violations"].empty());
}

TEST_F(Cli, ExhaustiveSearchAndCap) {
  const auto ineq = write("w0w3.json", w0w3());
  const auto reg = run({"search", ineq, "--exhaustive", "1..5", "--regular-only", "--jobs", "2"});
  EXPECT_EQ(reg.exit_code, 0);
  EXPECT_EQ(reg.payload["min_value"], "0");
  // no labeled graph on 5 nodes violates it
  const auto none = run({"search", ineq, "--exhaustive", "5"});
  EXPECT_EQ(none.exit_code, 0);
  EXPECT_EQ(none.payload["graphs_tested"], 1024);
  // reversed sandwich w1^2 >= w0 w2 fails on every non-regular graph
  const auto rev = write("rev.json", R"({"terms": [{"coef": "1", "indices": [1, 1]}, {"coef": "-1", "indices": [0, 2]}]})");
  const auto first = run({"search", rev, "--exhaustive", "3", "--stop-at-first"});
  EXPECT_EQ(first.exit_code, 1);
  ASSERT_EQ(first.payload["violations"].size(), 1u);
  EXPECT_EQ(first.payload["violations"][0]["label"], "n=3 mask=1");
  EXPECT_EQ(run({"search", ineq, "--exhaustive", "8"}).exit_code, 2);
  EXPECT_EQ(run({"search", ineq}).exit_code, 2);
}

TEST_F(Cli, Check) {
  const auto ineq = write("w0w3.json", w0w3());
  const auto bad = run({"check", ineq, "--family", "union(complete:3,star:5)"});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.payload["value"], "-6");
  EXPECT_FALSE(bad.payload["holds"].get<bool>());
  const auto ok = run({"check", ineq, "Bw"});
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(ok.payload["violations"].empty());
}

TEST_F(Cli, CertifyAndVerifyRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"certify", "square", "--alpha", "0,1,2", "--sigma", "2,3,1"},
           {"certify", "sandwich", "--a", "1", "--b", "0", "--c", "1", "--shift", "1"},
           {"certify", "agm", "--alpha", "1,1,1,1"},
           {"certify", "univariate", "--k", "2", "--a", "2,0,1", "--tol", "1e-4"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.exit_code, 0) << r.payload.dump();
    EXPECT_TRUE(r.payload["certificate"]["verified"].get<bool>());
    const auto path = write("cert.json", r.payload["certificate"].dump());
    const auto v = run({"verify", path});
    EXPECT_EQ(v.exit_code, 0) << v.payload.dump();
    EXPECT_TRUE(v.payload["verified"].get<bool>());
    // payload round-trips through the schema
    EXPECT_EQ(to_json(certificate_from_json(r.payload["certificate"])), r.payload["certificate"]);
  }
}

TEST_F(Cli, VerifyCatchesTampering) {
  auto cert = run({"certify", "sandwich", "--a", "0", "--b", "0", "--c", "1"}).payload["certificate"];
  cert["base_poly"]["terms"][0]["coef"] = "5";
  cert["verified"] = true;
  const auto v = run({"verify", write("cert.json", cert.dump())});
  EXPECT_EQ(v.exit_code, 1);
  EXPECT_FALSE(v.payload["verified"].get<bool>());
}

TEST_F(Cli, UnivariateExample) {
  const auto r = run({"certify", "univariate", "--k", "1", "--a", "2"});
  EXPECT_EQ(r.payload["certificate"]["params"]["bound"], "-1");
  EXPECT_EQ(r.payload["inequality"]["text"], "w0 - 2*w1 + w2 >= 0");
}

TEST_F(Cli, BinaryAndNewton) {
  const auto psd = write("psd.json", R"({"k": 2, "terms": [{"exp": [4,0], "coef": "1"}, {"exp": [0,4], "coef": "1"}, {"exp": [2,2], "coef": "-2"}]})");
  EXPECT_EQ(run({"certify", "binary", psd}).exit_code, 0);
  const auto neg = write("neg.json", R"({"k": 2, "terms": [{"exp": [2,2], "coef": 1}, {"exp": [4,0], "coef": -1}, {"exp": [0,4], "coef": -1}]})");
  const auto r = run({"certify", "binary", neg});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.payload["refutation"]["value"], "-1");

  const auto cand = write("cand.json", R"({"k": 2, "terms": [{"exp": [0,3], "coef": "1"}, {"exp": [3,0], "coef": "1"}, {"exp": [1,2], "coef": "-1"}, {"exp": [2,1], "coef": "-1"}]})");
  const auto n = run({"newton", cand});
  EXPECT_EQ(n.exit_code, 1);
  EXPECT_EQ(n.payload["refutation"]["reason"], "odd coordinate");
  EXPECT_EQ(run({"newton", psd}).exit_code, 0);
}

TEST_F(Cli, ObstructAndSymmetrize) {
  const auto ineq = write("w0w3.json", w0w3());
  const auto r = run({"obstruct", ineq, "--sample", "100", "--seed", "3"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(r.payload["obstructions"].empty());
  EXPECT_EQ(r.payload["refutation"], r.payload["obstructions"][0]);
  const auto again = run({"obstruct", ineq, "--sample", "100", "--seed", "3"});
  EXPECT_EQ(again.payload, r.payload);

  const auto sand = write("s.json", R"({"terms": [{"coef": "1", "indices": [0, 2]}, {"coef": "-1", "indices": [1, 1]}]})");
  const auto clean = run({"obstruct", sand});
  EXPECT_EQ(clean.exit_code, 0);
  EXPECT_TRUE(clean.payload["obstructions"].empty());
  EXPECT_FALSE(clean.payload.contains("refutation"));

  const auto poly = write("p.json", R"({"k": 2, "terms": [{"exp": [0,2], "coef": "1"}, {"exp": [1,1], "coef": "-1"}]})");
  const auto s = run({"symmetrize", poly});
  EXPECT_EQ(s.exit_code, 0);
  EXPECT_EQ(polynomial_from_json(s.payload["symmetrized"]).coefficient({1, 1}), -2);
}

TEST_F(Cli, Spectral) {
  const auto poly = write("p.json", R"({"k": 2, "terms": [{"exp": [0,3], "coef": "1"}, {"exp": [1,2], "coef": "-1"}]})");
  const auto r = run({"spectral", "--family", "union(complete:3,star:5)", "--verify-prop31", poly});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["eigenvalues"].size(), 9u);
  EXPECT_LT(std::stod(r.payload["prop31_residual"].get<std::string>()), 1e-9);
  EXPECT_LT(std::stod(r.payload["residuals"]["sum_mu2"].get<std::string>()), 1e-9);
}

TEST_F(Cli, ErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"walks", "--max", "3"},
           {"walks", "B", "--max", "3"},
           {"walks", "--family", "cycle:2"},
           {"certify", "agm", "--alpha", "1,2"},
           {"certify", "univariate", "--k", "1", "--a", "0"},
           {"certify", "square", "--alpha", "1,2", "--sigma", "1,1"},
           {"certify", "two-factor", "--alpha", "1,2", "--beta", "2,2"},
           {"check", "/nonexistent.json", "Bw"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.exit_code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(r.payload.contains("error"));
    EXPECT_EQ(r.payload.dump().find('\n'), std::string::npos);
  }
  const auto bad = write("bad.json", "{not json");
  EXPECT_EQ(run({"check", bad, "Bw"}).exit_code, 2);
  const auto missing = write("missing.json", R"({"k": 2})");
  EXPECT_EQ(run({"symmetrize", missing}).exit_code, 2);
}

TEST_F(Cli, EnvironmentCapOverride) {
  const auto ineq = write("w0w3.json", w0w3());
  ::setenv("WALKCERT_MAX_N", "4", 1);
  EXPECT_EQ(run({"search", ineq, "--exhaustive", "5"}).exit_code, 2);
  EXPECT_EQ(run({"search", ineq, "--exhaustive", "4", "--regular-only"}).exit_code, 0);
  ::unsetenv("WALKCERT_MAX_N");
}

TEST_F(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.text.find("certify"), std::string::npos);
}
