#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = entwit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const json& content) {
  const auto path = std::filesystem::temp_directory_path() / ("entwit_cli_test_" + name);
  std::ofstream(path) << content.dump();
  return path.string();
}

TEST(Cli, CmatrixHeadline) {
  const Outcome o = run({"cmatrix", "--n", "200"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json d = o.doc();
  EXPECT_EQ(d.at("command"), "cmatrix");
  EXPECT_NEAR(d["results"]["lambda_min"].get<double>(), -0.04495, 5e-4);
  EXPECT_NEAR(d["results"]["V_max"].get<double>(), 1.2192, 1e-3);
  EXPECT_TRUE(d["results"]["eigenvector_head"].is_array());
  EXPECT_EQ(d["meta"]["cutoffs"]["N"], 200);
  EXPECT_TRUE(d["meta"]["version"].is_string());
  EXPECT_TRUE(d["meta"]["tolerances"].is_object());
}

TEST(Cli, IdentityValidity) {
  EXPECT_EQ(run({"identity", "--name", "ramanujan", "--n", "4"}).doc()["results"]["valid"], true);
  EXPECT_EQ(run({"identity", "--name", "ramanujan", "--n", "3"}).doc()["results"]["valid"], false);
  EXPECT_EQ(run({"identity", "--name", "complex_norm"}).doc()["results"]["valid"], true);
}

TEST(Cli, BellRamanujan) {
  const Outcome o = run({"bell", "--parties", "2", "--condition", "ramanujan", "--n", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = o.doc()["results"]["report"];
  EXPECT_NEAR(r["lhs"].get<double>(), 6.0, 1e-9);
  EXPECT_NEAR(r["rhs"].get<double>(), 2.0, 1e-9);
  EXPECT_EQ(r["violated"], true);
}

TEST(Cli, BellVarianceIsMultipartite) {
  const json r = run({"bell", "--parties", "4", "--condition", "variance"}).doc()["results"]["report"];
  EXPECT_EQ(r["name"], "multipartite");
  EXPECT_NEAR(r["lhs"].get<double>(), 0.0, 1e-9);
  EXPECT_NEAR(r["rhs"].get<double>(), 1.0, 1e-9);
}

TEST(Cli, Psi2Scan) {
  const json r = run({"psi2", "--scan", "100"}).doc()["results"];
  EXPECT_NEAR(r["best"].get<double>(), 1.197, 2e-3);
  EXPECT_NEAR(r["argbest"].get<double>(), 0.997, 2e-3);
  EXPECT_EQ(r["grid"].size(), r["values"].size());
}

TEST(Cli, MixtureEchoesDefaultCutoff) {
  const json d = run({"mixture", "--p", "0.5", "--coeffs", "1,0.1,0.01"}).doc();
  EXPECT_EQ(d["meta"]["cutoffs"]["D"], 8);
  EXPECT_NEAR(d["results"]["report"]["lhs"].get<double>(), d["results"]["predicted_lhs"].get<double>(), 1e-9);
}

TEST(Cli, SqueezedClosedForm) {
  const json d = run({"squeezed", "--lambda", "0.5"}).doc();
  EXPECT_NEAR(d["results"]["report"]["V"].get<double>(), 25.0 / 9.0, 1e-6);
  EXPECT_EQ(d["meta"]["cutoffs"]["rule"], "tail");
}

TEST(Cli, SchmidtNegativeComponents) {
  const Outcome o = run({"schmidt", "--alpha", "-0.6,0", "--beta", "0,-0.8"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.doc()["results"]["report"]["violated"], true);
}

TEST(Cli, EvalVerdicts) {
  EXPECT_EQ(run({"eval", "--expr-lhs", "(a+b)^2", "--expr-rhs", "a^2+2*a*b+b^2"}).doc()["results"]["equal"], true);
  const json d = run({"eval", "--expr-lhs", "a*b", "--expr-rhs", "a*b'"}).doc();
  EXPECT_EQ(d["results"]["equal"], false);
  EXPECT_EQ(d["results"]["difference"], "a*b - a*b'");
}

TEST(Cli, WitnessFromFiles) {
  const std::string state = write_temp("state.json", {{"family", "bell"}, {"params", {{"parties", 2}}}});
  const std::string ops = write_temp("ops.json", {{"A", "sx"}, {"A_prime", "sy"}, {"B", "sx"}, {"B_prime", "sy"}, {"n", 4}});
  const Outcome o = run({"witness", "--state", state, "--ops", ops, "--condition", "ramanujan"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(o.doc()["results"]["report"]["lhs"].get<double>(), 18.0, 1e-9);

  const std::string multi = write_temp("multi.json", {{"As", {"sx", "sx"}}, {"A_primes", {"sy", "sy"}}});
  const Outcome m = run({"witness", "--state", state, "--ops", multi, "--condition", "multipartite"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.doc()["results"]["report"]["violated"], true);

  const std::string squeezed = write_temp("sq.json", {{"family", "squeezed"}, {"params", {{"lambda", 0.3}}}});
  const std::string block = write_temp("block.json", {{"A", "blockx"}, {"A_prime", "blocky"}, {"B", "blockx"}, {"B_prime", "blocky"}});
  const Outcome s = run({"witness", "--state", squeezed, "--ops", block, "--condition", "variance_product"});
  ASSERT_EQ(s.code, 0) << s.err;
  const double l2 = 0.09;
  EXPECT_NEAR(s.doc()["results"]["report"]["V"].get<double>(), std::pow((1 + l2) / (1 - l2), 2), 1e-6);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"cmatrix"}).code, 2);
  EXPECT_EQ(run({"cmatrix", "--n", "abc"}).code, 2);
  EXPECT_EQ(run({"bell", "--parties", "2", "--condition", "nope"}).code, 2);
  EXPECT_EQ(run({"bell", "--parties", "2", "--condition", "ramanujan", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"bell", "--parties", "3", "--condition", "uffink"}).code, 2);

  const Outcome bad_state = run({"schmidt", "--alpha", "1,0", "--beta", "1,0"});
  EXPECT_EQ(bad_state.code, 1);
  EXPECT_TRUE(bad_state.out.empty());
  EXPECT_NE(bad_state.err.find("alpha"), std::string::npos);
  EXPECT_EQ(run({"squeezed", "--lambda", "1.2"}).code, 1);
  EXPECT_EQ(run({"squeezed", "--lambda", "0.5", "--cutoff", "7"}).code, 1);
  EXPECT_EQ(run({"cmatrix", "--n", "1", "--p", "1", "--tol", "1e-10"}).code, 0);
  EXPECT_EQ(run({"eval", "--expr-lhs", "(a", "--expr-rhs", "a"}).code, 1);
  EXPECT_EQ(run({"witness", "--state", "/nonexistent.json", "--ops", "/nonexistent.json", "--condition", "uffink"}).code, 1);

  const std::string bad = write_temp("bad.json", {{"family", "bell"}, {"params", {{"parties", 1}}}});
  const std::string ops = write_temp("ops2.json", {{"A", "sx"}, {"A_prime", "sy"}, {"B", "sx"}, {"B_prime", "sy"}});
  EXPECT_EQ(run({"witness", "--state", bad, "--ops", ops, "--condition", "uffink"}).code, 1);
}

TEST(Cli, HelpOnEverySubcommand) {
  const std::map<std::string, std::vector<std::string>> flags = {
      {"cmatrix", {"--n", "--p", "--tol"}},
      {"psi2", {"--scan"}},
      {"mixture", {"--p", "--coeffs", "--cutoff"}},
      {"squeezed", {"--lambda", "--cutoff"}},
      {"bell", {"--parties", "--condition", "--n"}},
      {"schmidt", {"--alpha", "--beta"}},
      {"identity", {"--name", "--n"}},
      {"eval", {"--expr-lhs", "--expr-rhs"}},
      {"witness", {"--state", "--ops", "--condition"}},
  };
  for (const auto& [sub, names] : flags) {
    const Outcome o = run({sub, "--help"});
    EXPECT_EQ(o.code, 0) << sub;
    for (const std::string& f : names) EXPECT_NE(o.out.find(f), std::string::npos) << sub << " " << f;
  }
  const Outcome top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  for (const auto& [sub, names] : flags) EXPECT_NE(top.out.find(sub), std::string::npos) << sub;
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> cases = {
      {"cmatrix", "--n", "50", "--p", "0.3"},
      {"psi2", "--scan", "40"},
      {"mixture", "--p", "0.2", "--coeffs", "0.9,0.1"},
      {"squeezed", "--lambda", "0.3"},
      {"schmidt", "--alpha", "0.6,0.1", "--beta", "0.3,0.7348469228349535"},
  };
  for (const auto& args : cases) {
    const Outcome a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, NumbersCarryTwelveSignificantDigits) {
  const json d = run({"cmatrix", "--n", "1"}).doc();
  const double v = d["results"]["lambda_min"].get<double>();
  EXPECT_DOUBLE_EQ(v, -0.0413812651491);
}

}  // namespace
