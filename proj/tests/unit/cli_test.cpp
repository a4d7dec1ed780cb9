#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "gsv_cli/cli.hpp"
#include "gsv_cli/config.hpp"

using gsv::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GSV_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Bracket) {
  const Outcome o = call({"bracket", "L(2)", "L(-1)"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "-3*L(1)\n");
}

TEST(Cli, Reduce) {
  const Outcome o = call({"reduce", "Y(-1/2)v", "--config", data("standard.cfg")});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("word: Y(1/2)"), std::string::npos);
  EXPECT_NE(o.out.find("scalar: -1"), std::string::npos);
}

TEST(Cli, ReduceAtCZeroIsDomainError) {
  EXPECT_EQ(call({"--config", data("reducible.cfg"), "reduce", "L(-1)v"}).code, 2);
}

TEST(Cli, CheckJacobiPasses) {
  const Outcome o = call({"check", "jacobi", "--window", "5"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("0 failures"), std::string::npos) << o.out;
}

TEST(Cli, CheckFailureExitsThree) {
  const Outcome o = call({"check", "cocycle", "--table", "square"});
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.out.find("status: fail"), std::string::npos);
}

TEST(Cli, CheckSuitesOnDense) {
  for (const char* suite : {"jacobi", "ideal", "lemma43", "lemma44", "cor45", "relations"}) {
    const Outcome o = call({"--config", data("dense.cfg"), "check", suite, "--window", "2", "--samples", "40"});
    EXPECT_EQ(o.code, 0) << suite << o.out << o.err;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"bracket", "L(1)"}).code, 1);
  EXPECT_EQ(call({"--format", "xml", "bracket", "L(1)", "L(2)"}).code, 1);
  EXPECT_EQ(call({"--format", "csv", "bracket", "L(1)", "L(2)"}).code, 1);
  EXPECT_EQ(call({"--config", data("missing.cfg"), "bracket", "L(1)", "L(2)"}).code, 1);
}

TEST(Cli, ConfigErrorsCarryLine) {
  const Outcome even = call({"--config", data("even_prime.cfg"), "bracket", "L(1)", "L(2)"});
  EXPECT_EQ(even.code, 1);
  EXPECT_NE(even.err.find("line 3"), std::string::npos) << even.err;
  EXPECT_NE(even.err.find("EvenPrimeInverted"), std::string::npos) << even.err;
  const Outcome unknown = call({"--config", data("unknown_key.cfg"), "bracket", "L(1)", "L(2)"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("colour"), std::string::npos);
}

TEST(Cli, DomainErrors) {
  const Outcome y = call({"bracket", "Y(1)", "L(1)"});
  EXPECT_EQ(y.code, 2);
  EXPECT_NE(y.err.find("IndexDomain"), std::string::npos);
  EXPECT_EQ(call({"bracket", "L(1", "L(1)"}).code, 2);
  EXPECT_EQ(call({"--config", data("dense.cfg"), "weights", "--depth", "3"}).code, 2);
}

TEST(Config, Defaults) {
  const auto cfg = gsv::cli::load_config(data("no_module.cfg"));
  EXPECT_EQ(cfg.hw.c, gsv::Rational(1));
  EXPECT_EQ(cfg.hw.h, gsv::Rational(0));
  EXPECT_FALSE(cfg.trunc.has_value());
  EXPECT_EQ(cfg.group, gsv::standard_group());
}

TEST(Config, ParsesEverySection) {
  const auto cfg = gsv::cli::load_config(data("dense.cfg"));
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.group.primes(), std::vector<long>{3});
  ASSERT_TRUE(cfg.trunc.has_value());
  EXPECT_EQ(cfg.trunc->lattice_caps.at(3), 1);
  EXPECT_THROW(gsv::cli::parse_config("[algebra]\ng = 1\ng = 2\n"), gsv::cli::ConfigError);
  EXPECT_THROW(gsv::cli::parse_config("[nowhere]\n"), gsv::cli::ConfigError);
  EXPECT_THROW(gsv::cli::parse_config("[algebra]\nm = 2\n"), gsv::cli::ConfigError);
  EXPECT_THROW(gsv::cli::parse_config("[trunc]\nlattice = 3:1\n"), gsv::cli::ConfigError);
  EXPECT_THROW(gsv::cli::parse_config("[order]\ndirection = sideways\n"), gsv::cli::ConfigError);
}

TEST(Cli, WeightsTextAndCsv) {
  const Outcome t = call({"weights", "--depth", "1"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("L(-1)v"), std::string::npos);
  const Outcome c = call({"--format", "csv", "weights", "--depth", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 10);  // header + 9
}

TEST(Cli, SingularAtCZero) {
  const Outcome o = call({"--config", data("reducible.cfg"), "singular", "--max-depth", "1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("Y(-1/2)v"), std::string::npos);
  EXPECT_NE(o.out.find("M(-1)v"), std::string::npos);
}

TEST(Cli, Partitions) {
  const Outcome o = call({"--format", "csv", "partitions", "--depth", "3"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "depth,count\n0,1\n1/2,0\n1,1\n3/2,0\n2,2\n5/2,0\n3,3\n");
}

TEST(Cli, AutCommands) {
  EXPECT_EQ(call({"aut", "apply", "diag(2; 3)", "M(1)"}).out, "36*M(1)\n");
  EXPECT_EQ(call({"aut", "apply", "inner(M(5))", "L(1)"}).out, "L(1) - 5*M(6)\n");
  EXPECT_EQ(call({"aut", "compose", "cocycle(1)", "cocycle(2)"}).out, "cocycle(3)\n");
  EXPECT_EQ(call({"aut", "invert", "scale(-1) * cocycle(2)"}).out, "cocycle(-2) * scale(-1)\n");
  EXPECT_EQ(call({"aut", "residual", "inner(M(2) + Y(-1/2))", "--window", "3"}).code, 0);
  EXPECT_EQ(call({"aut", "shape", "scale(-1)"}).code, 0);
  EXPECT_EQ(call({"aut", "apply", "inner(L(1))", "M(1)"}).code, 2);
}

TEST(Cli, Iso) {
  const Outcome o = call({"iso", "--other", data("alpha32.cfg")});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("1/3*L(3)"), std::string::npos) << o.out;
  const Outcome none = call({"iso", "--other", data("dense.cfg")});
  EXPECT_EQ(none.code, 0);
}

TEST(Cli, JsonSchema) {
  const Outcome o = call({"--format", "json", "--config", data("dense.cfg"), "bracket", "L(1/3)", "M(-1/3)"});
  ASSERT_EQ(o.code, 0);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "instance", "result", "status"}));
  EXPECT_EQ(doc["instance"]["primes"], nlohmann::ordered_json::array({3}));
  EXPECT_EQ(doc["instance"]["g"], "1");
  EXPECT_EQ(doc["instance"]["order"], "natural");
  EXPECT_EQ(doc["result"]["value"], "-1/3*M(0)");
  EXPECT_EQ(doc["status"], "ok");
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> matrix = {
      {"bracket", "L(2) + Y(1/2)", "Y(-1/2)"},
      {"act", "L(1)M(1)", "L(-1)L(-1)v"},
      {"weights", "--depth", "2"},
      {"--config", data("reducible.cfg"), "singular", "--max-depth", "3/2"},
      {"reduce", "M(-2)M(-1)v + 3*L(-3)v"},
      {"iso", "--other", data("alpha32.cfg")},
      {"aut", "residual", "diag(2; 3) * cocycle(1)"},
      {"--seed", "5", "check", "relations", "--window", "2", "--samples", "30"},
      {"--config", data("dense.cfg"), "check", "jacobi", "--samples", "50"},
      {"partitions", "--depth", "4"},
  };
  for (const auto& args : matrix) {
    for (const char* fmt : {"text", "json", "csv"}) {
      std::vector<std::string> full = {"--format", fmt};
      full.insert(full.end(), args.begin(), args.end());
      const Outcome a = call(full), b = call(full);
      EXPECT_EQ(a.code, b.code);
      EXPECT_EQ(a.out, b.out);
      EXPECT_EQ(a.err, b.err);
    }
  }
}
