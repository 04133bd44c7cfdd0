#include "kostantq_cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using kostantq::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = kostantq::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DocumentedExamples) {
  EXPECT_EQ(run({"kostant-q", "-n", "2", "--mu", "1,0,-1"}).out, "q^2 + q\n");
  EXPECT_EQ(run({"mult", "-k", "2", "--lambda", "2,0", "--nu", "1,1"}).out, "2\n");
  EXPECT_EQ(run({"unimodular", "-n", "3"}).out, "true\n");
}

TEST(Cli, ValuesAcrossSubcommands) {
  EXPECT_EQ(run({"kostant", "--mu", "2,0,-2"}).out, "3\n");
  EXPECT_EQ(run({"kostant", "--mu", "2,0,-2", "--distinct"}).out, "1\n");
  EXPECT_EQ(run({"kostant", "--mu", "1,0,-1", "--roots", "0,2"}).out, "1\n");
  EXPECT_EQ(run({"kostant", "--mu", "0,0,0", "--roots", "none"}).out, "1\n");
  EXPECT_EQ(run({"kostant-q", "--mu", "2,0,-2", "--classical"}).out, "q^4 + q^3 + q^2\n");
  EXPECT_EQ(run({"kostant-q", "--mu", "1,0,-1", "--q", "2"}).out, "6\n");
  EXPECT_EQ(run({"kostant-q", "--mu", "1,-1,0", "--inclusion-exclusion"}).out, "q\n");
  EXPECT_EQ(run({"mult", "--lambda", "2,1,0", "--nu", "1,1,1", "--classical"}).out, "2\n");
  EXPECT_EQ(run({"mult", "--lambda", "2,0"}).out, "2,0 1\n1,1 2\n0,2 1\n");
  EXPECT_EQ(run({"tensor", "--lambda", "2,0", "--mu", "2,0"}).out, "4,0 1\n3,1 2\n");
  EXPECT_EQ(run({"tensor", "--lambda", "2,0", "--mu", "2,0", "--nu", "3,1"}).out, "2\n");
  EXPECT_EQ(run({"branch", "--lambda", "2,0"}).out, "2 1\n1 2\n0 1\n");
  EXPECT_EQ(run({"gt", "--lambda", "2,1,0", "--count"}).out, "7\n");
  EXPECT_EQ(run({"dim", "--lambda", "3,1,0"}).out, "24\n");
  EXPECT_EQ(run({"chamber-a2", "--mu", "1,0,-1"}).out, "tau3 q^2 + q\n");
  EXPECT_EQ(run({"chamber-a2", "--mu", "-1,1,0"}).out, "outside 0\n");
  EXPECT_EQ(run({"unimodular", "--matrix", "1,1;-1,1"}).out, "false\n");
}

TEST(Cli, OracleCrossChecksAgree) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"kostant", "--mu", "3,1,-4", "--oracle"},
           {"kostant-q", "--mu", "3,1,0,-4", "--oracle"},
           {"mult", "--lambda", "4,2,1,0", "--nu", "2,2,2,1", "--oracle"},
           {"mult", "--lambda", "4,1,0", "--oracle"},
           {"mult", "--lambda", "3,1,0", "--nu", "2,1,1", "--classical", "--oracle"},
           {"tensor", "--lambda", "3,1,0", "--mu", "2,1,0", "--oracle"},
           {"tensor", "--lambda", "3,1,0", "--mu", "2,1,0", "--nu", "4,2,1", "--oracle"},
           {"decompose", "--lambda", "6,3,0", "--oracle"},
           {"decompose", "--lambda", "3,1,0", "--oracle"},
           {"branch", "--lambda", "4,2,0", "--oracle"},
           {"dim", "--lambda", "5,3,1,0", "--oracle"},
           {"chamber-a2", "--mu", "4,-1,-3", "--oracle"},
       }) {
    const Result r = run(args);
    EXPECT_EQ(r.status, 0) << args[0] << ": " << r.err;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).status, kostantq::cli::kExitUsage);
  EXPECT_EQ(run({}).status, kostantq::cli::kExitUsage);
  EXPECT_EQ(run({"kostant"}).status, kostantq::cli::kExitUsage);
  EXPECT_EQ(run({"kostant", "--mu", "1,x"}).status, kostantq::cli::kExitUsage);
  EXPECT_EQ(run({"kostant", "--mu", "1,0,-1", "--bogus"}).status, kostantq::cli::kExitUsage);
  EXPECT_EQ(run({"kostant", "--mu", "1,0,0"}).status, kostantq::cli::kExitDomain);
  EXPECT_EQ(run({"kostant", "-n", "3", "--mu", "1,0,-1"}).status, kostantq::cli::kExitDomain);
  EXPECT_EQ(run({"mult", "--lambda", "1,1,0", "--nu", "1,1,0"}).status, kostantq::cli::kExitDomain);
  EXPECT_EQ(run({"tensor", "--lambda", "2,0", "--mu", "2,0", "--nu", "3,0"}).status, kostantq::cli::kExitDomain);
  EXPECT_EQ(run({"kostant-q", "-n", "4", "--mu", "0,0,0,0,0", "--inclusion-exclusion"}).status,
            kostantq::cli::kExitDomain);
  EXPECT_EQ(run({"fit", "-n", "4"}).status, kostantq::cli::kExitDomain);
  const Result r = run({"mult", "--lambda", "1,1,0", "--nu", "1,1,0"});
  EXPECT_NE(r.err.find("not strictly dominant"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, JsonSchemasRoundTrip) {
  {
    const Json j = Json::parse(run({"kostant-q", "--mu", "2,0,-2", "--json"}).out);
    EXPECT_EQ(kostantq::qpolynomial_from_json(j.at("polynomial")).to_string(), "q^3 + q^2 + q");
  }
  {
    const Json j = Json::parse(run({"decompose", "--lambda", "6,3,0", "--json"}).out);
    EXPECT_TRUE(j.at("subset_formula_holds").get<bool>());
    const auto table = kostantq::decomposition_from_json(j.at("table"));
    EXPECT_EQ(table.size(), 7u);
    EXPECT_EQ(table.at(kostantq::Weight{5, 3, 1}), 2);
    EXPECT_EQ(j.at("table")[0].at("weight"), "6,3,0");
    EXPECT_EQ(j.at("table")[0].at("mult"), "1");
  }
  {
    const Json j = Json::parse(run({"gt", "--lambda", "2,0", "--json"}).out);
    EXPECT_EQ(j, Json::parse("[[[2,0],[2]],[[2,0],[1]],[[2,0],[0]]]"));
  }
  {
    const Json j = Json::parse(run({"fit", "-n", "2", "--json"}).out);
    ASSERT_EQ(j.size(), 6u);
    for (const auto& cell : j) {
      EXPECT_TRUE(cell.contains("signature"));
      const auto p = kostantq::chamber_polynomial_from_json(cell.at("polynomial"), 2);
      const auto a = kostantq::parse_int_list(cell.at("representative").get<std::string>());
      EXPECT_EQ(p.evaluate_integral(a), kostantq::kostant_q(kostantq::RootSystemA(2), kostantq::from_root_coords(a)));
    }
  }
  {
    const Json j = Json::parse(run({"mult", "--lambda", "2,0", "--nu", "1,1", "--json"}).out);
    EXPECT_EQ(j.at("value"), "2");
  }
  {
    const Json j = Json::parse(run({"fit", "-n", "3", "--roots", "0,1,5", "--box", "3", "--json"}).out);
    EXPECT_TRUE(j.at("passed").get<bool>());
  }
}

TEST(Cli, ValuesAreDecimalStrings) {
  const Json j = Json::parse(run({"kostant", "--mu", "8,6,4,2,-20", "--json"}).out);
  const std::string v = j.at("value").get<std::string>();
  EXPECT_EQ(kostantq::BigInt(v), kostantq::kostant(kostantq::RootSystemA(4), kostantq::Weight{8, 6, 4, 2, -20}));
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"fit", "-n", "3", "--json", "--box", "4"},
           {"tensor", "--lambda", "4,2,0", "--mu", "3,1,0", "--json"},
           {"mult", "--lambda", "5,2,0", "--json"}})
    EXPECT_EQ(run(args).out, run(args).out);
}
