#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cec/cli.hpp"
#include "cec/poly.hpp"

using namespace cec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(CliPoly, CycleText) {
  auto r = cli({"poly", "cycle", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5x^4 + x^5 ; total 6\nmin_exp 4 ; degree 5 ; unimodal yes\n");
}

TEST(CliPoly, CompleteJson) {
  auto r = cli({"poly", "complete", "4", "--method", "oracle", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"], nlohmann::json({"0", "0", "0", "16", "15", "6", "1"}));
  EXPECT_EQ(j["total"], "38");
  EXPECT_EQ(j["min_exp"], 3);
  EXPECT_EQ(j["unimodal"], true);
}

TEST(CliPoly, Csv) {
  auto r = cli({"poly", "cycle", "3", "--format", "csv"});
  EXPECT_EQ(r.out, "index,value\n0,0\n1,0\n2,3\n3,1\n");
}

TEST(CliPoly, DisconnectedFileGivesZero) {
  auto path = temp_file("cec_disconnected.edges", "4 2\n0 1\n2 3\n");
  auto r = cli({"poly", "--file", path, "--method", "engine"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 ; total 0\nmin_exp none ; degree none ; unimodal yes\n");
}

TEST(CliPoly, IdenticalAcrossMethods) {
  const std::vector<std::vector<std::string>> trusted = {
      {"cycle", "7"}, {"path", "6"}, {"star", "5"}, {"complete_bipartite", "2", "5"},
      {"friendship", "3"}, {"lollipop", "4", "2"}, {"cocktail_party", "2"}};
  const std::vector<std::vector<std::string>> untrusted = {
      {"wheel", "8"}, {"fan", "6"}, {"hypercube", "3"}, {"turan", "6", "3"}, {"complete", "6"}};
  for (const auto& format : {"text", "json", "csv"}) {
    for (const auto& t : trusted) {
      std::vector<std::string> base = {"poly"};
      base.insert(base.end(), t.begin(), t.end());
      base.insert(base.end(), {"--format", format, "--method"});
      auto run = [&](const char* m) {
        auto a = base;
        a.push_back(m);
        return cli(a);
      };
      auto o = run("oracle"), e = run("engine"), f = run("formula"), a = run("auto");
      EXPECT_EQ(o.code, 0);
      EXPECT_EQ(o.out, e.out) << t[0];
      EXPECT_EQ(o.out, f.out) << t[0];
      EXPECT_EQ(o.out, a.out) << t[0];
    }
    for (const auto& t : untrusted) {
      std::vector<std::string> base = {"poly"};
      base.insert(base.end(), t.begin(), t.end());
      base.insert(base.end(), {"--format", format, "--method"});
      auto o = base, e = base, a = base;
      o.push_back("oracle");
      e.push_back("engine");
      a.push_back("auto");
      EXPECT_EQ(cli(o).out, cli(e).out) << t[0];
      EXPECT_EQ(cli(o).out, cli(a).out) << t[0];
    }
  }
}

TEST(CliPoly, AutoAvoidsRefutedFormula) {
  auto r = cli({"poly", "fan", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "8x^3 + 5x^4 + x^5 ; total 14");
  EXPECT_NE(r.err.find("refuted"), std::string::npos);
  auto f = cli({"poly", "fan", "4", "--method", "formula"});
  EXPECT_EQ(f.out.substr(0, f.out.find('\n')), "x^3 + 4x^4 + 4x^5 ; total 9");
}

TEST(CliPoly, JsonRoundTrip) {
  auto r = cli({"poly", "hypercube", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  Poly p = poly_from_strings(j["coefficients"].get<std::vector<std::string>>());
  EXPECT_EQ(p.coeff(15), BigInt(42467328));
  EXPECT_EQ(coefficient_strings(p), j["coefficients"].get<std::vector<std::string>>());
}

TEST(CliPoly, ExitCodes) {
  EXPECT_EQ(cli({"poly", "cycle", "2"}).code, 2);
  EXPECT_EQ(cli({"poly", "petersen", "5"}).code, 2);
  EXPECT_EQ(cli({"poly", "cycle", "x"}).code, 2);
  EXPECT_EQ(cli({"poly"}).code, 2);
  EXPECT_EQ(cli({"poly", "cycle", "5", "--method", "magic"}).code, 2);
  EXPECT_EQ(cli({"poly", "--file", "/nonexistent/g.edges"}).code, 2);
  EXPECT_EQ(cli({"poly", "complete", "5", "--method", "formula"}).code, 2);
  auto bad = temp_file("cec_bad.edges", "3 1\n1 1\n");
  auto r = cli({"poly", "--file", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(cli({"poly", "complete", "9", "--method", "oracle"}).code, 3);
  EXPECT_EQ(cli({"poly", "complete", "5", "--max-oracle-edges", "64"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(CliPoly, WorkersFromEnvironment) {
  setenv("CEC_WORKERS", "3", 1);
  auto r = cli({"poly", "wheel", "9", "--method", "oracle"});
  unsetenv("CEC_WORKERS");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, cli({"poly", "wheel", "9", "--method", "engine", "--workers", "2"}).out);
  setenv("CEC_WORKERS", "0", 1);
  EXPECT_EQ(cli({"poly", "wheel", "5"}).code, 2);
  EXPECT_EQ(cli({"poly", "wheel", "5", "--workers", "2"}).code, 0);
  setenv("CEC_WORKERS", "two", 1);
  EXPECT_EQ(cli({"poly", "wheel", "5"}).code, 2);
  unsetenv("CEC_WORKERS");
}

TEST(CliVerify, SingleClaim) {
  auto r = cli({"verify", "--claims", "thm-cycle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("thm-cycle"), std::string::npos);
  EXPECT_EQ(cli({"verify", "--claims", "no-such-id"}).code, 2);
  EXPECT_EQ(cli({"verify", "--claims", "thm-fan,thm-star"}).code, 0);
}

TEST(CliVerify, FullRunMatchesExpectedVerdicts) {
  auto r = cli({"verify", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["claims"])
    EXPECT_TRUE(c["matches_expected"].get<bool>()) << c["id"] << " " << c["verdict"];
  EXPECT_EQ(r.code, 0);
}

TEST(CliTable, CompleteRows) {
  auto r = cli({"table", "complete", "2..6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("125x^4 + 222x^5 + 205x^6 + 120x^7 + 45x^8 + 10x^9 + x^10 ; total 728"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(CliTable, TuranBox) {
  auto r = cli({"table", "turan", "(3,2)..(5,4)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 6u);
  EXPECT_EQ(j["rows"][5]["graph"], "turan(5,4)");
  EXPECT_EQ(j["rows"][5]["coefficients"],
            nlohmann::json({"0", "0", "0", "0", "75", "111", "82", "36", "9", "1"}));
}

TEST(CliTable, WheelTotals) {
  auto truth = cli({"table", "wheel", "4..9", "--totals-only", "--format", "csv"});
  EXPECT_EQ(truth.out, "graph,total\n\"wheel(4)\",38\n\"wheel(5)\",134\n\"wheel(6)\",462\n\"wheel(7)\",1582\n"
                       "\"wheel(8)\",5406\n\"wheel(9)\",18462\n");
  auto stated = cli({"table", "wheel", "4..9", "--totals-only", "--format", "csv", "--method", "formula"});
  EXPECT_EQ(stated.out, "graph,total\n\"wheel(4)\",38\n\"wheel(5)\",134\n\"wheel(6)\",462\n\"wheel(7)\",1526\n"
                        "\"wheel(8)\",4878\n\"wheel(9)\",15254\n");
}

TEST(CliTable, BadRanges) {
  EXPECT_EQ(cli({"table", "complete", "6..2"}).code, 2);
  EXPECT_EQ(cli({"table", "complete", "a..b"}).code, 2);
  EXPECT_EQ(cli({"table", "turan", "(3,2)..(5)"}).code, 2);
  EXPECT_EQ(cli({"table", "wheel", "1..3"}).code, 2);
}

TEST(CliScan, Families) {
  auto r = cli({"scan-unimodal", "--family", "cycle", "--max", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 counterexamples, 0 unclassified"), std::string::npos);
  EXPECT_EQ(cli({"scan-unimodal", "--family", "nonsense"}).code, 2);
  auto j = nlohmann::json::parse(cli({"scan-unimodal", "--format", "json"}).out);
  EXPECT_EQ(j["summary"]["unclassified"], 0);
}
