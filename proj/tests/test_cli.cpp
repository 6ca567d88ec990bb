#include "sphorb/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace sphorb;
using namespace sphorb::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::string sub, std::string type, std::map<std::string, std::string> opts = {}) {
  std::ostringstream out, err;
  const int code = run({std::move(sub), std::move(type), std::move(opts)}, out, err);
  return {code, out.str(), err.str()};
}

std::string cert_path(const std::string &name) { return std::string(SPHORB_CERT_DIR) + "/" + name; }

} // namespace

TEST(Cli, PiG2Json) {
  const auto r = call("pi", "G2", {{"format", "json"}});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  std::set<std::vector<int>> pis;
  for (const auto &e : j) pis.insert(e["pi"].get<std::vector<int>>());
  EXPECT_TRUE(pis.contains({1}));
  EXPECT_TRUE(pis.contains({2}));
}

TEST(Cli, DimA3) {
  const auto r = call("dim", "A3", {{"pi", "2"}});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["length"], 5);
  EXPECT_EQ(j["rank"], 1);
  EXPECT_EQ(j["dimension"], 6);
  EXPECT_EQ(j["pi"], json::array({2}));
  EXPECT_EQ(j["central"], false);
  const auto w = j["w_word"].get<std::vector<int>>();
  EXPECT_EQ(w.size(), 5u);
}

TEST(Cli, DimErrors) {
  EXPECT_EQ(call("dim", "A3", {{"pi", "1"}}).code, kDomain);
  EXPECT_EQ(call("dim", "A3").code, kUsage);
  EXPECT_EQ(call("dim", "A3", {{"pi", "x"}}).code, kUsage);
  EXPECT_EQ(call("dim", "A3", {{"pi", "7"}}).code, kDomain);
  EXPECT_EQ(call("dim", "A3", {{"pi", ""}}).code, kOk);
}

TEST(Cli, VerifyG2) {
  const auto r = call("verify", cert_path("g2.certs.json"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("2 passed"), std::string::npos) << r.out;
}

TEST(Cli, VerifyDiscrepanciesFails) {
  const auto r = call("verify", cert_path("discrepancies.certs.json"));
  EXPECT_EQ(r.code, kVerifyFailed);
  EXPECT_NE(r.out.find("0 passed, 27 failed"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  const auto j = call("verify", cert_path("discrepancies.certs.json"), {{"format", "json"}});
  EXPECT_EQ(json::parse(j.out)["failed"], 27);
}

TEST(Cli, VerifyMissingFile) {
  const auto r = call("verify", "/nonexistent/x.json");
  EXPECT_EQ(r.code, kDomain);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(Cli, StepA2) {
  const auto r = call("step", "A2", {{"word", "1"}, {"s", "2"}});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["case"], 1);
  ASSERT_EQ(j["candidates"].size(), 1u);
  EXPECT_EQ(j["candidates"][0].size(), 3u);
  const auto w0 = call("step", "A2", {{"word", "1,2,1"}, {"s", "1"}});
  EXPECT_EQ(json::parse(w0.out)["case"], 4);
  EXPECT_EQ(call("step", "A2", {{"word", "1,2"}, {"s", "1"}}).code, kDomain);
  EXPECT_EQ(call("step", "A2", {{"word", "1"}}).code, kUsage);
  EXPECT_EQ(call("step", "A2", {{"word", "1"}, {"s", "1,2"}}).code, kUsage);
  const auto t = call("step", "A2", {{"s", "1"}, {"format", "table"}});
  EXPECT_EQ(t.out, "case 2: [1] []\n");
}

TEST(Cli, Roots) {
  const auto r = call("roots", "G2", {{"format", "json"}});
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["positive_roots"].size(), 6u);
  EXPECT_EQ(j["highest_root"], json::array({3, 2}));
  EXPECT_EQ(j["cartan"][1][0], -3);
  const auto t = call("roots", "B3");
  EXPECT_NE(t.out.find("9 positive roots"), std::string::npos);
  const auto tsv = call("roots", "A2", {{"format", "tsv"}});
  EXPECT_EQ(tsv.out, "root\theight\tlength\tdepth\n0,1\t1\tlong\t1\n1,0\t1\tlong\t1\n1,1\t2\tlong\t2\n");
}

TEST(Cli, Weyl) {
  const auto r = call("weyl", "A3");
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["length"], 6);
  EXPECT_EQ(j["theta"], json::array({3, 2, 1}));
  const auto w = json::parse(call("weyl", "A2", {{"word", "1,1,2"}}).out);
  EXPECT_EQ(w["word"], json::array({2}));
  EXPECT_EQ(w["involution"], true);
  const auto s1 = call("weyl", "E8", {{"seed", "3"}});
  EXPECT_EQ(s1.code, kOk);
  EXPECT_EQ(s1.out, call("weyl", "E8", {{"seed", "3"}}).out);
  EXPECT_EQ(call("weyl", "A2", {{"word", "3"}}).code, kDomain);
}

TEST(Cli, PiFormats) {
  const auto tsv = call("pi", "B3", {{"format", "tsv"}});
  ASSERT_EQ(tsv.code, kOk);
  EXPECT_EQ(std::count(tsv.out.begin(), tsv.out.end(), '\n'), 6);
  EXPECT_EQ(tsv.out.substr(0, tsv_header().size()), tsv_header());
  const auto table = call("pi", "B3");
  EXPECT_NE(table.out.find("{1,2,3} *"), std::string::npos);
  EXPECT_EQ(call("pi", "B3", {{"format", "xml"}}).code, kUsage);
}

TEST(Cli, Tables) {
  const auto r = call("tables", "", {{"format", "json"}});
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  std::set<std::string> types;
  for (const auto &e : j) types.insert(e["type"]);
  EXPECT_EQ(types.size(), all_types().size());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call("frobnicate", "A2").code, kUsage);
  EXPECT_EQ(call("roots", "").code, kUsage);
  const auto bad = call("roots", "B1");
  EXPECT_EQ(bad.code, kDomain);
  EXPECT_NE(bad.err.find("B1"), std::string::npos) << bad.err;
}

TEST(Cli, ParseIndexList) {
  EXPECT_EQ(parse_index_list("1,2,3", "pi"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(parse_index_list("[1, 2]", "pi"), (std::vector<int>{1, 2}));
  EXPECT_TRUE(parse_index_list("", "pi").empty());
  EXPECT_THROW(parse_index_list("1,a", "pi"), UsageError);
  EXPECT_THROW(parse_index_list("1.5", "pi"), UsageError);
}
