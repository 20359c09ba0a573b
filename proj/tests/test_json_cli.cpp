// JSON serialization round trips and end-to-end runs of prelie-tool.

#include "prelie/json_io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace prelie;

namespace {

struct Run {
  int exitCode;
  std::string out;
};

Run tool(const std::string& args) {
  const std::string cmd = std::string(PRELIE_TOOL) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(PRELIE_TEST_DATA) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

// --- serialization ---------------------------------------------------------

TEST(Json, MatricesRoundTrip) {
  MatQ m(2, 3, Rat(0));
  m(0, 1) = Rat(mpz_class(-3), mpz_class(4));
  m(1, 2) = Rat(7);
  EXPECT_EQ(matQFromJson(toJson(m)), m);

  MatPolyQ p(1, 2, PolyQ(3));
  p(0, 0) = parsePolyQ("x1*x3 - 1/2", 3);
  p(0, 1) = parsePolyQ("x2^2", 3);
  const auto j = toJson(p);
  EXPECT_EQ(j.at("arity"), 3);
  EXPECT_EQ(matPolyFromJson(j), p);
}

TEST(Json, TablesRoundTrip) {
  const auto t = aff1Table();
  EXPECT_EQ(tableFromJson<PreLieTable>(toJson(t)), t);
  EXPECT_EQ(tableFromJson<PreLieTable>(readJsonFile(data("aff1_table.json"))), t);
  EXPECT_EQ(tableFromJson<StructConsts>(readJsonFile(data("aff1_consts.json"))), aff1Consts());
  EXPECT_THROW(tableFromJson<PreLieTable>(Json::parse("[[1, 2]]")), ParseError);
  EXPECT_THROW(tableFromJson<PreLieTable>(Json::array()), ParseError);
}

TEST(Json, ObstructionReportCarriesCertificate) {
  const auto j = toJson(obstructionVerdict(matrixModule(basisG2(), 2)));
  EXPECT_EQ(j.at("verdict"), "Obstructed");
  EXPECT_EQ(j.at("certificate").at("trials"), 20);
  EXPECT_EQ(j.at("certificate").at("errorBoundLog2"), "-1120");
}

// --- command line ------------------------------------------------------------

TEST(Cli, ObstructG2) {
  const auto r = tool("obstruct g2 --trials 20 --seed 7");
  EXPECT_EQ(r.exitCode, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("version"), 1);
  EXPECT_EQ(j.at("verdicts").at(0).at("verdict"), "Obstructed");
  EXPECT_EQ(j.at("seed"), "7");
}

TEST(Cli, ObstructSl6SoOddAdjoint) {
  EXPECT_EQ(tool("obstruct sl6 --trials 20").exitCode, 0);
  EXPECT_EQ(tool("obstruct so-odd --n 2").exitCode, 0);
  EXPECT_EQ(tool("obstruct adjoint --family sl --n 2").exitCode, 0);
  EXPECT_EQ(tool("obstruct adjoint --family g2").exitCode, 0);
}

TEST(Cli, NumerologyForE8IsInfeasible) {
  const auto r = tool("catalog numerology --dim 248 --dims");
  EXPECT_EQ(r.exitCode, 0);
  const auto v = Json::parse(r.out).at("verdicts").at(0);
  EXPECT_EQ(v.at("feasible"), false);
  EXPECT_TRUE(v.at("decompositions").empty());
}

TEST(Cli, NumerologyForSl6) {
  const auto r = tool("catalog numerology --dim 35 --dims 6,15,20,21");
  const auto v = Json::parse(r.out).at("verdicts").at(0);
  EXPECT_EQ(v.at("decompositions"), Json::parse("[[15, 20]]"));
}

TEST(Cli, SmallModules) {
  const auto r = tool("catalog small-modules --family sl --n 6");
  EXPECT_EQ(r.exitCode, 0);
  const auto rows = Json::parse(r.out).at("verdicts").at(0).at("smallModules");
  std::vector<std::uint64_t> dims;
  for (const auto& m : rows) dims.push_back(m.at("dim"));
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::uint64_t>{6, 6, 15, 15, 20, 21, 21}));
}

TEST(Cli, PrelieSubcommands) {
  EXPECT_EQ(tool("prelie check --table " + data("aff1_table.json")).exitCode, 0);
  EXPECT_EQ(tool("prelie check --table " + data("aff1_table.json") + " --consts " + data("aff1_consts.json")).exitCode, 0);
  EXPECT_EQ(tool("prelie check --table " + data("not_prelie.json")).exitCode, 1);
  EXPECT_EQ(tool("prelie roundtrip --table " + data("aff1_table.json") + " --cap 4").exitCode, 0);
  const auto p6 = tool("prelie prop6 --table " + data("aff1_table.json") + " --cap 4");
  EXPECT_EQ(p6.exitCode, 0);
  EXPECT_EQ(Json::parse(p6.out).at("verdicts").at(0).at("bilateral"), false);
}

TEST(Cli, DendriformAndRepbuild) {
  const auto d = tool("dendriform check --alphabet 2 --maxlen 4");
  EXPECT_EQ(d.exitCode, 0);
  EXPECT_EQ(Json::parse(d.out).at("verdicts").at(0).at("violationCount"), 0);
  const auto g = tool("repbuild dump --family g2");
  EXPECT_EQ(g.exitCode, 0);
  EXPECT_EQ(Json::parse(g.out).at("verdicts").at(0).at("matrices").size(), 14u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(tool("").exitCode, 2);
  EXPECT_EQ(tool("obstruct").exitCode, 2);
  EXPECT_EQ(tool("obstruct so-odd --n 1").exitCode, 2);
  EXPECT_EQ(tool("obstruct g2 --prime 1000").exitCode, 2);
  EXPECT_EQ(tool("obstruct g2 --seed banana").exitCode, 2);
  EXPECT_EQ(tool("catalog small-modules --family so --n 3").exitCode, 2);
  EXPECT_EQ(tool("prelie check --table /nonexistent.json").exitCode, 2);
  EXPECT_EQ(tool("prelie roundtrip --table " + data("not_prelie.json")).exitCode, 2);
}

TEST(Cli, ReportsAreByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "prelie-cli-test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json", b = dir / "b.json";
  ASSERT_EQ(tool("--out " + a.string() + " obstruct sl6 --seed 12345").exitCode, 0);
  ASSERT_EQ(tool("--out " + b.string() + " obstruct sl6 --seed 12345").exitCode, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a).find("wallTimeMs"), std::string::npos);
  const auto timed = tool("--timing catalog numerology --dim 14 --dims 7");
  EXPECT_NE(timed.out.find("wallTimeMs"), std::string::npos);
  std::filesystem::remove_all(dir);
}
