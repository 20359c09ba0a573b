// prelie-tool: command-line front end. Every subcommand prints one JSON
// RunReport on stdout (and to --out when given).
//
// Exit codes: 0 every claim upheld, 1 a claim was refuted, 2 usage error.

#include "prelie/paper_claims.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace prelie;

constexpr int kReportVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string seed = "0xF01551";
  std::size_t trials = 20;
  std::string prime;  // empty: pick from the certification list
  std::size_t cap = 4;
  bool symbolic = false;
  bool timing = false;
  std::string out;
};

std::uint64_t parseU64(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + s + "'");
  }
}

claims::RunOptions runOptions(const Common& c) {
  claims::RunOptions o;
  o.seed = parseU64(c.seed, "--seed");
  o.trials = c.trials;
  o.prime = c.prime.empty() ? primeForSeed(o.seed) : parseU64(c.prime, "--prime");
  o.symbolic = c.symbolic;
  if (o.trials == 0) throw UsageError("--trials must be positive");
  if (!isPrime64(o.prime)) throw UsageError("--prime " + std::to_string(o.prime) + " is not prime");
  return o;
}

Json randomInputs(const Common& c) {
  const auto o = runOptions(c);
  return {{"trials", o.trials}, {"prime", std::to_string(o.prime)}, {"symbolic", o.symbolic}};
}

ObstructionOptions obstructionOptions(const Common& c) {
  auto opt = claims::obstructionOptions(runOptions(c));
  opt.symbolic = c.symbolic;
  return opt;
}

std::vector<std::uint64_t> parseDims(const std::string& s) {
  std::vector<std::uint64_t> dims;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) dims.push_back(parseU64(item, "--dims entry"));
  return dims;
}

/// Collects the pieces of a RunReport and writes it out.
class Reporter {
 public:
  Reporter(const Common& c) : common_(c), start_(std::chrono::steady_clock::now()) {}

  void command(std::string name) { command_ = std::move(name); }
  Json& inputs() { return inputs_; }
  void add(Json verdict) { verdicts_.push_back(std::move(verdict)); }

  int finish(bool upheld) const {
    Json report;
    report["version"] = kReportVersion;
    report["command"] = command_;
    report["inputs"] = inputs_;
    report["seed"] = common_.seed.empty() ? "" : std::to_string(parseU64(common_.seed, "--seed"));
    report["verdicts"] = verdicts_;
    report["passed"] = upheld;
    if (common_.timing)
      report["wallTimeMs"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!common_.out.empty()) {
      std::ofstream f(common_.out);
      if (!f) throw UsageError("cannot write " + common_.out);
      f << text;
    }
    return upheld ? 0 : 1;
  }

 private:
  const Common& common_;
  std::chrono::steady_clock::time_point start_;
  std::string command_;
  Json inputs_ = Json::object();
  Json verdicts_ = Json::array();
};

PreLieTable loadTable(const std::string& path) { return tableFromJson<PreLieTable>(readJsonFile(path)); }
StructConsts loadConsts(const std::string& path) { return tableFromJson<StructConsts>(readJsonFile(path)); }

// --- subcommand bodies -----------------------------------------------------

int smallModulesCmd(Reporter& rep, const std::string& family, int n) {
  const auto f = LieFamily::parse(family, n);
  rep.command("catalog small-modules");
  rep.inputs() = {{"family", family}, {"n", n}};
  Json rows = Json::array();
  for (const auto& m : smallModules(f)) rows.push_back(toJson(m));
  rep.add({{"algebra", f.name()}, {"dim", f.dimension()}, {"smallModules", rows}});
  return rep.finish(true);
}

int numerologyCmd(Reporter& rep, std::uint64_t dim, const std::string& dimsText) {
  const auto dims = parseDims(dimsText);
  rep.command("catalog numerology");
  rep.inputs() = {{"dim", dim}, {"dims", dims}};
  const auto decomps = feasibleDecomps(dim, dims);
  rep.add({{"feasible", !decomps.empty()}, {"decompositions", decomps}});
  return rep.finish(true);
}

int obstructSl6(Reporter& rep, const Common& c) {
  rep.command("obstruct sl6");
  rep.inputs() = randomInputs(c);
  const auto r = obstructionVerdict(wedge3ModuleSL6(), obstructionOptions(c));
  rep.add(toJson(r));
  return rep.finish(r.verdict == Verdict::Obstructed);
}

int obstructG2(Reporter& rep, const Common& c) {
  rep.command("obstruct g2");
  rep.inputs() = randomInputs(c);
  const auto r = obstructionVerdict(matrixModule(basisG2(), 2), obstructionOptions(c));
  Json j = toJson(r);
  bool ok = r.verdict == Verdict::Obstructed;
  if (c.symbolic) {
    const bool zero = symDet(upsilonMatrix(matrixModule(basisG2(), 2))).isZero();
    j["symbolicDeterminantIsZero"] = zero;
    ok = ok && zero;
  }
  rep.add(j);
  return rep.finish(ok);
}

int obstructSoOdd(Reporter& rep, const Common& c, int n) {
  if (n < 2) throw UsageError("so-odd needs --n >= 2");
  rep.command("obstruct so-odd");
  rep.inputs() = randomInputs(c);
  rep.inputs()["n"] = n;
  const auto N = static_cast<std::size_t>(n);
  auto [y, z] = symbolicYZ(N);
  MatQ B(N, N, Rat(0));
  B(0, 1) = Rat(1);
  B(1, 0) = Rat(-1);
  const auto w = soOddWitness(N, y, B, z);
  const auto r = obstructionVerdict(matrixModule(basisSOOdd(n), N), obstructionOptions(c));
  Json j = toJson(r);
  j["witness"] = {{"inSoOdd", w.inSoOdd}, {"isZeroOnPoint", w.isZeroOnPoint}, {"A", toJson(w.A)}};
  rep.add(j);
  return rep.finish(w.inSoOdd && w.isZeroOnPoint && r.verdict == Verdict::Obstructed);
}

int obstructAdjoint(Reporter& rep, const Common& c, const std::string& family, int n) {
  const auto f = LieFamily::parse(family, n);
  rep.command("obstruct adjoint");
  rep.inputs() = randomInputs(c);
  rep.inputs()["family"] = family;
  rep.inputs()["n"] = n;
  const auto basis = basisFor(f);
  const bool identity = adjointNotVeryGood(basis);
  const auto r = obstructionVerdict(adjointModule(f, structureConstants(basis)), obstructionOptions(c));
  Json j = toJson(r);
  j["upsilonKillsPoint"] = identity;
  rep.add(j);
  return rep.finish(identity && r.verdict == Verdict::Obstructed);
}

int prelieCheck(Reporter& rep, const std::string& tablePath, const std::string& constsPath) {
  rep.command("prelie check");
  rep.inputs() = {{"table", tablePath}};
  const auto t = loadTable(tablePath);
  const auto defects = preLieDefect(t);
  Json j = {{"dim", t.dim()}, {"prelie", defects.empty()}, {"defects", defects.size()}};
  bool ok = defects.empty();
  if (!defects.empty()) j["firstDefect"] = {defects.front().i, defects.front().j, defects.front().k};
  if (!constsPath.empty()) {
    rep.inputs()["consts"] = constsPath;
    const bool match = inducedBracketCheck(t, loadConsts(constsPath));
    j["inducedBracketMatches"] = match;
    ok = ok && match;
  } else {
    j["inducedBracket"] = toJson(inducedBracket(t));
  }
  rep.add(j);
  return rep.finish(ok);
}

int prelieRoundtrip(Reporter& rep, const std::string& tablePath, const std::string& constsPath, std::size_t cap) {
  rep.command("prelie roundtrip");
  rep.inputs() = {{"table", tablePath}, {"cap", cap}};
  const auto t = loadTable(tablePath);
  const auto c = constsPath.empty() ? inducedBracket(t) : loadConsts(constsPath);
  if (!preLieDefect(t).empty()) throw PreconditionViolation("table is not prelie");
  const auto r = prelieFromIdeal(t, c, cap);
  const bool recovered = r.consistent && r.recovered == t;
  rep.add({{"consistent", r.consistent}, {"recovered", recovered}, {"idealDims", r.idealDims}});
  return rep.finish(recovered);
}

int prelieProp6(Reporter& rep, const std::string& tablePath, std::size_t cap) {
  rep.command("prelie prop6");
  rep.inputs() = {{"table", tablePath}, {"cap", cap}};
  const auto t = loadTable(tablePath);
  if (!preLieDefect(t).empty()) throw PreconditionViolation("table is not prelie");
  const auto p = prop6Checks(t, cap);
  const bool degreePreserved = starPreservesDegree(t, cap);
  rep.add({{"leftIdeal", p.leftIdeal},
           {"bilateral", p.bilateral},
           {"associativeOnG", p.associativeOnG},
           {"bilateralIffAssociative", p.consistent()},
           {"starPreservesDegree", degreePreserved}});
  return rep.finish(p.leftIdeal && p.consistent() && degreePreserved);
}

int dendriformCmd(Reporter& rep, int alphabet, std::size_t maxLen) {
  if (alphabet < 1) throw UsageError("--alphabet must be >= 1");
  rep.command("dendriform check");
  rep.inputs() = {{"alphabet", alphabet}, {"maxlen", maxLen}};
  const auto pair = shufflePair();
  const auto axioms = dendriformAxiomCheck(pair, alphabet, maxLen);
  const auto hopf = hopfCheck(shuffle, alphabet, maxLen);
  const auto p30 = prop30Checks(pair, alphabet, maxLen);
  Json j = toJson(axioms);
  j["hopf"] = {{"unital", hopf.unital},
               {"associative", hopf.associative},
               {"coproductMorphism", hopf.coproductMorphism},
               {"augmentationSquaredLeftIdeal", hopf.leftIdealGe2}};
  j["primitives"] = {{"directSum", p30.directSum}, {"primTimesEqualsAll", p30.primTimesEqualsAll}, {"leftIdeal", p30.leftIdeal}};
  rep.add(j);
  return rep.finish(axioms.ok() && hopf.ok() && p30.ok());
}

int repbuildDump(Reporter& rep, const std::string& family, int n) {
  const auto f = LieFamily::parse(family, n);
  rep.command("repbuild dump");
  rep.inputs() = {{"family", family}, {"n", n}};
  const auto b = basisFor(f);
  const auto check = checkLieBasis(b);
  Json j = toJson(b);
  j["checks"] = {{"independent", check.independent},
                 {"closed", check.closed},
                 {"traceless", check.traceless},
                 {"dimensionMatches", check.dimensionMatches}};
  rep.add(j);
  return rep.finish(check.ok());
}

int verifyPaper(Reporter& rep, const Common& c) {
  const auto o = runOptions(c);
  rep.command("verify-paper");
  rep.inputs() = randomInputs(c);
  bool ok = true;
  Json acceptance = Json::array();
  for (const auto& r : claims::runAcceptance(o)) {
    std::cerr << (r.passed() ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " - " << r.detail << "\n";
    ok = ok && r.passed();
    acceptance.push_back(claims::toJson(r));
  }
  rep.add({{"acceptance", acceptance}});
  Json families = Json::array();
  for (const auto& f : claims::pipelineFamilies()) {
    const auto v = claims::analyzeFamily(f, o);
    std::cerr << "      " << f.name() << ": " << v.verdict << "\n";
    ok = ok && v.ok();
    families.push_back(claims::toJson(v));
  }
  rep.add({{"families", families}});
  return rep.finish(ok);
}

void addRandomFlags(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "64-bit seed (decimal or 0x-hex)");
  app->add_option("--trials", c.trials, "independent random specializations");
  app->add_option("--prime", c.prime, "prime modulus (default: chosen from the seed)");
  app->add_flag("--symbolic", c.symbolic, "also run the exact symbolic path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of prelie structures and Lie-algebra obstructions"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out, "also write the JSON report to this file");
  app.add_flag("--timing", common.timing, "include wallTimeMs in the report");

  std::string family = "sl", tablePath, constsPath, dimsText;
  int n = 2, alphabet = 2;
  std::size_t maxLen = 4;
  std::uint64_t dim = 0;

  auto* catalog = app.add_subcommand("catalog", "small modules and dimension numerology");
  catalog->require_subcommand(1);
  auto* small = catalog->add_subcommand("small-modules", "small modules of one algebra");
  small->add_option("--family", family, "sl, sp, so-even, so-odd, g2, f4, e6, e7, e8")->required();
  small->add_option("--n", n, "matrix size for sl, rank for sp/so");
  auto* numer = catalog->add_subcommand("numerology", "ways to write dim g as a sum of small dimensions");
  numer->add_option("--dim", dim)->required();
  numer->add_option("--dims", dimsText, "comma separated; may be empty")->expected(0, 1);

  auto* obstruct = app.add_subcommand("obstruct", "rank obstructions for very good modules");
  obstruct->require_subcommand(1);
  auto* osl6 = obstruct->add_subcommand("sl6", "Upsilon onto Lambda^3 of the sl_6 standard module");
  auto* og2 = obstruct->add_subcommand("g2", "Upsilon on two copies of the g2 standard module");
  auto* oso = obstruct->add_subcommand("so-odd", "so_{2n+1} on n copies of its standard module");
  oso->add_option("--n", n)->required();
  auto* oadj = obstruct->add_subcommand("adjoint", "the adjoint module");
  oadj->add_option("--family", family)->required();
  oadj->add_option("--n", n);
  for (auto* s : {osl6, og2, oso, oadj}) addRandomFlags(s, common);

  auto* pl = app.add_subcommand("prelie", "prelie tables and left ideals of U(g)");
  pl->require_subcommand(1);
  auto* pcheck = pl->add_subcommand("check", "prelie identity and induced bracket");
  auto* pround = pl->add_subcommand("roundtrip", "table -> left ideal -> table");
  auto* pprop6 = pl->add_subcommand("prop6", "left ideal / bilateral ideal checks");
  for (auto* s : {pcheck, pround, pprop6}) s->add_option("--table", tablePath, "JSON cubic array")->required()->check(CLI::ExistingFile);
  for (auto* s : {pcheck, pround}) s->add_option("--consts", constsPath, "JSON structure constants")->check(CLI::ExistingFile);
  for (auto* s : {pround, pprop6}) s->add_option("--cap", common.cap, "PBW degree cap");

  auto* dend = app.add_subcommand("dendriform", "shuffle dendriform structure");
  dend->require_subcommand(1);
  auto* dcheck = dend->add_subcommand("check", "axioms, Hopf compatibility and primitives");
  dcheck->add_option("--alphabet", alphabet);
  dcheck->add_option("--maxlen", maxLen);

  auto* rb = app.add_subcommand("repbuild", "matrix bases");
  rb->require_subcommand(1);
  auto* dump = rb->add_subcommand("dump", "print a basis with its validation");
  dump->add_option("--family", family)->required();
  dump->add_option("--n", n);

  auto* verify = app.add_subcommand("verify-paper", "every acceptance claim plus the per-family verdicts");
  addRandomFlags(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Reporter rep(common);
    if (small->parsed()) return smallModulesCmd(rep, family, n);
    if (numer->parsed()) return numerologyCmd(rep, dim, dimsText);
    if (osl6->parsed()) return obstructSl6(rep, common);
    if (og2->parsed()) return obstructG2(rep, common);
    if (oso->parsed()) return obstructSoOdd(rep, common, n);
    if (oadj->parsed()) return obstructAdjoint(rep, common, family, n);
    if (pcheck->parsed()) return prelieCheck(rep, tablePath, constsPath);
    if (pround->parsed()) return prelieRoundtrip(rep, tablePath, constsPath, common.cap);
    if (pprop6->parsed()) return prelieProp6(rep, tablePath, common.cap);
    if (dcheck->parsed()) return dendriformCmd(rep, alphabet, maxLen);
    if (dump->parsed()) return repbuildDump(rep, family, n);
    if (verify->parsed()) return verifyPaper(rep, common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionViolation& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
