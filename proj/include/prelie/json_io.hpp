#pragma once
//
// JSON forms for reports and tables. Rationals and polynomials are strings in
// the exactmath text form; matrices are {rows, cols, entries[]} (polynomial
// matrices also carry `arity`); cubic tables are nested arrays t[i][j][k].
//

#include "prelie/catalog.hpp"
#include "prelie/dendriform.hpp"
#include "prelie/prelie.hpp"
#include "prelie/repbuild.hpp"
#include "prelie/verygood.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace prelie {

using Json = nlohmann::ordered_json;

inline Json toJson(const MatQ& m) {
  Json e = Json::array();
  for (const auto& x : m.entries()) e.push_back(x.str());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

inline Json toJson(const MatPolyQ& m) {
  Json e = Json::array();
  for (const auto& x : m.entries()) e.push_back(toString(x));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"arity", m.rows() ? m(0, 0).arity() : 0}, {"entries", e}};
}

inline MatQ matQFromJson(const Json& j) {
  const std::size_t r = j.at("rows"), c = j.at("cols");
  std::vector<Rat> e;
  for (const auto& s : j.at("entries")) e.push_back(Rat::parse(s.get<std::string>()));
  return MatQ(r, c, std::move(e));
}

inline MatPolyQ matPolyFromJson(const Json& j) {
  const std::size_t r = j.at("rows"), c = j.at("cols"), arity = j.at("arity");
  std::vector<PolyQ> e;
  for (const auto& s : j.at("entries")) e.push_back(parsePolyQ(s.get<std::string>(), arity));
  return MatPolyQ(r, c, std::move(e));
}

inline Json toJson(const detail::CubicTable& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < t.dim(); ++k) cell.push_back(t(i, j, k).str());
      row.push_back(cell);
    }
    out.push_back(row);
  }
  return out;
}

/// Reads a d x d x d nested array of rational strings (or integers).
template <class Table>
Table tableFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("cubic table: expected a nonempty array");
  const std::size_t d = j.size();
  Table t(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!j[i].is_array() || j[i].size() != d) throw ParseError("cubic table: row " + std::to_string(i) + " has wrong size");
    for (std::size_t k2 = 0; k2 < d; ++k2) {
      const auto& cell = j[i][k2];
      if (!cell.is_array() || cell.size() != d) throw ParseError("cubic table: cell has wrong size");
      for (std::size_t k = 0; k < d; ++k)
        t(i, k2, k) = cell[k].is_string() ? Rat::parse(cell[k].get<std::string>()) : Rat(cell[k].get<long>());
    }
  }
  return t;
}

inline Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Json toJson(const RankCertificate& c) {
  Json ranks = Json::array();
  for (auto r : c.observedRanks) ranks.push_back(r);
  return {{"rows", c.rows},
          {"cols", c.cols},
          {"claimedMaxRank", c.claimedMaxRank},
          {"trials", c.trials},
          {"prime", std::to_string(c.prime)},
          {"seed", std::to_string(c.seed)},
          {"totalDegreeBound", c.totalDegreeBound},
          {"observedRanks", ranks},
          {"errorBoundLog2", c.errorBoundLog2.str()}};
}

inline Json toJson(const ObstructionReport& r) {
  Json j = {{"algebra", r.algebra.name()},
            {"module", r.moduleDescription},
            {"mapShape", {r.rows, r.cols}},
            {"claimedMaxRank", r.claimedMaxRank},
            {"verdict", verdictName(r.verdict)}};
  if (r.certificate) j["certificate"] = toJson(*r.certificate);
  if (r.exactWitness) j["exactWitness"] = *r.exactWitness;
  if (r.refutation) {
    Json pt = Json::array();
    for (auto v : r.refutation->point) pt.push_back(std::to_string(v));
    j["refutation"] = {{"trial", r.refutation->trialIndex},
                       {"observedRank", r.refutation->observedRank},
                       {"prime", std::to_string(r.refutation->prime)},
                       {"point", pt}};
  }
  return j;
}

inline Json toJson(const SmallModule& m) {
  return {{"weight", m.weight}, {"dim", m.dim}};
}

inline Json toJson(const LieBasis& b) {
  Json ms = Json::array();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Json m = toJson(b.matrices[i]);
    m["label"] = b.labels[i];
    ms.push_back(m);
  }
  return {{"family", b.family.name()}, {"dim", b.dim()}, {"matrices", ms}};
}

inline Json toJson(const AxiomReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json args = Json::array();
    for (const auto& w : x.args) args.push_back(wordString(w));
    v.push_back({{"equation", x.equation}, {"args", args}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  }
  Json counts = Json::object();
  for (std::size_t e = 0; e < r.instances.size(); ++e) counts["eq" + std::to_string(e + 1)] = r.instances[e];
  return {{"instances", counts}, {"violationCount", r.violations.size()}, {"violations", v}};
}

}  // namespace prelie
