#include "elemdiff/io.hpp"

#include <fstream>
#include <sstream>

#include "elemdiff/error.hpp"

namespace elemdiff::io {

namespace {

std::string exponentKey(const std::vector<int>& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
  return s;
}

std::vector<int> parseExponentKey(const std::string& key) {
  std::vector<int> alpha;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      int e = std::stoi(part, &used);
      if (used != part.size() || e < 0) throw ArgumentError("");
      alpha.push_back(e);
    } catch (const std::exception&) {
      throw ArgumentError("bad monomial exponent key '" + key + "'");
    }
  }
  return alpha;
}

Rational coeffFromJson(const Json& v) {
  if (v.is_string()) return parseRational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw ArgumentError("coefficients must be integers or \"p/q\" strings");
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json sizes(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace

Json toJson(const LabelledTree& tree) {
  Json j;
  j["n"] = tree.size();
  if (!tree.isStandard()) j["vertices"] = tree.vertices();
  j["parent"] = tree.parents();
  return j;
}

LabelledTree treeFromJson(const Json& j) {
  if (j.is_string()) return LabelledTree::parse(j.get<std::string>());
  return guarded("tree", [&] {
    auto parent = j.at("parent").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(parent.size()))
      throw ArgumentError("tree JSON: n differs from the parent array length");
    if (j.contains("vertices")) return LabelledTree(j.at("vertices").get<std::vector<int>>(), std::move(parent));
    return LabelledTree(std::move(parent));
  });
}

Json toJson(const MultiIndex& m) {
  Json j;
  j["n"] = m.size();
  j["arity"] = m.arities();
  return j;
}

MultiIndex multiIndexFromJson(const Json& j) {
  if (j.is_string()) return MultiIndex::parse(j.get<std::string>());
  return guarded("multi-index", [&] {
    auto arity = j.at("arity").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(arity.size()))
      throw ArgumentError("multi-index JSON: n differs from the arity length");
    return MultiIndex(std::move(arity));
  });
}

Json toJson(const Jet& jet) {
  Json j;
  j["d"] = jet.dimension();
  j["D"] = jet.degree();
  Json comps = Json::array();
  for (const auto& c : jet.components()) {
    Json obj = Json::object();
    for (int i = 0; i < c.table().count(); ++i)
      if (c.coefficientAt(i) != 0) obj[exponentKey(c.table().exponent(i))] = toString(c.coefficientAt(i));
    comps.push_back(std::move(obj));
  }
  j["components"] = std::move(comps);
  return j;
}

Jet jetFromJson(const Json& j) {
  return guarded("jet", [&] {
    const int d = j.at("d").get<int>();
    const int D = j.at("D").get<int>();
    const auto& comps = j.at("components");
    if (!comps.is_array() || static_cast<int>(comps.size()) != d)
      throw ArgumentError("jet JSON needs exactly d components");
    Jet jet(d, D);
    for (int k = 1; k <= d; ++k) {
      for (const auto& [key, value] : comps[k - 1].items()) {
        auto alpha = parseExponentKey(key);
        if (static_cast<int>(alpha.size()) != d) throw ArgumentError("exponent key '" + key + "' needs d entries");
        int idx = jet.component(k).table().indexOf(alpha);
        if (idx < 0) throw ArgumentError("monomial '" + key + "' exceeds the truncation degree");
        jet.component(k).setCoefficientAt(idx, coeffFromJson(value));
      }
    }
    return jet;
  });
}

std::vector<Jet> jetsFromJson(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("jets")) list = &j.at("jets");
  if (!list->is_array()) return {jetFromJson(j)};
  std::vector<Jet> out;
  for (const auto& e : *list) out.push_back(jetFromJson(e));
  return out;
}

Json toJson(const TreeRelation& r) {
  Json j;
  j["n"] = r.n;
  Json terms = Json::array();
  for (const auto& [tree, coeff] : r.terms) {
    Json t;
    t["tree"] = toJson(tree);
    t["coeff"] = toString(coeff);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

TreeRelation relationFromJson(const Json& j) {
  return guarded("relation", [&] {
    TreeRelation r;
    r.n = j.at("n").get<int>();
    for (const auto& t : j.at("terms")) {
      auto tree = treeFromJson(t.at("tree"));
      if (tree.size() != r.n || !tree.isStandard()) throw ArgumentError("relation terms must be standard trees on [n]");
      r.terms.emplace_back(std::move(tree), coeffFromJson(t.at("coeff")));
    }
    return r;
  });
}

Json toJson(const RankCertificate& c) {
  Json j;
  j["rank"] = c.rank;
  j["minorRows"] = sizes(c.minorRows);
  j["minorCols"] = sizes(c.minorCols);
  j["prime"] = c.prime;
  j["confirmed"] = c.confirmed;
  return j;
}

Json toJson(const DimensionResult& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["certified"] = r.certified;
  j["status"] = r.status;
  j["rows"] = r.rows;
  j["lowerBound"] = r.lowerBound;
  j["upperBound"] = r.upperBound;
  j["rank"] = r.rank.rank;
  j["minorRows"] = sizes(r.rank.minorRows);
  j["minorCols"] = sizes(r.rank.minorCols);
  j["prime"] = r.rank.prime;
  j["minorConfirmed"] = r.rank.confirmed;
  Json rels = Json::array();
  for (const auto& rel : r.relations.relations) {
    Json e;
    Json coeffs = Json::array();
    for (const auto& c : rel.coeffs) coeffs.push_back(toString(c));
    e["coeffs"] = std::move(coeffs);
    e["verified"] = rel.verified;
    rels.push_back(std::move(e));
  }
  j["relations"] = std::move(rels);
  j["seed"] = r.seed;
  j["scheme"] = r.scheme;
  j["columns"] = r.columns;
  return j;
}

Json toJson(const CertifyResult& r) {
  Json j;
  j["holds"] = r.holds;
  j["tuplesTotal"] = r.tuplesTotal;
  j["tuplesEvaluated"] = r.tuplesEvaluated;
  if (r.witness) {
    Json w = Json::array();
    for (const auto& f : *r.witness) w.push_back(Json{{"alpha", f.alpha}, {"component", f.component}});
    j["witness"] = std::move(w);
    Json v = Json::array();
    for (const auto& c : r.witnessValue) v.push_back(toString(c));
    j["witnessValue"] = std::move(v);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json toJson(const LabelledObject& o) {
  Json j;
  j["base"] = toJson(o.base);
  j["labels"] = o.labels;
  j["multiplicities"] = o.multiplicities();
  return j;
}

Json toJson(const BlockBasis& b) {
  Json j;
  j["orbit"] = b.orbit;
  j["members"] = b.members.size();
  Json basis = Json::array();
  for (const auto& t : b.basis) basis.push_back(t.toString());
  j["basis"] = std::move(basis);
  j["projectionChecked"] = b.projectionChecked;
  j["dimension"] = toJson(b.dimension);
  return j;
}

Json toJson(const SubgroupClass& g) {
  Json j;
  j["order"] = g.order;
  j["conjugates"] = g.conjugates;
  j["orbits"] = g.orbits;
  Json gens = Json::array();
  for (const auto& p : g.generators) gens.push_back(p.cycleString());
  j["generators"] = std::move(gens);
  return j;
}

Json toJson(const ScanReport& report) {
  Json j;
  j["bound"] = report.bound.name;
  Json classes = Json::array();
  for (const auto& c : report.bound.classes) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    classes.push_back(s);
  }
  j["classes"] = std::move(classes);
  j["boundValues"] = report.bound.values;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json x = toJson(e.group);
    x["character"] = e.character.values;
    x["belowBound"] = e.belowBound;
    x["equalOnSquareClass"] = e.equalOnSquareClass;
    x["vanishes"] = e.vanishes;
    x["survives"] = e.survives;
    if (e.survives) {
      x["finalLhs"] = e.finalLhs;
      x["finalRhs"] = e.finalRhs;
      x["contradiction"] = e.contradiction;
    }
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["survivors"] = report.survivors;
  return j;
}

std::string characterCsv(const std::vector<CharacterRow>& rows) {
  if (rows.empty()) return "";
  std::ostringstream out;
  out << "character";
  for (const auto& c : rows.front().classes) {
    // shortest cycles first, matching (1 2)(3 4 5)
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : std::vector<int>(c.rbegin(), c.rend())) {
      if (len == 1) continue;
      std::vector<int> cyc;
      for (int i = 0; i < len; ++i) cyc.push_back(next++);
      cycles.push_back(cyc);
    }
    out << ',' << Permutation::fromCycles(rows.front().n, cycles).cycleString();
  }
  out << '\n';
  for (const auto& r : rows) {
    out << r.name;
    for (auto v : r.values) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace elemdiff::io
