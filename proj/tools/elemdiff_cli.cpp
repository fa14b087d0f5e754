// Command line front end. Artifacts go to stdout (or --out); failures print a
// JSON error object to stderr and exit nonzero.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "elemdiff/differentials.hpp"
#include "elemdiff/error.hpp"
#include "elemdiff/groups.hpp"
#include "elemdiff/io.hpp"
#include "elemdiff/labelling.hpp"
#include "elemdiff/modular.hpp"
#include "elemdiff/relations.hpp"

using namespace elemdiff;
using io::Json;

namespace {

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t prime = kDefaultPrime;
  std::size_t columnBudget = 200'000;
  int degree = -1;
  std::string format = "auto";
  std::string out;
  unsigned threads = 0;
  bool experimental = false;

  DimensionOptions dimensionOptions() const {
    if (prime <= (std::uint64_t{1} << 60) || !isPrime64(prime))
      throw ArgumentError("--prime must be a prime larger than 2^60");
    DimensionOptions o;
    o.seed = seed;
    o.prime = prime;
    o.columnBudget = columnBudget;
    o.degreeOverride = degree;
    o.allowLarge = experimental;
    o.threads = threads;
    return o;
  }
};

// Resolved output format; "auto" picks the command's natural one.
std::string formatFor(const RunConfig& cfg, const std::string& natural, std::set<std::string> allowed) {
  std::string f = cfg.format == "auto" ? natural : cfg.format;
  if (!allowed.count(f)) throw ArgumentError("format '" + f + "' is not available for this command");
  return f;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ArgumentError("cannot write '" + cfg.out + "'");
  f << text;
}

void emitJson(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

void emitLines(const RunConfig& cfg, const std::vector<std::string>& lines, const std::string& key) {
  if (formatFor(cfg, "text", {"text", "json"}) == "json") {
    emitJson(cfg, Json{{"count", lines.size()}, {key, lines}});
    return;
  }
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  emit(cfg, text);
}

std::string describeDimension(const DimensionResult& r) {
  std::ostringstream s;
  s << "dimension " << r.dimension << " (" << (r.certified ? "certified" : "uncertified") << ", bounds " << r.lowerBound
    << ".." << r.upperBound << ", rows " << r.rows << ")\n";
  return s.str();
}

void emitDimension(const RunConfig& cfg, const DimensionResult& r, Json extra = Json::object()) {
  if (formatFor(cfg, "json", {"json", "text"}) == "text") return emit(cfg, describeDimension(r));
  Json j = io::toJson(r);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emitJson(cfg, j);
}

std::vector<int> parseCsvInts(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw ArgumentError("");
    } catch (const std::exception&) {
      throw ArgumentError("expected a comma separated integer list, got '" + s + "'");
    }
  }
  return out;
}

int errorStatus(const std::string& kind) {
  if (kind == "argument") return 2;
  if (kind == "size_limit") return 3;
  if (kind == "precondition") return 4;
  return 5;
}

int fail(const std::string& kind, const std::string& message) {
  Json e{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << e.dump() << "\n";
  return errorStatus(kind);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Elementary differentials: trees, multi-indices, identities and representations"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--seed", cfg.seed, "Seed for all random columns");
  app.add_option("--prime", cfg.prime, "Prime for modular elimination (> 2^60)");
  app.add_option("--column-budget", cfg.columnBudget, "Maximum number of sampled columns");
  app.add_option("--degree", cfg.degree, "Override the jet truncation degree");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"auto", "json", "csv", "text"}));
  app.add_option("--out", cfg.out, "Write the artifact to this path");
  app.add_option("--threads", cfg.threads, "Worker threads (default: available parallelism)");
  app.add_flag("--experimental", cfg.experimental, "Allow sizes beyond the desk-scale limits");

  std::function<void()> action;
  auto on = [&](CLI::App* cmd, std::function<void()> f) { cmd->callback([&action, f] { action = f; }); };

  int n = 0, dim = 0, checkDim = 0;
  std::string treeText, miText, inputsPath, relationPath, orbit, labelsText, boundName = "chi_2";
  bool linear = false;

  // trees
  auto* trees = app.add_subcommand("trees", "Standard labelled rooted trees");
  trees->require_subcommand(1);
  auto* treesEnum = trees->add_subcommand("enum", "All trees on [n], one parent array per line");
  treesEnum->add_option("--n", n)->required();
  on(treesEnum, [&] {
    std::vector<std::string> lines;
    for (const auto& t : enumerateTrees(n)) lines.push_back(t.toString());
    emitLines(cfg, lines, "trees");
  });
  auto* treesCanon = trees->add_subcommand("canon", "Distinct canonical codes of trees on [n]");
  treesCanon->add_option("--n", n)->required();
  on(treesCanon, [&] {
    std::set<std::string> codes;
    for (const auto& t : enumerateTrees(n)) codes.insert(canonicalForm(t));
    emitLines(cfg, {codes.begin(), codes.end()}, "codes");
  });

  // multi-indices
  auto* mi = app.add_subcommand("mi", "Multi-indices");
  mi->require_subcommand(1);
  auto* miEnum = mi->add_subcommand("enum", "All multi-indices on [n]");
  miEnum->add_option("--n", n)->required();
  on(miEnum, [&] {
    std::vector<std::string> lines;
    for (const auto& m : enumerateMI(n)) lines.push_back(m.toString());
    emitLines(cfg, lines, "multiIndices");
  });
  auto* miProject = mi->add_subcommand("project", "Multi-index of a tree");
  miProject->add_option("--tree", treeText, "Parent array, e.g. [0,1,1]")->required();
  on(miProject, [&] {
    auto m = projectPi(LabelledTree::parse(treeText));
    if (formatFor(cfg, "json", {"json", "text"}) == "text") return emit(cfg, m.toString() + "\n");
    emitJson(cfg, io::toJson(m));
  });

  // evaluation
  auto* eval = app.add_subcommand("eval", "Evaluate differentials on jets");
  eval->require_subcommand(1);
  auto* fCmd = eval->add_subcommand("f", "F(tree) on one jet per vertex");
  fCmd->add_option("--tree", treeText)->required();
  fCmd->add_option("--inputs", inputsPath, "JSON list of jets")->required();
  fCmd->add_option("--dim", dim)->required();
  on(fCmd, [&] {
    auto tree = LabelledTree::parse(treeText);
    auto jets = io::jetsFromJson(io::readJsonFile(inputsPath));
    for (const auto& j : jets)
      if (j.dimension() != dim) throw ArgumentError("input jets do not have dimension --dim");
    formatFor(cfg, "json", {"json"});
    emitJson(cfg, io::toJson(evalF(tree, std::span<const Jet>(jets))));
  });
  auto* gCmd = eval->add_subcommand("g", "G(multi-index) on one-dimensional jets");
  gCmd->add_option("--mi", miText)->required();
  gCmd->add_option("--inputs", inputsPath, "JSON list of jets with d = 1")->required();
  on(gCmd, [&] {
    auto m = MultiIndex::parse(miText);
    auto jets = io::jetsFromJson(io::readJsonFile(inputsPath));
    std::vector<Polynomial> polys;
    for (const auto& j : jets) {
      if (j.dimension() != 1) throw ArgumentError("G takes one-dimensional inputs");
      polys.push_back(j.component(1));
    }
    formatFor(cfg, "json", {"json"});
    emitJson(cfg, io::toJson(Jet(std::vector<Polynomial>{evalG(m, std::span<const Polynomial>(polys))})));
  });

  // dimensions
  auto* dimCmd = app.add_subcommand("dim", "Certified dimensions");
  dimCmd->require_subcommand(1);
  auto* dimW = dimCmd->add_subcommand("w", "dim W_d(n), or its linear / labelled variants");
  dimW->add_option("--dim", dim)->required();
  dimW->add_option("--n", n)->required();
  dimW->add_flag("--linear", linear, "Span of linear trees only");
  dimW->add_option("--labels", labelsText, "Label multiplicities k1,k2,...");
  on(dimW, [&] {
    auto options = cfg.dimensionOptions();
    if (linear && !labelsText.empty()) throw ArgumentError("--linear and --labels are exclusive");
    if (!labelsText.empty()) {
      auto k = parseCsvInts(labelsText);
      return emitDimension(cfg, dimensionLabelled(dim, n, k, options), Json{{"multiplicities", k}});
    }
    emitDimension(cfg, linear ? dimensionLW(dim, n, options) : dimensionW(dim, n, options));
  });

  // identities
  auto* identity = app.add_subcommand("identity", "Exhaustive identity certification");
  identity->require_subcommand(1);
  auto* s2d = identity->add_subcommand("s2d", "Certify the standard identity s_2d");
  s2d->add_option("--dim", dim, "Arity parameter d (2d+1 inputs)")->required();
  s2d->add_option("--check-dim", checkDim, "Dimension to check in (default: --dim)");
  auto certifyAndEmit = [&](const TreeRelation& rel, int checkIn, Json extra) {
    CertifyOptions o;
    o.dimension = checkIn;
    o.threads = cfg.threads;
    auto r = certifyIdentity(rel, o);
    if (formatFor(cfg, "json", {"json", "text"}) == "text")
      return emit(cfg, std::string(r.holds ? "holds" : "fails") + " (" + std::to_string(r.tuplesEvaluated) + " of " +
                           std::to_string(r.tuplesTotal) + " tuples evaluated)\n");
    Json j = extra;
    const Json body = io::toJson(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    emitJson(cfg, j);
  };
  on(s2d, [&] {
    int in = checkDim ? checkDim : dim;
    auto rel = s2dRelation(dim);
    certifyAndEmit(rel, in, Json{{"identity", "s_" + std::to_string(2 * dim)}, {"dimension", in}, {"terms", rel.terms.size()}});
  });
  auto* certify = identity->add_subcommand("certify", "Certify a relation read from JSON");
  certify->add_option("--relation", relationPath)->required();
  certify->add_option("--dim", dim, "Dimension to check in")->required();
  on(certify, [&] {
    auto rel = io::relationFromJson(io::readJsonFile(relationPath));
    certifyAndEmit(rel, dim, Json{{"dimension", dim}, {"terms", rel.terms.size()}});
  });

  // characters
  auto* chr = app.add_subcommand("char", "Characters");
  chr->require_subcommand(1);
  auto* table = chr->add_subcommand("table", "Permutation characters on trees (and V, W_2 at n = 5)");
  table->add_option("--n", n)->required();
  on(table, [&] {
    std::vector<CharacterRow> rows{chiInfinity(n)};
    if (n == 5) {
      rows.push_back(chiV(2));
      rows.push_back(chi2());
    }
    if (formatFor(cfg, "csv", {"csv", "json"}) == "csv") return emit(cfg, io::characterCsv(rows));
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(Json{{"name", r.name}, {"values", r.values}});
    emitJson(cfg, j);
  });

  // groups
  auto* groups = app.add_subcommand("groups", "Subgroups of S_n");
  groups->require_subcommand(1);
  auto* subgroups = groups->add_subcommand("subgroups", "Conjugacy classes of subgroups");
  subgroups->add_option("--n", n)->required();
  on(subgroups, [&] {
    formatFor(cfg, "json", {"json"});
    Json j = Json::array();
    for (const auto& g : subgroupClasses(n)) j.push_back(io::toJson(g));
    emitJson(cfg, Json{{"count", j.size()}, {"classes", j}});
  });
  auto* scan = groups->add_subcommand("scan", "Transitive-orbit constraint scan over subgroups of S_5");
  scan->add_option("--bound", boundName, "Bounding character")->check(CLI::IsMember({"chi_2", "chi_inf"}));
  on(scan, [&] {
    formatFor(cfg, "json", {"json"});
    emitJson(cfg, io::toJson(constraintScan(boundName == "chi_2" ? chi2() : chiInfinity(5))));
  });

  // blocks
  auto* block = app.add_subcommand("block", "Multi-index blocks");
  block->require_subcommand(1);
  auto* basis = block->add_subcommand("basis", "Basis of the block over one multi-index orbit");
  basis->add_option("--dim", dim)->required();
  basis->add_option("--n", n)->required();
  basis->add_option("--mi-orbit", orbit, "Orbit code, e.g. 2,1,0,0")->required();
  on(basis, [&] {
    formatFor(cfg, "json", {"json"});
    emitJson(cfg, io::toJson(blockBasis(dim, n, orbit, cfg.dimensionOptions())));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("argument", e.what());
  }
  try {
    action();
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
  return 0;
}
