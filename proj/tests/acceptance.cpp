// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "elemdiff/differentials.hpp"
#include "elemdiff/groups.hpp"
#include "elemdiff/io.hpp"
#include "elemdiff/labelling.hpp"
#include "elemdiff/relations.hpp"
#include "support.hpp"

using namespace elemdiff;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::cout << id << ' ' << (ok ? "PASS" : "FAIL") << ": " << detail << std::endl;
  failures += !ok;
}

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

std::string join(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// ---------------------------------------------------------------- AC1
void ac1() {
  auto t0 = Clock::now();
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 5; ++n) counts.push_back(enumerateTrees(n).size());
  double s = since(t0);
  bool ok = counts == std::vector<std::size_t>{1, 2, 9, 64, 625} && s < 1.0;
  report("AC1", ok, "|RT(1..5)| = " + std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "," +
                        std::to_string(counts[2]) + "," + std::to_string(counts[3]) + "," + std::to_string(counts[4]) +
                        " in " + seconds(s));
}

// ---------------------------------------------------------------- AC2, AC3
std::vector<Rational> denseRelation(const TreeRelation& r, const std::map<LabelledTree, std::size_t>& index) {
  std::vector<Rational> v(index.size());
  for (const auto& [t, c] : r.terms) v[index.at(t)] += c;
  return v;
}

void ac2and3(const DimensionResult& w, double elapsed) {
  bool ok2 = w.dimension == 620 && w.certified && w.lowerBound == 620 && w.upperBound == 620 && w.rank.confirmed &&
             w.rank.minorRows.size() == 620 && w.rank.minorCols.size() == 620 && w.relations.relations.size() == 5;
  for (const auto& r : w.relations.relations) ok2 = ok2 && r.verified;
  report("AC2", ok2, "dim W_2(5) = " + std::to_string(w.dimension) + ", minor " + std::to_string(w.rank.minorRows.size()) +
                         "x" + std::to_string(w.rank.minorCols.size()) + " confirmed=" + (w.rank.confirmed ? "yes" : "no") +
                         ", certified relations " + std::to_string(w.upperBound == 620 ? 5 : 625 - w.upperBound) +
                         ", " + std::to_string(w.columns) + " columns, " + seconds(elapsed));

  // Nullspace vs span of the permuted s_4.
  auto trees = enumerateTrees(5);
  std::map<LabelledTree, std::size_t> index;
  for (std::size_t i = 0; i < trees.size(); ++i) index[trees[i]] = i;
  const auto& basis = w.relations;
  const auto s4 = s2dRelation(2);
  std::set<std::vector<Rational>> images;
  for (const auto& s : allPermutations(5)) images.insert(denseRelation(relabel(s4, s), index));
  // membership: a vector lies in the reduced basis span iff it equals its own
  // combination read off the dependent coordinates
  bool inside = true;
  for (const auto& v : images) {
    std::vector<Rational> combo(625);
    for (std::size_t i = 0; i < basis.relations.size(); ++i) {
      const Rational& c = v[basis.dependentRows[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < 625; ++j) combo[j] += c * basis.relations[i].coeffs[j];
    }
    inside = inside && combo == v;
  }
  IntMatrix m(images.size(), 625);
  std::size_t r = 0;
  for (const auto& v : images) {
    for (std::size_t j = 0; j < 625; ++j) m(r, j) = v[j].get_num().get_si();
    ++r;
  }
  const std::size_t spanRank = bareissRank(m);
  bool ok3 = basis.relations.size() == 5 && spanRank == 5 && inside;
  report("AC3", ok3, "nullspace dimension " + std::to_string(basis.relations.size()) + ", rank of permuted s_4 span " +
                         std::to_string(spanRank) + " (exact), all permutations inside nullspace: " + (inside ? "yes" : "no"));
}

// ---------------------------------------------------------------- AC4
void ac4() {
  CertifyOptions o;
  o.dimension = 1;
  auto s2 = certifyIdentity(s2dRelation(1), o);
  o.dimension = 2;
  auto s4 = certifyIdentity(s2dRelation(2), o);
  o.dimension = 3;
  auto s4d3 = certifyIdentity(s2dRelation(2), o);
  bool witnessOk = false;
  std::string witnessText = "none";
  if (s4d3.witness) {
    std::vector<Jet> jets;
    witnessText.clear();
    for (const auto& f : *s4d3.witness) {
      jets.push_back(Jet::monomialField(3, 4, f.alpha, f.component));
      witnessText += "x^(";
      for (std::size_t i = 0; i < f.alpha.size(); ++i) witnessText += (i ? "," : "") + std::to_string(f.alpha[i]);
      witnessText += ")e" + std::to_string(f.component) + " ";
    }
    auto direct = s2d(2, std::span<const Jet>(jets)).valueAtZero();
    witnessOk = direct == s4d3.witnessValue && std::any_of(direct.begin(), direct.end(), [](const Rational& q) { return q != 0; });
  }
  bool ok = s2.holds && s4.holds && !s4d3.holds && witnessOk;
  report("AC4", ok, std::string("s_2 in d=1: ") + (s2.holds ? "identity" : "not identity") + "; s_4 in d=2: " +
                        (s4.holds ? "identity" : "not identity") + " (" + std::to_string(s4.tuplesEvaluated) + " of " +
                        std::to_string(s4.tuplesTotal) + " tuples after homogeneity pruning); s_4 in d=3: " +
                        (s4d3.holds ? "identity" : "not identity") + ", witness " + witnessText + "re-evaluated " +
                        (witnessOk ? "nonzero" : "MISMATCH"));
}

// ---------------------------------------------------------------- AC5
void ac5(const DimensionResult& w) {
  const std::vector<long long> paperInf{625, 27, 4, 3, 1, 0, 0}, paperV{5, -3, 2, 1, -1, 0, 0},
      paper2{620, 30, 2, 2, 2, 0, 0};
  auto inf = chiInfinity(5);
  auto v = chiV(2);
  auto two = chi2();
  int agree = 0;
  std::string mismatches;
  auto compare = [&](const CharacterRow& got, const std::vector<long long>& want) {
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (got.values[i] == want[i]) {
        ++agree;
        continue;
      }
      mismatches += " " + got.name + "[" + std::to_string(i + 1) + "] = " + std::to_string(got.values[i]) + " vs " +
                    std::to_string(want[i]) + ";";
    }
  };
  compare(inf, paperInf);
  compare(v, paperV);
  compare(two, paper2);
  // independent cross-check of chi_2 by traces on the certified span
  auto trace = traceOnSpan(enumerateTrees(5), Permutation::fromCycles(5, {{1, 2, 3}}), w);
  bool crossOk = trace.certified && trace.trace == static_cast<long>(two.at(CycleType{3, 1, 1}));
  auto traceSquares = traceOnSpan(enumerateTrees(5), Permutation::fromCycles(5, {{1, 2}, {3, 4}}), w);
  bool ok = agree == 21 && crossOk;
  report("AC5", ok, std::to_string(agree) + "/21 entries agree; computed chi_inf=" + join(inf.values) + " chi_V=" +
                        join(v.values) + " chi_2=" + join(two.values) + "; trace of (1 2 3) on W_2(5) = " +
                        toString(trace.trace) + ", of (1 2)(3 4) = " + toString(traceSquares.trace) +
                        (mismatches.empty() ? "" : "; mismatches:" + mismatches));
}

// ---------------------------------------------------------------- AC6
void ac6() {
  auto lw = dimensionLW(2, 5);
  auto t = traceOnSpan(linearTrees(5), Permutation::fromCycles(5, {{1, 2, 3}}), lw);
  bool ok = lw.certified && lw.dimension == 115 && t.certified && t.trace == -2;
  report("AC6", ok, "dim LW_2(5) = " + std::to_string(lw.dimension) + (lw.certified ? " (certified)" : " (uncertified)") +
                        ", trace of (1 2 3) = " + toString(t.trace));
}

// ---------------------------------------------------------------- AC7
void ac7() {
  auto t0 = Clock::now();
  auto classes = subgroupClasses(5);
  auto scan = constraintScan();
  double s = since(t0);
  std::string survivors;
  bool onlyS4 = scan.survivors.size() == 1;
  bool contradiction = false;
  for (auto i : scan.survivors) {
    const auto& e = scan.entries[i];
    bool natural = e.group.order == 24 && e.character.values == std::vector<long long>{5, 3, 2, 1, 1, 0, 0};
    onlyS4 = onlyS4 && natural;
    if (natural) contradiction = e.contradiction && e.finalLhs == 4 && e.finalRhs == 2;
    survivors += " [order " + std::to_string(e.group.order) + ", orbits " + e.group.orbits + ", chi=" +
                 join(e.character.values) + ", 2chi((1 2 3))=" + std::to_string(e.finalLhs) + " vs " +
                 std::to_string(e.finalRhs) + (e.contradiction ? " contradiction" : " no contradiction") + "]";
  }
  // same scan bounded by the printed chi_2 row instead of the computed one
  auto printed = chi2();
  printed.values = {620, 30, 2, 2, 2, 0, 0};
  auto control = constraintScan(printed);
  std::string orders;
  for (auto i : control.survivors) orders += (orders.empty() ? "" : ",") + std::to_string(control.entries[i].group.order);
  bool ok = classes.size() == 19 && onlyS4 && contradiction && s < 10.0;
  report("AC7", ok, std::to_string(classes.size()) + " subgroup classes; " + std::to_string(scan.survivors.size()) +
                        " survivor(s):" + survivors + "; against the printed chi_2 row the survivor orders are {" +
                        orders + "}; " + seconds(s));
}

// ---------------------------------------------------------------- AC8
LabelledTree onVertices(const LabelledTree& t, const std::vector<int>& verts) {
  std::vector<int> parent;
  for (int p : t.parents()) parent.push_back(p == kRoot ? kRoot : verts[p - 1]);
  return LabelledTree(verts, parent);
}

std::vector<LabelledTree> sampleTrees(const std::vector<LabelledTree>& all, std::mt19937_64& rng, std::size_t count) {
  std::vector<LabelledTree> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(all[rng() % all.size()]);
  return out;
}

bool factorization(std::mt19937_64& rng) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerateTrees(n);
    auto trees = n <= 4 ? all : sampleTrees(all, rng, 40);
    for (int rep = 0; rep < 3; ++rep) {
      auto jets = testing::randomJets(rng, n, 1, n - 1);
      std::vector<Polynomial> p;
      for (const auto& j : jets) p.push_back(j.component(1));
      for (const auto& t : trees)
        ok = ok && evalF(t, std::span<const Jet>(jets)).component(1) == evalG(projectPi(t), std::span<const Polynomial>(p));
    }
  }
  return ok;
}

bool preLieSuite(std::mt19937_64& rng) {
  bool ok = true;
  for (int d = 1; d <= 3; ++d)
    for (int rep = 0; rep < 5; ++rep) {
      auto f = testing::randomJet(rng, d, 6, 4, 2), g = testing::randomJet(rng, d, 6, 4, 2), h = testing::randomJet(rng, d, 6, 4, 2);
      ok = ok && preLie(f, preLie(g, h)) - preLie(preLie(f, g), h) == preLie(f, preLie(h, g)) - preLie(preLie(f, h), g);
    }
  return ok;
}

bool morphism(std::mt19937_64& rng) {
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    const int D = 2 * n;  // inputs of degree <= 2 keep every product below D
    auto jets = testing::randomJets(rng, n, 2, D, 4, 2);
    for (int k = 1; k < n; ++k) {
      std::vector<int> a, b;
      for (int v = 1; v <= n; ++v) (v <= k ? a : b).push_back(v);
      auto sig = enumerateTrees(k), tau = enumerateTrees(n - k);
      if (n == 5) {
        sig = sampleTrees(sig, rng, 4);
        tau = sampleTrees(tau, rng, 4);
      }
      std::vector<Jet> ja(jets.begin(), jets.begin() + k), jb(jets.begin() + k, jets.end());
      for (const auto& s0 : sig)
        for (const auto& t0 : tau) {
          auto s = onVertices(s0, a), t = onVertices(t0, b);
          Jet lhs(2, D);
          for (const auto& g : graftSum(s, t)) lhs += evalF(g, std::span<const Jet>(jets));
          ok = ok && lhs == preLie(evalF(t, std::span<const Jet>(jb)), evalF(s, std::span<const Jet>(ja)));
        }
    }
  }
  return ok;
}

bool roundTrip(std::mt19937_64& rng) {
  bool ok = true;
  auto check = [&](const LabelledTree& a, const LabelledTree& b) {
    auto r = retarget(a, findSigma(a, b));
    ok = ok && r.isTree && *r.tree == b;
  };
  for (int n = 1; n <= 4; ++n) {
    auto trees = enumerateTrees(n);
    for (const auto& a : trees)
      for (const auto& b : trees)
        if (projectPi(a) == projectPi(b)) check(a, b);
  }
  auto five = enumerateTrees(5);
  std::map<MultiIndex, std::vector<LabelledTree>> byMi;
  for (const auto& t : five) byMi[projectPi(t)].push_back(t);
  for (int rep = 0; rep < 200; ++rep) {
    const auto& group = std::next(byMi.begin(), rng() % byMi.size())->second;
    check(group[rng() % group.size()], group[rng() % group.size()]);
  }
  return ok;
}

// Some vertex whose children sigma moves carries a witness separating F(tau)
// from F(sigma.tau).
bool geofixed(std::mt19937_64& rng) {
  bool ok = true;
  std::size_t cases = 0;
  for (int n = 2; n <= 5; ++n) {
    auto all = enumerateTrees(n);
    auto trees = n <= 4 ? all : sampleTrees(all, rng, 40);
    auto perms = allPermutations(n);
    for (const auto& t : trees) {
      std::vector<std::vector<IntJet>> witness(n + 1);
      for (Vertex v = 1; v <= n; ++v)
        if (!t.children(v).empty())
          for (const auto& j : geofixedWitness(t, v)) witness[v].push_back(toIntJet(j));
      for (const auto& s : perms) {
        auto r = retarget(t, s);
        if (!r.isTree || *r.tree == t) continue;
        ++cases;
        bool separated = false;
        for (Vertex v = 1; v <= n && !separated; ++v) {
          auto kids = t.children(v);
          if (kids.empty()) continue;
          std::vector<Vertex> moved;
          for (Vertex c : kids) moved.push_back(s(c));
          std::sort(moved.begin(), moved.end());
          if (moved == kids) continue;
          separated = !(evalF(*r.tree, std::span<const IntJet>(witness[v])) == evalF(t, std::span<const IntJet>(witness[v])));
        }
        ok = ok && separated;
      }
    }
  }
  return ok && cases > 0;
}

bool commutingSquare(std::mt19937_64& rng) {
  bool ok = true;
  auto f = testing::randomJets(rng, 2, 2, 3);
  for (int code = 0; code < 8; ++code) {
    std::vector<int> phi{1 + (code & 1), 1 + (code >> 1 & 1), 1 + (code >> 2 & 1)};
    std::vector<Jet> pulled;
    for (int i = 0; i < 3; ++i) pulled.push_back(f[phi[i] - 1]);
    for (const auto& t : enumerateTrees(4))
      for (int mask = 0; mask < 81; ++mask) {
        std::vector<int> labels, mapped;
        for (int v = 0, m = mask; v < 4; ++v, m /= 3) labels.push_back(1 + m % 3);
        for (int l : labels) mapped.push_back(phi[l - 1]);
        auto obj = identify(phi, 2, canonicalizeLabelled(t, labels, 3));
        auto lhs = evalFLabelled(t, labels, std::span<const Jet>(pulled));
        ok = ok && lhs == evalFLabelled(obj.base, obj.labels, std::span<const Jet>(f)) &&
             lhs == evalFLabelled(t, mapped, std::span<const Jet>(f));
      }
  }
  return ok;
}

bool equivarianceAndDualBasis(std::mt19937_64& rng) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerateTrees(n);
    auto trees = n <= 4 ? all : sampleTrees(all, rng, 10);
    auto perms = allPermutations(n);
    auto jets = testing::randomJets(rng, n, 2, n - 1);
    for (const auto& t : trees)
      for (const auto& s : perms) {
        if (n == 5 && rng() % 10) continue;
        std::vector<Jet> moved;
        for (int v = 1; v <= n; ++v) moved.push_back(jets[s(v) - 1]);
        ok = ok && evalF(relabel(t, s), std::span<const Jet>(jets)) == evalF(t, std::span<const Jet>(moved));
      }
    auto mis = enumerateMI(n);
    for (const auto& m : mis) {
      std::vector<Polynomial> inputs;
      for (int v = 1; v <= n; ++v) {
        Rational c = 1;
        for (int k = 2; k <= m.arity(v); ++k) c /= k;
        inputs.push_back(Polynomial::monomial(1, n - 1, std::vector<int>{m.arity(v)}, c));
      }
      for (const auto& other : mis)
        ok = ok && evalG(other, std::span<const Polynomial>(inputs)).valueAtZero() == Rational(other == m ? 1 : 0);
    }
  }
  return ok;
}

void ac8() {
  std::mt19937_64 rng(kDefaultSeed);
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, bool>> parts{
      {"F=G.pi", factorization(rng)},           {"pre-Lie", preLieSuite(rng)},
      {"morphism", morphism(rng)},              {"findSigma", roundTrip(rng)},
      {"geofixed", geofixed(rng)},              {"identification square", commutingSquare(rng)},
      {"equivariance+dual basis", equivarianceAndDualBasis(rng)}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, pass] : parts) {
    ok = ok && pass;
    detail += name + (pass ? " ok; " : " FAILED; ");
  }
  report("AC8", ok, detail + seconds(since(t0)));
}

// ---------------------------------------------------------------- AC9
void ac9(const DimensionResult& first) {
  DimensionOptions o;
  o.threads = 1;  // different worker count, same seed
  auto second = dimensionW(2, 5, o);
  auto a = io::toJson(first).dump(), b = io::toJson(second).dump();
  auto tableA = io::characterCsv({chiInfinity(5), chiV(2), chi2()});
  auto tableB = io::characterCsv({chiInfinity(5), chiV(2), chi2()});
  auto scanA = io::toJson(constraintScan()).dump(), scanB = io::toJson(constraintScan()).dump();
  bool ok = a == b && tableA == tableB && scanA == scanB;
  report("AC9", ok, "certificate " + std::to_string(a.size()) + " bytes " + (a == b ? "identical" : "DIFFERENT") +
                        ", character table " + (tableA == tableB ? "identical" : "DIFFERENT") + ", scan report " +
                        (scanA == scanB ? "identical" : "DIFFERENT"));
}

}  // namespace

int main() {
  ac1();
  auto t0 = Clock::now();
  auto w = dimensionW(2, 5);
  double elapsed = since(t0);
  ac2and3(w, elapsed);
  ac4();
  ac5(w);
  ac6();
  ac7();
  ac8();
  ac9(w);
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria passed") << std::endl;
  return failures;
}
