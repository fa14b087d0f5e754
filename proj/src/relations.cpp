#include "elemdiff/relations.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "elemdiff/multiindex.hpp"
#include "elemdiff/parallel.hpp"

namespace elemdiff {

namespace {

unsigned resolveThreads(unsigned threads) { return threads ? threads : defaultThreadCount(); }

std::vector<int> identitySlots(int n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

void fillColumns(EvalMatrix& m, std::size_t firstTuple, unsigned threads) {
  const std::size_t d = static_cast<std::size_t>(m.dimension);
  parallelChunks(m.rows.size(), resolveThreads(threads), [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r)
      for (std::size_t t = firstTuple; t < m.tuples.size(); ++t) {
        auto values = valueAtZero(m.rows[r].tree, m.rows[r].slots, std::span<const IntJet>(m.tuples[t]));
        for (std::size_t j = 0; j < d; ++j) m.entries(r, t * d + j) = values[j];
      }
  });
}

}  // namespace

EvalRow EvalRow::plain(const LabelledTree& tree) { return EvalRow{tree, identitySlots(tree.size())}; }

std::string ColumnScheme::describe() const {
  if (kind == Kind::ExhaustiveMonomials) return "exhaustiveMonomials";
  return "randomColumns(tuples=" + std::to_string(tuples) + ",seed=" + std::to_string(seed) +
         ",bound=" + std::to_string(bound) + ")";
}

std::vector<IntJet> randomTuple(std::uint64_t seed, std::size_t index, int inputs, int d, int D, int bound) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t{index} >> 32)};
  std::mt19937_64 rng(seq);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  std::vector<IntJet> out;
  for (int i = 0; i < inputs; ++i) {
    IntJet jet(d, D);
    for (int c = 1; c <= d; ++c) {
      auto& poly = jet.component(c);
      for (int k = 0; k < poly.table().count(); ++k)
        poly.setCoefficientAt(k, static_cast<std::int64_t>(rng() % span) - bound);
    }
    out.push_back(std::move(jet));
  }
  return out;
}

EvalMatrix buildMatrix(std::vector<EvalRow> rows, int inputs, int d, int D, const ColumnScheme& scheme,
                       std::size_t columnCap, unsigned threads) {
  if (rows.empty()) throw ArgumentError("evaluation matrix without rows");
  for (const auto& r : rows) {
    if (!r.tree.isStandard() || static_cast<int>(r.slots.size()) != r.tree.size())
      throw ArgumentError("rows need standard trees and one slot per vertex");
    for (int s : r.slots)
      if (s < 1 || s > inputs) throw ArgumentError("row slot out of range");
  }
  EvalMatrix m;
  m.rows = std::move(rows);
  m.inputs = inputs;
  m.dimension = d;
  m.degree = D;
  m.scheme = scheme;
  if (scheme.kind == ColumnScheme::Kind::RandomColumns) {
    if (scheme.tuples * d > columnCap) throw SizeLimitError("column cap exceeded");
    for (std::size_t t = 0; t < scheme.tuples; ++t)
      m.tuples.push_back(randomTuple(scheme.seed, t, inputs, d, D, scheme.bound));
  } else {
    const auto basis = monomialBasis<std::int64_t>(d, D);
    long double count = std::pow(static_cast<long double>(basis.size()), inputs);
    if (count * d > static_cast<long double>(columnCap)) throw SizeLimitError("column cap exceeded");
    std::vector<std::size_t> idx(inputs, 0);
    while (true) {
      std::vector<IntJet> tuple;
      for (std::size_t i : idx) tuple.push_back(basis[i]);
      m.tuples.push_back(std::move(tuple));
      int pos = inputs - 1;
      while (pos >= 0 && idx[pos] + 1 == basis.size()) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
    m.scheme.tuples = m.tuples.size();
  }
  for (std::size_t t = 0; t < m.tuples.size(); ++t)
    for (int j = 1; j <= d; ++j) m.columns.emplace_back(t, j);
  m.entries = IntMatrix(m.rows.size(), m.columns.size());
  fillColumns(m, 0, threads);
  return m;
}

void extendRandomColumns(EvalMatrix& m, std::size_t extra, unsigned threads) {
  if (m.scheme.kind != ColumnScheme::Kind::RandomColumns) throw ArgumentError("only random schemes can grow");
  const std::size_t first = m.tuples.size();
  for (std::size_t t = first; t < first + extra; ++t) {
    m.tuples.push_back(randomTuple(m.scheme.seed, t, m.inputs, m.dimension, m.degree, m.scheme.bound));
    for (int j = 1; j <= m.dimension; ++j) m.columns.emplace_back(t, j);
  }
  m.scheme.tuples = m.tuples.size();
  IntMatrix grown(m.rows.size(), m.columns.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.entries.cols(); ++c) grown(r, c) = m.entries(r, c);
  m.entries = std::move(grown);
  fillColumns(m, first, threads);
}

Rational recomputeEntry(const EvalMatrix& m, std::size_t row, std::size_t column) {
  auto [tuple, component] = m.columns.at(column);
  std::vector<Jet> jets;
  for (const auto& j : m.tuples.at(tuple)) jets.push_back(toRationalJet(j));
  const auto& r = m.rows.at(row);
  auto out = evalFLabelled(r.tree, std::span<const int>(r.slots), std::span<const Jet>(jets));
  return out.component(component).valueAtZero();
}

namespace {

RankCertificate certificateFromEchelon(const IntMatrix& m, const EchelonResult& ech, const PrimeField& field) {
  RankCertificate cert;
  cert.rank = ech.rank;
  cert.minorRows = ech.pivotRows;
  cert.minorCols = ech.pivotCols;
  std::sort(cert.minorCols.begin(), cert.minorCols.end());
  cert.prime = field.modulus();
  cert.confirmed = cert.rank == 0 || determinantModP(m.submatrix(cert.minorRows, cert.minorCols), field) != 0;
  return cert;
}

RelationBasis liftRelations(const EvalMatrix& m, const EchelonResult& ech, const PrimeField& field) {
  RelationBasis out;
  out.basisRows = ech.pivotRows;
  for (std::size_t i = 0; i < ech.relations.size(); ++i) {
    Relation rel;
    rel.coeffs.assign(m.rows.size(), Rational(0));
    bool ok = true;
    for (std::size_t r = 0; r < m.rows.size() && ok; ++r) {
      const std::uint64_t a = ech.relations[i][r];
      if (a == 0) continue;
      auto q = rationalReconstruct(a, field.modulus());
      if (!q) ok = false;
      else rel.coeffs[r] = *q;
    }
    // Exact check against every sampled column.
    for (std::size_t c = 0; c < m.entries.cols() && ok; ++c) {
      Rational acc = 0;
      for (std::size_t r = 0; r < m.rows.size(); ++r)
        if (rel.coeffs[r] != 0 && m.entries(r, c) != 0) acc += rel.coeffs[r] * static_cast<long>(m.entries(r, c));
      ok = acc == 0;
    }
    if (!ok) {
      out.reconstructed = false;
      continue;
    }
    out.dependentRows.push_back(ech.dependentRows[i]);
    out.relations.push_back(std::move(rel));
  }
  return out;
}

}  // namespace

RankCertificate exactRank(const IntMatrix& m, std::uint64_t prime) {
  PrimeField field(prime);
  return certificateFromEchelon(m, rowEchelonModP(m, field, false), field);
}

RelationBasis nullspaceRows(const EvalMatrix& m, std::uint64_t prime) {
  PrimeField field(prime);
  return liftRelations(m, rowEchelonModP(m.entries, field, true), field);
}

TreeRelation polarize(const std::vector<EvalRow>& rows, const Relation& relation) {
  if (relation.coeffs.size() != rows.size()) throw ArgumentError("relation length differs from row count");
  std::map<LabelledTree, Rational> acc;
  std::optional<std::vector<int>> multiplicities;
  int n = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (relation.coeffs[i] == 0) continue;
    const auto& row = rows[i];
    n = row.tree.size();
    const int ell = *std::max_element(row.slots.begin(), row.slots.end());
    std::vector<int> k(ell, 0);
    for (int s : row.slots) ++k[s - 1];
    while (!k.empty() && k.back() == 0) k.pop_back();
    if (!multiplicities) multiplicities = k;
    else if (*multiplicities != k) throw ArgumentError("relation mixes rows with different label multiplicities");

    // Block of label l occupies slots offset[l]+1 .. offset[l]+k[l].
    std::vector<int> offset(k.size() + 1, 0);
    for (std::size_t l = 0; l < k.size(); ++l) offset[l + 1] = offset[l] + k[l];
    std::vector<int> next(offset.begin(), offset.end() - 1), beta(n);
    for (int v = 1; v <= n; ++v) beta[v - 1] = ++next[row.slots[v - 1] - 1];
    const LabelledTree base = elemdiff::relabel(row.tree, Permutation(beta));

    // Young subgroup: independent permutations of each block.
    std::vector<std::vector<int>> blockPerm;
    for (std::size_t l = 0; l < k.size(); ++l) {
      std::vector<int> b(k[l]);
      std::iota(b.begin(), b.end(), offset[l] + 1);
      blockPerm.push_back(b);
    }
    while (true) {
      std::vector<int> img(n);
      for (std::size_t l = 0; l < k.size(); ++l)
        for (int t = 0; t < k[l]; ++t) img[offset[l] + t] = blockPerm[l][t];
      acc[elemdiff::relabel(base, Permutation(img))] += relation.coeffs[i];
      std::size_t l = 0;
      while (l < k.size()) {
        if (std::next_permutation(blockPerm[l].begin(), blockPerm[l].end())) break;
        ++l;
      }
      if (l == k.size()) break;
    }
  }
  TreeRelation out;
  out.n = n;
  for (auto& [t, c] : acc)
    if (c != 0) out.terms.emplace_back(t, c);
  return out;
}

TreeRelation s2dRelation(int k) {
  if (k < 1 || 2 * k + 1 > kMaxEnumeratedTreeSize) throw SizeLimitError("s_2d relation supports 1 <= d <= 3");
  const int n = 2 * k + 1;
  TreeRelation out;
  out.n = n;
  for (const auto& sigma : allPermutations(2 * k)) {
    std::vector<Vertex> parent(n, kRoot);
    for (int i = 1; i < 2 * k; ++i) parent[sigma(i + 1) - 1] = sigma(i);
    parent[n - 1] = sigma(2 * k);
    out.terms.emplace_back(LabelledTree(parent), Rational(sigma.sign()));
  }
  return out;
}

TreeRelation relabel(const TreeRelation& r, const Permutation& sigma) {
  TreeRelation out;
  out.n = r.n;
  for (const auto& [t, c] : r.terms) out.terms.emplace_back(elemdiff::relabel(t, sigma), c);
  return out;
}

namespace {

struct CompiledTerm {
  std::vector<int> parent;  // 0-based, -1 for the root
  int root = 0;
  __int128 coeff = 0;
};

}  // namespace

CertifyResult certifyIdentity(const TreeRelation& relation, const CertifyOptions& options) {
  const int n = relation.n;
  const int d = options.dimension;
  if (n < 1 || n > kMaxEnumeratedTreeSize) throw SizeLimitError("relation arity out of range");
  if (d < 1 || d > 4) throw SizeLimitError("certification supports 1 <= d <= 4");
  std::map<LabelledTree, Rational> merged;
  for (const auto& [t, c] : relation.terms) {
    if (!t.isStandard() || t.size() != n) throw ArgumentError("relation terms must be standard trees of arity n");
    merged[t] += c;
  }
  BigInt lcm = 1;
  for (const auto& [t, c] : merged) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());

  // Terms bucketed by arity vector: only those can match a tuple's degrees.
  std::map<std::vector<int>, std::vector<CompiledTerm>> buckets;
  for (const auto& [t, c] : merged) {
    if (c == 0) continue;
    BigInt scaled = c.get_num() * (lcm / c.get_den());
    if (!scaled.fits_slong_p()) throw ContractViolation("relation coefficients too large for the sweep");
    CompiledTerm term;
    term.coeff = scaled.get_si();
    for (Vertex p : t.parents()) term.parent.push_back(p - 1);
    term.root = t.root() - 1;
    buckets[projectPi(t).arities()].push_back(std::move(term));
  }

  const int D = n - 1;
  const auto table = MonomialTable::get(d, D);
  const int M = table->count();
  const int fields = d * M;
  std::vector<long> weight(M);
  for (int i = 0; i < M; ++i) {
    long w = 1;
    for (int e : table->exponent(i))
      for (int f = 2; f <= e; ++f) w *= f;
    weight[i] = w;
  }
  auto degreeOf = [&](int field) { return table->totalDegree(field % M); };

  CertifyResult result;
  result.tuplesTotal = 1;
  for (int i = 0; i < n; ++i) result.tuplesTotal *= static_cast<std::uint64_t>(fields);

  // Work items: choices for the first one or two vertices.
  std::vector<std::vector<int>> items;
  const int prefix = n >= 2 ? 2 : 1;
  {
    std::vector<int> cur(prefix);
    auto rec = [&](auto&& self, int pos, int used) -> void {
      if (pos == prefix) {
        items.push_back(cur);
        return;
      }
      for (int f = 0; f < fields; ++f) {
        if (options.prune && used + degreeOf(f) > D) continue;
        cur[pos] = f;
        self(self, pos + 1, used + degreeOf(f));
      }
    };
    rec(rec, 0, 0);
  }

  struct ChunkOutcome {
    std::uint64_t evaluated = 0;
    std::optional<std::vector<int>> witness;
    std::vector<__int128> value;
  };
  const unsigned threads = resolveThreads(options.threads);
  std::vector<ChunkOutcome> outcomes(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(items.size(), 1)));
  std::atomic<bool> found{false};

  parallelChunks(items.size(), static_cast<unsigned>(outcomes.size()), [&](unsigned chunk, std::size_t begin, std::size_t end) {
    auto& out = outcomes[chunk];
    std::vector<int> tuple(n), arity(n);
    std::vector<int> hist(static_cast<std::size_t>(n) * d);
    std::vector<__int128> acc(d);
    auto evaluate = [&]() -> bool {
      ++out.evaluated;
      for (int v = 0; v < n; ++v) arity[v] = degreeOf(tuple[v]);
      auto it = buckets.find(arity);
      if (it == buckets.end()) return false;
      std::fill(acc.begin(), acc.end(), 0);
      for (const auto& term : it->second) {
        std::fill(hist.begin(), hist.end(), 0);
        for (int v = 0; v < n; ++v)
          if (term.parent[v] >= 0) ++hist[term.parent[v] * d + tuple[v] / M];
        bool match = true;
        __int128 value = 1;
        for (int v = 0; v < n && match; ++v) {
          const auto& e = table->exponent(tuple[v] % M);
          for (int i = 0; i < d; ++i)
            if (hist[v * d + i] != e[i]) {
              match = false;
              break;
            }
          value *= weight[tuple[v] % M];
        }
        if (match) acc[tuple[term.root] / M] += term.coeff * value;
      }
      for (int i = 0; i < d; ++i)
        if (acc[i] != 0) return true;
      return false;
    };
    for (std::size_t item = begin; item < end; ++item) {
      const auto& pre = items[item];
      int used = 0;
      for (int i = 0; i < prefix; ++i) {
        tuple[i] = pre[i];
        used += degreeOf(pre[i]);
      }
      bool stop = false;
      auto rec = [&](auto&& self, int pos, int usedDeg) -> void {
        if (stop) return;
        if (pos == n) {
          if (options.prune && usedDeg != D) return;
          if (evaluate() && !out.witness) {
            out.witness = tuple;
            out.value = acc;
            found = true;
            if (options.stopAtWitness) stop = true;
          }
          return;
        }
        for (int f = 0; f < fields && !stop; ++f) {
          if (options.prune && usedDeg + degreeOf(f) > D) continue;
          tuple[pos] = f;
          self(self, pos + 1, usedDeg + degreeOf(f));
        }
      };
      rec(rec, prefix > n ? n : prefix, used);
      if (stop) break;
    }
  });

  for (const auto& o : outcomes) result.tuplesEvaluated += o.evaluated;
  result.holds = true;
  for (const auto& o : outcomes) {
    if (!o.witness) continue;
    result.holds = false;
    std::vector<MonomialField> w;
    for (int f : *o.witness) w.push_back(MonomialField{table->exponent(f % M), f / M + 1});
    result.witness = std::move(w);
    for (__int128 v : o.value) {
      // Values stay far below 2^100; split into two 64-bit halves for GMP.
      const bool negative = v < 0;
      unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      BigInt big = BigInt(static_cast<unsigned long>(mag >> 64));
      big <<= 64;
      big += BigInt(static_cast<unsigned long>(mag & ~std::uint64_t{0}));
      if (negative) big = -big;
      result.witnessValue.push_back(Rational(big, lcm));
      result.witnessValue.back().canonicalize();
    }
    break;
  }
  return result;
}

void checkDeskScale(int d, int n, bool allowLarge) {
  if (d < 1 || n < 1) throw ArgumentError("dimension and arity must be positive");
  if (allowLarge) return;
  const int limit = d == 1 ? 6 : d == 2 ? 5 : 4;
  if (n > limit)
    throw SizeLimitError("desk-scale guard: d=" + std::to_string(d) + " allows n <= " + std::to_string(limit));
}

DimensionResult dimensionOfRows(const std::vector<EvalRow>& rows, int inputs, int d, int n,
                                const DimensionOptions& options) {
  const int D = options.degreeOverride >= 0 ? options.degreeOverride : n - 1;
  const std::size_t rowCount = rows.size();
  const std::size_t dd = static_cast<std::size_t>(d);
  const std::size_t maxTuples = std::max<std::size_t>(1, options.columnBudget / dd);
  std::size_t tuples = std::min(maxTuples, std::max<std::size_t>(1, (3 * rowCount + 2 * dd - 1) / (2 * dd)));
  const std::size_t batch = std::max<std::size_t>(1, (rowCount + 4 * dd - 1) / (4 * dd));

  ColumnScheme scheme;
  scheme.tuples = tuples;
  scheme.seed = options.seed;
  scheme.bound = options.bound;
  PrimeField field(options.prime);
  EvalMatrix m = buildMatrix(rows, inputs, d, D, scheme, options.columnBudget, options.threads);

  std::size_t rank = rowEchelonModP(m.entries, field, false).rank;
  int stable = 0;
  while (rank < rowCount && stable < 2 && m.tuples.size() + batch <= maxTuples) {
    extendRandomColumns(m, batch, options.threads);
    const std::size_t grown = rowEchelonModP(m.entries, field, false).rank;
    stable = grown == rank ? stable + 1 : 0;
    rank = grown;
  }

  const auto ech = rowEchelonModP(m.entries, field, true);
  DimensionResult out;
  out.rows = rowCount;
  out.rank = certificateFromEchelon(m.entries, ech, field);
  out.relations = liftRelations(m, ech, field);
  CertifyOptions copts;
  copts.dimension = d;
  copts.prune = options.prune;
  copts.threads = options.threads;
  std::size_t verified = 0;
  for (auto& rel : out.relations.relations) {
    rel.verified = certifyIdentity(polarize(rows, rel), copts).holds;
    verified += rel.verified;
  }
  out.lowerBound = out.rank.confirmed ? out.rank.rank : 0;
  out.upperBound = rowCount - verified;
  out.dimension = out.lowerBound;
  out.certified = out.lowerBound == out.upperBound;
  out.status = out.certified ? "certified" : "inconclusive";
  out.columns = m.columns.size();
  out.scheme = m.scheme.describe();
  out.seed = options.seed;
  return out;
}

DimensionResult dimensionW(int d, int n, const DimensionOptions& options) {
  checkDeskScale(d, n, options.allowLarge);
  std::vector<EvalRow> rows;
  for (const auto& t : enumerateTrees(n)) rows.push_back(EvalRow::plain(t));
  return dimensionOfRows(rows, n, d, n, options);
}

std::vector<LabelledTree> linearTrees(int n) {
  std::vector<LabelledTree> out;
  for (auto& t : enumerateTrees(n))
    if (isLinear(t)) out.push_back(std::move(t));
  return out;
}

DimensionResult dimensionLW(int d, int n, const DimensionOptions& options) {
  checkDeskScale(d, n, options.allowLarge);
  std::vector<EvalRow> rows;
  for (const auto& t : linearTrees(n)) rows.push_back(EvalRow::plain(t));
  return dimensionOfRows(rows, n, d, n, options);
}

std::vector<std::string> multiIndexOrbits(int n) {
  std::vector<std::string> codes;
  for (const auto& m : enumerateMI(n)) codes.push_back(orbitCode(m));
  std::sort(codes.begin(), codes.end(), std::greater<>());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

BlockBasis blockBasis(int d, int n, const std::string& orbit, const DimensionOptions& options) {
  checkDeskScale(d, n, options.allowLarge);
  BlockBasis out;
  out.orbit = orbit;
  std::vector<EvalRow> rows;
  for (const auto& t : enumerateTrees(n))
    if (orbitCode(projectPi(t)) == orbit) {
      out.members.push_back(t);
      rows.push_back(EvalRow::plain(t));
    }
  if (rows.empty()) throw ArgumentError("no multi-index of arity " + std::to_string(n) + " has orbit code " + orbit);
  out.dimension = dimensionOfRows(rows, n, d, n, options);
  for (std::size_t r : out.dimension.rank.minorRows) out.basis.push_back(out.members[r]);

  // pi_d(F(tau)) = G(pi(tau)) on inputs g_v(x) e_x.
  const int D = n - 1;
  std::mt19937_64 rng(options.seed);
  out.projectionChecked = true;
  for (const auto& t : out.basis) {
    std::vector<Polynomial> scalar;
    std::vector<Jet> embedded;
    for (int v = 0; v < n; ++v) {
      Polynomial g(1, D), lifted(d, D);
      for (int e = 0; e <= D; ++e) {
        Rational c(static_cast<long>(rng() % 7) - 3);
        g.setCoefficientAt(e, c);
        std::vector<int> alpha(d, 0);
        alpha[0] = e;
        lifted.setCoefficientAt(lifted.table().indexOf(alpha), c);
      }
      Jet j(d, D);
      j.component(1) = lifted;
      scalar.push_back(std::move(g));
      embedded.push_back(std::move(j));
    }
    Jet full = evalF(t, std::span<const Jet>(embedded));
    while (full.dimension() > 1) full = full.restrictLastVariable();
    if (!(full.component(1) == evalG(projectPi(t), std::span<const Polynomial>(scalar)))) out.projectionChecked = false;
  }
  return out;
}

TraceResult traceOnSpan(const std::vector<LabelledTree>& rows, const Permutation& sigma, const DimensionResult& span) {
  std::map<LabelledTree, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index[rows[i]] = i;
  std::map<std::size_t, std::size_t> relationOf;
  for (std::size_t i = 0; i < span.relations.dependentRows.size(); ++i) relationOf[span.relations.dependentRows[i]] = i;
  TraceResult out;
  out.dimension = span.dimension;
  out.trace = 0;
  bool allVerified = true;
  for (std::size_t b : span.rank.minorRows) {
    auto it = index.find(elemdiff::relabel(rows[b], sigma));
    if (it == index.end()) throw ContractViolation("row set is not stable under the permutation");
    const std::size_t image = it->second;
    if (image == b) {
      out.trace += 1;
      continue;
    }
    auto rel = relationOf.find(image);
    if (rel == relationOf.end()) {
      if (std::find(span.rank.minorRows.begin(), span.rank.minorRows.end(), image) != span.rank.minorRows.end()) continue;
      throw ContractViolation("image row has no recorded expression in the basis");
    }
    const auto& r = span.relations.relations[rel->second];
    allVerified = allVerified && r.verified;
    out.trace -= r.coeffs[b];
  }
  out.certified = span.certified && allVerified;
  return out;
}

TraceResult traceOnSpan(const std::vector<LabelledTree>& rows, const Permutation& sigma, int d,
                        const DimensionOptions& options) {
  if (rows.empty()) throw ArgumentError("trace over an empty row set");
  const int n = rows[0].size();
  std::map<LabelledTree, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index[rows[i]] = i;
  for (const auto& t : rows)
    if (!index.count(elemdiff::relabel(t, sigma))) throw ContractViolation("row set is not stable under the permutation");
  std::vector<EvalRow> evalRows;
  for (const auto& t : rows) evalRows.push_back(EvalRow::plain(t));
  return traceOnSpan(rows, sigma, dimensionOfRows(evalRows, n, d, n, options));
}

}  // namespace elemdiff
