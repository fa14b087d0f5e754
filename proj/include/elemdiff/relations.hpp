#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elemdiff/differentials.hpp"
#include "elemdiff/jets.hpp"
#include "elemdiff/modular.hpp"
#include "elemdiff/trees.hpp"

namespace elemdiff {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// A row of an evaluation matrix: the differential of `tree` with vertex v
/// fed by input slots[v-1]. RT(n) rows use the identity slots and n inputs;
/// labelled objects reuse inputs according to their labels.
struct EvalRow {
  LabelledTree tree;
  std::vector<int> slots;

  static EvalRow plain(const LabelledTree& tree);
  bool operator==(const EvalRow&) const = default;
};

struct ColumnScheme {
  enum class Kind { RandomColumns, ExhaustiveMonomials };
  Kind kind = Kind::RandomColumns;
  std::size_t tuples = 0;  // random input tuples; each yields d columns
  std::uint64_t seed = kDefaultSeed;
  int bound = 3;  // random coefficients are drawn from [-bound, bound]

  std::string describe() const;
};

/// Rows are combinatorial elements, columns are (input tuple, output slot)
/// pairs, entries are the exact integer values F(row)(tuple)(0)_slot.
struct EvalMatrix {
  std::vector<EvalRow> rows;
  int inputs = 0;  // jets per tuple
  int dimension = 0;
  int degree = 0;
  std::vector<std::vector<IntJet>> tuples;
  std::vector<std::pair<std::size_t, int>> columns;  // (tuple id, 1-based output component)
  IntMatrix entries;
  ColumnScheme scheme;
};

/// Random integer input jets for tuple `index`; depends only on (seed, index).
std::vector<IntJet> randomTuple(std::uint64_t seed, std::size_t index, int inputs, int d, int D, int bound);

/// Builds the matrix. D is the truncation degree (n - 1 for arity n). Throws
/// SizeLimitError when the column count would exceed columnCap.
EvalMatrix buildMatrix(std::vector<EvalRow> rows, int inputs, int d, int D, const ColumnScheme& scheme,
                       std::size_t columnCap = 4'000'000, unsigned threads = 0);

/// Appends `extra` random tuples, continuing the tuple numbering.
void extendRandomColumns(EvalMatrix& m, std::size_t extra, unsigned threads = 0);

/// Recomputes one entry through the general jet recursion.
Rational recomputeEntry(const EvalMatrix& m, std::size_t row, std::size_t column);

struct RankCertificate {
  std::size_t rank = 0;
  std::vector<std::size_t> minorRows;
  std::vector<std::size_t> minorCols;
  std::uint64_t prime = kDefaultPrime;
  /// The minor's determinant, recomputed independently, is nonzero mod prime.
  bool confirmed = false;
};

/// Exact rank lower bound: modular echelon plus independent confirmation of
/// the selected nonsingular integer minor. Since entries are integers, a
/// nonzero minor determinant mod p is nonzero over Z.
RankCertificate exactRank(const IntMatrix& m, std::uint64_t prime = kDefaultPrime);

struct Relation {
  std::vector<Rational> coeffs;  // one per row
  bool verified = false;
};

struct RelationBasis {
  std::vector<Relation> relations;
  std::vector<std::size_t> dependentRows;  // relations[i] has coefficient 1 here
  std::vector<std::size_t> basisRows;
  bool reconstructed = true;  // false if some modular coefficient had no small fraction
};

/// Left-nullspace basis in reduced form, lifted from the modular echelon by
/// rational reconstruction and checked exactly against every sampled column.
/// Relations stay unverified until certifyIdentity passes.
RelationBasis nullspaceRows(const EvalMatrix& m, std::uint64_t prime = kDefaultPrime);

/// Multilinear relation sum c_tau F(tau) over standard trees on [n].
struct TreeRelation {
  int n = 0;
  std::vector<std::pair<LabelledTree, Rational>> terms;
};

/// Converts a relation among rows into a multilinear tree relation. Rows that
/// reuse inputs are polarized: each is replaced by the sum of its relabellings
/// over the Young subgroup of its label blocks. All rows must share the same
/// label multiplicities.
TreeRelation polarize(const std::vector<EvalRow>& rows, const Relation& relation);

/// Signed sum over S_{2k} of the labelled chains sigma(1) <- ... <- sigma(2k) <- 2k+1.
TreeRelation s2dRelation(int k);

/// The relation with vertex labels permuted by sigma.
TreeRelation relabel(const TreeRelation& r, const Permutation& sigma);

struct CertifyOptions {
  int dimension = 2;
  /// Skip tuples whose total degree differs from n-1: the constant term of a
  /// homogeneous input tuple vanishes unless degrees add up to n-1.
  bool prune = true;
  unsigned threads = 0;
  bool stopAtWitness = true;
};

struct CertifyResult {
  bool holds = false;
  std::uint64_t tuplesTotal = 0;
  std::uint64_t tuplesEvaluated = 0;
  std::optional<std::vector<MonomialField>> witness;
  std::vector<Rational> witnessValue;
};

/// True iff the relation's value at zero vanishes on every tuple of
/// monomialBasis(d, n-1)^n. Combined with multilinearity and the fact that
/// F(tau) takes at most n-1 derivatives of each input, this proves the
/// identity on all smooth inputs.
CertifyResult certifyIdentity(const TreeRelation& relation, const CertifyOptions& options);

struct DimensionOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t prime = kDefaultPrime;
  int bound = 3;
  std::size_t columnBudget = 200'000;
  int degreeOverride = -1;
  bool prune = true;
  bool allowLarge = false;
  unsigned threads = 0;
};

struct DimensionResult {
  std::size_t rows = 0;
  std::size_t dimension = 0;
  std::size_t lowerBound = 0;
  std::size_t upperBound = 0;
  bool certified = false;
  std::string status;
  RankCertificate rank;
  RelationBasis relations;
  std::size_t columns = 0;
  std::string scheme;
  std::uint64_t seed = 0;
};

/// Two-sided dimension of the span of the rows: lower bound from a confirmed
/// nonsingular minor over random columns (grown until the rank is stable for
/// two batches), upper bound from exhaustively certified relations.
DimensionResult dimensionOfRows(const std::vector<EvalRow>& rows, int inputs, int d, int n,
                                const DimensionOptions& options);

/// Throws SizeLimitError outside n <= 6 (d = 1), n <= 5 (d = 2), n <= 4 (d >= 3).
void checkDeskScale(int d, int n, bool allowLarge);

DimensionResult dimensionW(int d, int n, const DimensionOptions& options = {});
DimensionResult dimensionLW(int d, int n, const DimensionOptions& options = {});

std::vector<LabelledTree> linearTrees(int n);

struct BlockBasis {
  std::string orbit;
  std::vector<LabelledTree> members;
  std::vector<LabelledTree> basis;
  DimensionResult dimension;
  bool projectionChecked = false;
};

/// Basis of the block spanned by F(tau) with pi(tau) in the given orbit
/// (code as produced by orbitCode). Also checks pi_1(F(tau)) = G(pi(tau)).
BlockBasis blockBasis(int d, int n, const std::string& orbit, const DimensionOptions& options = {});

/// All orbit codes of MI(n) in descending lexicographic order.
std::vector<std::string> multiIndexOrbits(int n);

struct TraceResult {
  Rational trace;
  std::size_t dimension = 0;
  bool certified = false;
};

/// Trace of the input-permutation action of sigma on the span of the rows
/// (plain rows only; relabel(row, sigma) must be a row again).
TraceResult traceOnSpan(const std::vector<LabelledTree>& rows, const Permutation& sigma, int d,
                        const DimensionOptions& options = {});
/// Same, reusing an already certified dimension computation over `rows`.
TraceResult traceOnSpan(const std::vector<LabelledTree>& rows, const Permutation& sigma,
                        const DimensionResult& span);

}  // namespace elemdiff
