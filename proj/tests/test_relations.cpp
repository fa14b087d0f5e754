#include <doctest.h>

#include "elemdiff/differentials.hpp"
#include "elemdiff/error.hpp"
#include "elemdiff/relations.hpp"
#include "support.hpp"

using namespace elemdiff;

namespace {

std::vector<EvalRow> plainRows(int n) {
  std::vector<EvalRow> rows;
  for (const auto& t : enumerateTrees(n)) rows.push_back(EvalRow::plain(t));
  return rows;
}

}  // namespace

TEST_CASE("random tuples are reproducible per index") {
  auto a = randomTuple(7, 3, 2, 2, 3, 3);
  auto b = randomTuple(7, 3, 2, 2, 3, 3);
  CHECK(a == b);
  CHECK_FALSE(randomTuple(7, 4, 2, 2, 3, 3) == a);
  CHECK_FALSE(randomTuple(8, 3, 2, 2, 3, 3) == a);
}

TEST_CASE("matrix entries match the general evaluator") {
  ColumnScheme scheme;
  scheme.tuples = 5;
  auto m = buildMatrix(plainRows(3), 3, 2, 2, scheme);
  CHECK(m.entries.rows() == 9);
  CHECK(m.entries.cols() == 10);
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 10; ++c) CHECK(recomputeEntry(m, r, c) == Rational(m.entries(r, c)));
  auto single = buildMatrix(plainRows(1), 1, 2, 0, scheme);
  CHECK(single.entries.rows() == 1);
}

TEST_CASE("exhaustive columns and the column cap") {
  ColumnScheme scheme;
  scheme.kind = ColumnScheme::Kind::ExhaustiveMonomials;
  auto m = buildMatrix(plainRows(3), 3, 1, 2, scheme);
  CHECK(m.entries.cols() == 27);
  CHECK(exactRank(m.entries).rank == 6);
  CHECK_THROWS_AS(buildMatrix(plainRows(3), 3, 2, 2, scheme, 10), SizeLimitError);
}

TEST_CASE("d = 1 ranks equal the number of multi-indices") {
  for (int n = 1; n <= 5; ++n) {
    auto r = dimensionW(1, n);
    CHECK(r.certified);
    CHECK(r.dimension == enumerateMI(n).size());
  }
}

TEST_CASE("no identities below arity 5 in d = 2") {
  long long expected = 1;
  for (int n = 1; n <= 4; ++n) {
    auto r = dimensionW(2, n);
    CHECK(r.certified);
    CHECK(r.dimension == static_cast<std::size_t>(n == 1 ? 1 : (n == 2 ? 2 : (n == 3 ? 9 : 64))));
    (void)expected;
  }
  ColumnScheme scheme;
  scheme.tuples = 20;
  auto m = buildMatrix(plainRows(3), 3, 2, 2, scheme);
  CHECK(nullspaceRows(m).relations.empty());
}

TEST_CASE("certified relations in d = 1") {
  // W_1(3) has 9 trees, 6 multi-indices: 3 relations, each certified
  auto r = dimensionW(1, 3);
  CHECK(r.relations.relations.size() == 3);
  for (const auto& rel : r.relations.relations) CHECK(rel.verified);
}

TEST_CASE("certification with and without pruning agrees") {
  CertifyOptions o;
  o.dimension = 1;
  for (bool prune : {true, false}) {
    o.prune = prune;
    CHECK(certifyIdentity(s2dRelation(1), o).holds);
    TreeRelation bogus{3, {{LabelledTree::parse("[0,1,1]"), Rational(1)}}};
    auto r = certifyIdentity(bogus, o);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
  }
  o.prune = false;
  o.dimension = 2;
  auto full = certifyIdentity(s2dRelation(1), o);
  CHECK_FALSE(full.holds);
  CHECK(full.tuplesTotal == 12u * 12u * 12u);  // 2 components x 6 monomials per vertex
}

TEST_CASE("witness values are reproduced by the jet evaluator") {
  CertifyOptions o;
  o.dimension = 3;
  auto r = certifyIdentity(s2dRelation(2), o);
  REQUIRE(r.witness.has_value());
  std::vector<Jet> jets;
  for (const auto& f : *r.witness) jets.push_back(Jet::monomialField(3, 4, f.alpha, f.component));
  CHECK(s2d(2, std::span<const Jet>(jets)).valueAtZero() == r.witnessValue);
}

TEST_CASE("relabelled relations stay identities") {
  CertifyOptions o;
  o.dimension = 1;
  for (const auto& s : allPermutations(3)) CHECK(certifyIdentity(relabel(s2dRelation(1), s), o).holds);
}

TEST_CASE("linear spans") {
  CHECK(linearTrees(4).size() == 24);
  auto r = dimensionLW(1, 3);
  CHECK(r.dimension == 3);  // one linear multi-index per choice of leaf
  auto r2 = dimensionLW(2, 3);
  CHECK(r2.dimension == 6);
}

TEST_CASE("desk-scale limits") {
  CHECK_THROWS_AS(checkDeskScale(2, 6, false), SizeLimitError);
  CHECK_NOTHROW(checkDeskScale(2, 5, false));
  CHECK_THROWS_AS(checkDeskScale(3, 5, false), SizeLimitError);
}

TEST_CASE("column budget exhaustion is reported, not certified") {
  DimensionOptions o;
  o.columnBudget = 4;
  auto r = dimensionW(2, 4, o);
  CHECK_FALSE(r.certified);
  CHECK(r.status != "certified");
}

TEST_CASE("block bases") {
  for (const auto& code : multiIndexOrbits(4)) {
    auto b = blockBasis(1, 4, code);
    CHECK(b.projectionChecked);
  }
  std::size_t total = 0;
  for (const auto& code : multiIndexOrbits(3)) {
    auto b = blockBasis(2, 3, code);
    CHECK(b.projectionChecked);
    total += b.dimension.dimension;
    CHECK(b.basis.size() == b.dimension.dimension);
  }
  CHECK(total == dimensionW(2, 3).dimension);
}

TEST_CASE("traces on small spans") {
  auto rows = enumerateTrees(3);
  auto span = dimensionW(2, 3);
  CHECK(traceOnSpan(rows, Permutation::identity(3), span).trace == 9);
  // permutation representation on RT(3): fixed trees
  CHECK(traceOnSpan(rows, Permutation::fromCycles(3, {{1, 2}}), span).trace == 1);
}
