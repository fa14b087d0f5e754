// Published values the whole library has to reproduce.

#include <doctest.h>

#include "elemdiff/differentials.hpp"
#include "elemdiff/groups.hpp"
#include "elemdiff/relations.hpp"
#include "support.hpp"

using namespace elemdiff;

namespace {
const CycleType kTransposition{2, 1, 1, 1};
const CycleType kThreeCycle{3, 1, 1};
const CycleType kFourCycle{4, 1};
const CycleType kTwoThree{3, 2};
}  // namespace

TEST_CASE("RT(5) has 625 trees") { CHECK(enumerateTrees(5).size() == 625); }

TEST_CASE("dim W_2(5) = 620 with matching bounds") {
  auto r = dimensionW(2, 5);
  CHECK(r.dimension == 620);
  CHECK(r.lowerBound == 620);
  CHECK(r.upperBound == 620);
  CHECK(r.certified);
  CHECK(r.rank.confirmed);
  CHECK(r.relations.relations.size() == 5);
}

TEST_CASE("s_2 is an identity in d = 1") {
  CertifyOptions o;
  o.dimension = 1;
  CHECK(certifyIdentity(s2dRelation(1), o).holds);
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    auto jets = testing::randomJets(rng, 3, 1, 4);
    CHECK(s2d(1, std::span<const Jet>(jets)).isZero());
  }
}

TEST_CASE("s_4 is an identity in d = 2 but not in d = 3") {
  CertifyOptions o;
  o.dimension = 2;
  CHECK(certifyIdentity(s2dRelation(2), o).holds);
  o.dimension = 3;
  auto r = certifyIdentity(s2dRelation(2), o);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
}

TEST_CASE("pre-Lie relation in d = 2, 3 and the left identity in d = 1") {
  std::mt19937_64 rng(11);
  for (int d = 1; d <= 3; ++d) {
    for (int rep = 0; rep < 5; ++rep) {
      auto f = testing::randomJet(rng, d, 6, 4, 2), g = testing::randomJet(rng, d, 6, 4, 2), h = testing::randomJet(rng, d, 6, 4, 2);
      CHECK(preLie(f, preLie(g, h)) - preLie(preLie(f, g), h) == preLie(f, preLie(h, g)) - preLie(preLie(f, h), g));
      if (d == 1) CHECK((preLie(f, preLie(g, h)) - preLie(g, preLie(f, h))).isZero());
    }
  }
}

TEST_CASE("character rows at the quoted classes") {
  auto inf = chiInfinity(5);
  CHECK(inf.at(CycleType{1, 1, 1, 1, 1}) == 625);
  CHECK(inf.at(kTransposition) == 27);
  CHECK(inf.at(kTwoThree) == 0);
  auto v = chiV(2);
  CHECK(v.at(CycleType{1, 1, 1, 1, 1}) == 5);
  CHECK(v.at(kTransposition) == -3);
  CHECK(v.at(kFourCycle) == -1);
  auto two = chi2();
  CHECK(two.at(CycleType{1, 1, 1, 1, 1}) == 620);
  CHECK(two.at(kTransposition) == 30);
  CHECK(two.at(kThreeCycle) == 2);
}

TEST_CASE("19 subgroup classes of S_5; S_4 coset character") {
  auto classes = subgroupClasses(5);
  CHECK(classes.size() == 19);
  bool seen = false;
  for (const auto& g : classes) {
    if (g.order != 24) continue;
    auto chi = cosetCharacter(g, 5);
    if (chi.values == std::vector<long long>{5, 3, 2, 1, 1, 0, 0}) seen = true;
  }
  CHECK(seen);
}

TEST_CASE("S_4 meets the final inequality with 4 > 2") {
  auto report = constraintScan();
  bool flagged = false;
  for (auto i : report.survivors) {
    const auto& e = report.entries[i];
    if (e.group.order == 24 && e.finalLhs == 4 && e.finalRhs == 2 && e.contradiction) flagged = true;
  }
  CHECK(flagged);
}

TEST_CASE("trace of (1 2 3) on LW_2(5) is -2") {
  auto span = dimensionLW(2, 5);
  auto t = traceOnSpan(linearTrees(5), Permutation::fromCycles(5, {{1, 2, 3}}), span);
  CHECK(t.certified);
  CHECK(t.trace == -2);
}

TEST_CASE("dual basis: G(m')(x^m / m!) = [m' = m]") {
  for (const auto& m : enumerateMI(4)) {
    std::vector<Polynomial> inputs;
    for (int v = 1; v <= m.size(); ++v) {
      Rational c = 1;
      for (int f = 2; f <= m.arity(v); ++f) c /= f;
      inputs.push_back(Polynomial::monomial(1, 3, std::vector<int>{m.arity(v)}, c));
    }
    for (const auto& other : enumerateMI(4)) {
      auto value = evalG(other, std::span<const Polynomial>(inputs)).valueAtZero();
      CHECK(value == (other == m ? 1 : 0));
    }
  }
}
