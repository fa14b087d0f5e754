#include <doctest.h>

#include "elemdiff/error.hpp"
#include "elemdiff/jets.hpp"
#include "support.hpp"

using namespace elemdiff;

TEST_CASE("monomial table layout") {
  auto t = MonomialTable::get(2, 3);
  CHECK(t->count() == 10);
  CHECK(t->totalDegree(0) == 0);
  std::vector<int> xy{1, 1};
  int i = t->indexOf(xy);
  REQUIRE(i >= 0);
  CHECK(t->exponent(i) == xy);
  CHECK(MonomialTable::get(3, 4)->count() == 35);
  CHECK_THROWS_AS(MonomialTable::get(7, 2), SizeLimitError);
}

TEST_CASE("basic arithmetic") {
  auto x = Polynomial::variable(1, 3, 1);
  auto xx = x * x;
  CHECK(xx.coefficient(std::vector<int>{2}) == 1);
  CHECK((xx * xx).isZero());  // truncated at degree 3
  CHECK(xx.partial(1) == Rational(2) * x);
  CHECK(Polynomial::constant(1, 3, Rational(7)).valueAtZero() == 7);
  CHECK_THROWS_AS(x + Polynomial::variable(2, 3, 1), ArgumentError);
  CHECK_THROWS_AS(x.partial(2), ArgumentError);
}

TEST_CASE("Leibniz rule below the truncation degree") {
  std::mt19937_64 rng(1);
  for (int d = 1; d <= 3; ++d) {
    const int D = 4;
    for (int rep = 0; rep < 10; ++rep) {
      auto u = testing::randomJet(rng, d, D).component(1), v = testing::randomJet(rng, d, D).component(1);
      for (int dir = 1; dir <= d; ++dir) {
        auto lhs = (u * v).partial(dir), rhs = u.partial(dir) * v + u * v.partial(dir);
        const auto& tab = lhs.table();
        for (int i = 0; i < tab.count(); ++i)
          if (tab.totalDegree(i) <= D - 1) CHECK(lhs.coefficientAt(i) == rhs.coefficientAt(i));
      }
    }
  }
}

TEST_CASE("restriction commutes with the operations") {
  std::mt19937_64 rng(2);
  for (int d = 2; d <= 3; ++d) {
    for (int rep = 0; rep < 10; ++rep) {
      auto a = testing::randomJet(rng, d, 3), b = testing::randomJet(rng, d, 3);
      CHECK((a + b).restrictLastVariable() == a.restrictLastVariable() + b.restrictLastVariable());
      Rational q(3, 7);
      CHECK((q * a).restrictLastVariable() == q * a.restrictLastVariable());
      auto u = a.component(1), v = b.component(2);
      CHECK((u * v).restrictLastVariable() == u.restrictLastVariable() * v.restrictLastVariable());
      for (int dir = 1; dir < d; ++dir)
        CHECK(u.partial(dir).restrictLastVariable() == u.restrictLastVariable().partial(dir));
    }
  }
}

TEST_CASE("monomial basis and evaluation at zero") {
  auto basis = monomialBasis<Rational>(2, 4);
  CHECK(basis.size() == 30);
  int constants = 0;
  for (const auto& j : basis) {
    auto v = evalAtZero(j);
    constants += v[0] != 0 || v[1] != 0;
  }
  CHECK(constants == 2);
}

TEST_CASE("integer conversion") {
  std::mt19937_64 rng(3);
  auto j = testing::randomJet(rng, 2, 3);
  CHECK(toRationalJet(toIntJet(j)) == j);
  auto half = Rational(1, 2) * j;
  if (!j.isZero()) CHECK_THROWS_AS(toIntJet(Rational(1, 2) * Jet::monomialField(2, 3, std::vector<int>{0, 0}, 1)), ArgumentError);
  (void)half;
}
