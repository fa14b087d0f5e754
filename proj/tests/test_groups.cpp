#include <doctest.h>

#include "elemdiff/groups.hpp"

using namespace elemdiff;

TEST_CASE("class order matches the table columns") {
  auto classes = conjugacyClasses(5);
  REQUIRE(classes.size() == 7);
  std::vector<std::string> reps;
  for (const auto& c : classes) reps.push_back(c.representative.cycleString());
  CHECK(reps == std::vector<std::string>{"id", "(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 2 3 4)", "(1 2)(3 4 5)", "(1 2 3 4 5)"});
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.size;
  CHECK(total == 120);
}

TEST_CASE("characters are class functions") {
  auto chi = chiInfinity(4);
  auto a = Permutation::fromCycles(4, {{1, 2}, {3, 4}});
  auto b = Permutation::fromCycles(4, {{1, 3}, {2, 4}});
  CHECK(chi.at(a) == chi.at(b));
  auto inf5 = chiInfinity(5);
  auto g = Permutation::fromCycles(5, {{1, 2, 3}});
  auto h = Permutation::fromCycles(5, {{2, 4, 5}});
  CHECK(inf5.at(g) == inf5.at(h));
}

TEST_CASE("fixed-point counts on trees") {
  for (int n = 1; n <= 5; ++n) {
    auto chi = chiInfinity(n);
    long long expected = 1;
    for (int i = 0; i < n - 1; ++i) expected *= n;
    CHECK(chi.values.front() == expected);
    for (std::size_t i = 0; i < chi.classes.size(); ++i)
      if (std::find(chi.classes[i].begin(), chi.classes[i].end(), 1) == chi.classes[i].end()) CHECK(chi.values[i] == 0);
  }
}

TEST_CASE("inner products") {
  auto v = chiV(2);
  CHECK(innerProduct(v, v) == 2);
  auto inf = chiInfinity(5);
  // number of orbits on RT(5) = <chi_inf, 1>
  CharacterRow one{"1", 5, inf.classes, std::vector<long long>(inf.classes.size(), 1)};
  CHECK(innerProduct(inf, one) == 9);
  auto two = chi2();
  CHECK(innerProduct(two, one).get_den() == 1);
  CHECK(difference(inf, v, "x").values == two.values);
}

TEST_CASE("subgroup class counts") {
  CHECK(subgroupClasses(1).size() == 1);
  CHECK(subgroupClasses(3).size() == 4);
  CHECK(subgroupClasses(4).size() == 11);
  CHECK(subgroupClasses(5).size() == 19);
  std::size_t total = 0;
  for (const auto& g : subgroupClasses(4)) total += g.conjugates;
  CHECK(total == 30);  // subgroups of S_4
}

TEST_CASE("coset characters") {
  auto classes = subgroupClasses(4);
  for (const auto& g : classes) {
    auto chi = cosetCharacter(g, 4);
    CHECK(chi.values.front() == static_cast<long long>(24 / g.order));
    if (g.order == 24) CHECK(std::all_of(chi.values.begin(), chi.values.end(), [](long long x) { return x == 1; }));
  }
}

TEST_CASE("scan is sensitive to the bounding character") {
  auto a = constraintScan(chi2());
  auto b = constraintScan(chiInfinity(5));
  CHECK(a.entries.size() == 19);
  CHECK(a.survivors != b.survivors);
}
