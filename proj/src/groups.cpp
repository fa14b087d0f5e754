#include "elemdiff/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "elemdiff/error.hpp"
#include "elemdiff/trees.hpp"

namespace elemdiff {

namespace {

std::vector<CycleType> partitions(int n) {
  std::vector<CycleType> out;
  CycleType cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation representativeOf(int n, const CycleType& type) {
  CycleType nontrivial;
  for (int len : type)
    if (len > 1) nontrivial.push_back(len);
  std::sort(nontrivial.begin(), nontrivial.end());
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : nontrivial) {
    std::vector<int> c;
    for (int i = 0; i < len; ++i) c.push_back(next++);
    cycles.push_back(c);
  }
  return Permutation::fromCycles(n, cycles);
}

std::uint64_t classSize(int n, const CycleType& type) {
  std::map<int, int> mult;
  for (int len : type) ++mult[len];
  std::uint64_t centralizer = 1;
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) centralizer *= static_cast<std::uint64_t>(len);
    centralizer *= factorial(m);
  }
  return factorial(n) / centralizer;
}

// S_n with a multiplication table on element indices.
struct SymmetricGroup {
  int n;
  std::vector<Permutation> elements;
  std::map<Permutation, int> index;
  std::vector<int> table;  // table[a * size + b] = index of a * b
  std::vector<int> inverse;

  explicit SymmetricGroup(int degree) : n(degree), elements(allPermutations(degree)) {
    const int size = static_cast<int>(elements.size());
    for (int i = 0; i < size; ++i) index.emplace(elements[i], i);
    table.resize(static_cast<std::size_t>(size) * size);
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) table[a * size + b] = index.at(elements[a] * elements[b]);
    inverse.resize(size);
    for (int a = 0; a < size; ++a) inverse[a] = index.at(elements[a].inverse());
  }
  int size() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return table[a * size() + b]; }
};

using Members = std::vector<bool>;

Members closure(const SymmetricGroup& s, const std::vector<int>& generators) {
  Members in(s.size(), false);
  std::deque<int> queue{0};  // identity is element 0 in lexicographic order
  in[0] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int g : generators) {
      int y = s.mul(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

Members conjugate(const SymmetricGroup& s, const Members& h, int c) {
  Members out(s.size(), false);
  for (int x = 0; x < s.size(); ++x)
    if (h[x]) out[s.mul(s.mul(c, x), s.inverse[c])] = true;
  return out;
}

std::string orbitString(int n, const std::vector<Permutation>& elements) {
  std::vector<int> owner(n + 1, 0);
  std::string out;
  for (int v = 1; v <= n; ++v) {
    if (owner[v]) continue;
    std::set<int> orbit;
    for (const auto& g : elements) orbit.insert(g(v));
    out += '{';
    bool first = true;
    for (int w : orbit) {
      owner[w] = v;
      if (!first) out += ',';
      out += std::to_string(w);
      first = false;
    }
    out += '}';
  }
  return out;
}

}  // namespace

std::vector<ConjugacyClass> conjugacyClasses(int n) {
  if (n < 1 || n > 10) throw SizeLimitError("conjugacy classes supported for 1 <= n <= 10");
  auto types = partitions(n);
  auto key = [](const CycleType& t) {
    int moves = 0, nontrivial = 0;
    for (int len : t) {
      moves += len - 1;
      nontrivial += len > 1;
    }
    return std::make_pair(moves, nontrivial);
  };
  std::stable_sort(types.begin(), types.end(), [&](const CycleType& a, const CycleType& b) { return key(a) < key(b); });
  std::vector<ConjugacyClass> out;
  for (const auto& t : types) out.push_back(ConjugacyClass{t, representativeOf(n, t), classSize(n, t)});
  return out;
}

long long CharacterRow::at(const CycleType& type) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == type) return values[i];
  throw ArgumentError("cycle type is not a class of S_" + std::to_string(n));
}

CharacterRow chiInfinity(int n) {
  if (n < 1 || n > 5) throw SizeLimitError("chiInfinity supports n <= 5");
  const auto trees = enumerateTrees(n);
  CharacterRow row{"chi_inf", n, {}, {}};
  for (const auto& c : conjugacyClasses(n)) {
    long long fixed = 0;
    for (const auto& t : trees) fixed += relabel(t, c.representative) == t;
    row.classes.push_back(c.type);
    row.values.push_back(fixed);
  }
  return row;
}

CharacterRow chiV(int d) {
  const int n = 2 * d + 1;
  CharacterRow row{"chi_V", n, {}, {}};
  for (const auto& c : conjugacyClasses(n)) {
    row.classes.push_back(c.type);
    row.values.push_back(static_cast<long long>(c.representative.sign()) * c.representative.fixedPoints());
  }
  return row;
}

CharacterRow difference(const CharacterRow& a, const CharacterRow& b, std::string name) {
  if (a.n != b.n) throw ArgumentError("characters of different symmetric groups");
  CharacterRow row{std::move(name), a.n, a.classes, {}};
  for (std::size_t i = 0; i < a.classes.size(); ++i) row.values.push_back(a.values[i] - b.at(a.classes[i]));
  return row;
}

CharacterRow chi2() { return difference(chiInfinity(5), chiV(2), "chi_2"); }

Rational innerProduct(const CharacterRow& a, const CharacterRow& b) {
  if (a.n != b.n) throw ArgumentError("characters of different symmetric groups");
  Rational sum = 0;
  for (const auto& c : conjugacyClasses(a.n))
    sum += Rational(static_cast<long>(c.size)) * Rational(static_cast<long>(a.at(c.type) * b.at(c.type)));
  sum /= Rational(static_cast<long>(factorial(a.n)));
  return sum;
}

std::vector<SubgroupClass> subgroupClasses(int n) {
  if (n < 1 || n > 6) throw SizeLimitError("subgroup enumeration supports n <= 6");
  const SymmetricGroup s(n);
  std::map<Members, std::vector<int>> found;  // subgroup -> generators
  std::deque<Members> work;
  Members trivial(s.size(), false);
  trivial[0] = true;
  found.emplace(trivial, std::vector<int>{});
  work.push_back(trivial);
  while (!work.empty()) {
    Members h = work.front();
    work.pop_front();
    const auto gens = found.at(h);
    for (int g = 0; g < s.size(); ++g) {
      if (h[g]) continue;
      auto extended = gens;
      extended.push_back(g);
      Members k = closure(s, extended);
      if (found.emplace(k, extended).second) work.push_back(k);
    }
  }

  // Conjugacy classes: canonical key is the smallest conjugate.
  std::map<Members, std::pair<Members, std::size_t>> classes;  // key -> (first member seen, class size)
  std::set<Members> seen;
  for (const auto& [h, gens] : found) {
    if (seen.count(h)) continue;
    std::set<Members> conj;
    for (int c = 0; c < s.size(); ++c) conj.insert(conjugate(s, h, c));
    for (const auto& x : conj) seen.insert(x);
    classes.emplace(*conj.begin(), std::make_pair(*conj.begin(), conj.size()));
  }

  std::vector<SubgroupClass> out;
  for (const auto& [key, value] : classes) {
    SubgroupClass sc;
    for (int g : found.at(value.first)) sc.generators.push_back(s.elements[g]);
    for (int x = 0; x < s.size(); ++x)
      if (value.first[x]) sc.elements.push_back(s.elements[x]);
    sc.order = sc.elements.size();
    sc.conjugates = value.second;
    sc.orbits = orbitString(n, sc.elements);
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.orbits != b.orbits) return a.orbits < b.orbits;
    return a.elements < b.elements;
  });
  return out;
}

CharacterRow cosetCharacter(const SubgroupClass& group, int n) {
  const auto all = allPermutations(n);
  std::set<Permutation> members(group.elements.begin(), group.elements.end());
  if (members.size() != group.elements.size() || !members.count(Permutation::identity(n)))
    throw ArgumentError("subgroup element list is malformed");
  // Left cosets hG, each stored as its sorted element set.
  std::vector<std::set<Permutation>> cosets;
  std::set<Permutation> covered;
  for (const auto& h : all) {
    if (covered.count(h)) continue;
    std::set<Permutation> coset;
    for (const auto& g : group.elements) coset.insert(h * g);
    covered.insert(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  CharacterRow row{"chi_G", n, {}, {}};
  for (const auto& c : conjugacyClasses(n)) {
    long long fixed = 0;
    for (const auto& coset : cosets) fixed += coset.count(c.representative * *coset.begin()) > 0;
    row.classes.push_back(c.type);
    row.values.push_back(fixed);
  }
  return row;
}

ScanReport constraintScan(const CharacterRow& bound) {
  if (bound.n != 5) throw ArgumentError("the subgroup scan runs on S_5");
  const CycleType doubleTransposition{2, 2, 1}, fourCycle{4, 1}, threeTwo{3, 2}, fiveCycle{5}, threeCycle{3, 1, 1};
  ScanReport report;
  report.bound = bound;
  for (const auto& g : subgroupClasses(5)) {
    ScanEntry e;
    e.group = g;
    e.character = cosetCharacter(g, 5);
    e.belowBound = true;
    for (std::size_t i = 0; i < e.character.classes.size(); ++i)
      e.belowBound = e.belowBound && e.character.values[i] <= bound.at(e.character.classes[i]);
    const long long a = e.character.at(doubleTransposition);
    e.equalOnSquareClass = a == e.character.at(fourCycle) && a >= 1;
    e.vanishes = e.character.at(threeTwo) == 0 && e.character.at(fiveCycle) == 0;
    e.survives = e.belowBound && e.equalOnSquareClass && e.vanishes;
    e.finalLhs = 2 * e.character.at(threeCycle);
    e.finalRhs = bound.at(threeCycle);
    e.contradiction = e.survives && e.finalLhs > e.finalRhs;
    if (e.survives) report.survivors.push_back(report.entries.size());
    report.entries.push_back(std::move(e));
  }
  return report;
}

ScanReport constraintScan() { return constraintScan(chi2()); }

}  // namespace elemdiff
