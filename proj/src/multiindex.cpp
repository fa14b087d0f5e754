#include "elemdiff/multiindex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "elemdiff/error.hpp"
#include "elemdiff/trees.hpp"

namespace elemdiff {

MultiIndex::MultiIndex(std::vector<int> arity) : arity_(std::move(arity)) {
  if (arity_.empty()) throw ArgumentError("multi-index on an empty set");
  long total = 0;
  for (int a : arity_) {
    if (a < 0) throw ArgumentError("negative arity");
    total += a;
  }
  if (total != size() - 1) throw ArgumentError("arities must sum to n-1");
}

std::string MultiIndex::toString() const {
  std::string out = "z[";
  for (int v = 1; v <= size(); ++v) out += "(" + std::to_string(v) + "," + std::to_string(arity(v)) + ")";
  return out + "]";
}

MultiIndex MultiIndex::parse(std::string_view text) {
  std::vector<int> numbers;
  std::string token;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (!token.empty()) {
      numbers.push_back(std::stoi(token));
      token.clear();
    }
  }
  if (!token.empty()) numbers.push_back(std::stoi(token));
  if (text.find('z') == std::string_view::npos) return MultiIndex(numbers);
  if (numbers.size() % 2) throw ArgumentError("malformed monomial multi-index");
  const int n = static_cast<int>(numbers.size() / 2);
  std::vector<int> arity(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = numbers[2 * i];
    if (v < 1 || v > n || arity[v - 1] != -1) throw ArgumentError("monomial multi-index must list each vertex once");
    arity[v - 1] = numbers[2 * i + 1];
  }
  return MultiIndex(std::move(arity));
}

MultiIndex projectPi(const LabelledTree& tree) {
  if (!tree.isStandard()) throw ArgumentError("projectPi needs a standard tree");
  std::vector<int> arity(tree.size(), 0);
  for (Vertex p : tree.parents())
    if (p != kRoot) ++arity[p - 1];
  return MultiIndex(std::move(arity));
}

std::vector<MultiIndex> enumerateMI(int n) {
  if (n < 1 || n > kMaxEnumeratedMultiIndexSize)
    throw SizeLimitError("multi-index enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedMultiIndexSize));
  std::vector<MultiIndex> out;
  std::vector<int> arity(n);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == n - 1) {
      arity[i] = remaining;
      out.emplace_back(arity);
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      arity[i] = a;
      rec(i + 1, remaining - a);
    }
  };
  rec(0, n - 1);
  return out;
}

bool isLinearMI(const MultiIndex& m) {
  return std::all_of(m.arities().begin(), m.arities().end(), [](int a) { return a <= 1; });
}

MultiIndex relabel(const MultiIndex& m, const Permutation& sigma) {
  if (sigma.size() != m.size()) throw ArgumentError("permutation size differs from multi-index size");
  std::vector<int> arity(m.size());
  for (int v = 1; v <= m.size(); ++v) arity[sigma(v) - 1] = m.arity(v);
  return MultiIndex(std::move(arity));
}

std::string orbitCode(const MultiIndex& m) {
  auto sorted = m.arities();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sorted[i]);
  }
  return out;
}

LabelledTree witnessTree(const MultiIndex& m) {
  const int n = m.size();
  // Breadth-first filling: a queue of open slots, vertices with positive
  // arity first so that the slots never run out before the last vertex.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return (m.arity(a) > 0) > (m.arity(b) > 0); });
  std::vector<Vertex> parent(n, kRoot);
  std::vector<Vertex> slots;
  std::size_t next = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (i > 0) parent[v - 1] = slots[next++];
    for (int k = 0; k < m.arity(v); ++k) slots.push_back(v);
  }
  return LabelledTree(std::move(parent));
}

}  // namespace elemdiff
