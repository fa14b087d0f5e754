#include "elemdiff/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "elemdiff/error.hpp"
#include "elemdiff/multiindex.hpp"

namespace elemdiff {

LabelledTree::LabelledTree(std::vector<Vertex> parent) : parent_(std::move(parent)) {
  vertices_.resize(parent_.size());
  std::iota(vertices_.begin(), vertices_.end(), 1);
  validate();
}

LabelledTree::LabelledTree(std::vector<Vertex> vertices, std::vector<Vertex> parent)
    : vertices_(std::move(vertices)), parent_(std::move(parent)) {
  validate();
}

LabelledTree LabelledTree::singleton(Vertex v) { return LabelledTree({v}, {kRoot}); }

void LabelledTree::validate() {
  const int n = size();
  if (n < 1) throw ArgumentError("a rooted tree needs at least one vertex");
  if (parent_.size() != vertices_.size()) throw ArgumentError("vertex and parent lists differ in length");
  for (int i = 0; i < n; ++i) {
    if (vertices_[i] < 1) throw ArgumentError("vertex labels must be positive");
    if (i > 0 && vertices_[i] <= vertices_[i - 1]) throw ArgumentError("vertex labels must be strictly ascending");
  }
  standard_ = vertices_.back() == n;
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if (parent_[i] == kRoot) {
      ++roots;
      root_ = vertices_[i];
    } else if (!contains(parent_[i]) || parent_[i] == vertices_[i]) {
      throw ArgumentError("parent of vertex " + std::to_string(vertices_[i]) + " is not a valid vertex");
    }
  }
  if (roots != 1) throw ArgumentError("a rooted tree has exactly one root");
  for (int i = 0; i < n; ++i) {
    Vertex v = vertices_[i];
    int steps = 0;
    while (v != root_) {
      v = parentOf(v);
      if (++steps > n) throw ArgumentError("parent map contains a cycle");
    }
  }
}

bool LabelledTree::contains(Vertex v) const {
  if (standard_) return v >= 1 && v <= size();
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int LabelledTree::indexOf(Vertex v) const {
  if (standard_) {
    if (v < 1 || v > size()) throw ArgumentError("vertex " + std::to_string(v) + " not in tree");
    return v - 1;
  }
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw ArgumentError("vertex " + std::to_string(v) + " not in tree");
  return static_cast<int>(it - vertices_.begin());
}

std::vector<Vertex> LabelledTree::children(Vertex v) const {
  indexOf(v);
  std::vector<Vertex> out;
  for (int i = 0; i < size(); ++i)
    if (parent_[i] == v) out.push_back(vertices_[i]);
  return out;
}

std::vector<std::vector<int>> LabelledTree::childIndices() const {
  std::vector<std::vector<int>> out(size());
  for (int i = 0; i < size(); ++i)
    if (parent_[i] != kRoot) out[indexOf(parent_[i])].push_back(i);
  return out;
}

LabelledTree LabelledTree::subtree(Vertex v) const {
  const int top = indexOf(v);
  std::vector<Vertex> verts, parents;
  for (int i = 0; i < size(); ++i) {
    Vertex u = vertices_[i];
    while (u != kRoot && u != v) u = parentOf(u);
    if (u == v) {
      verts.push_back(vertices_[i]);
      parents.push_back(i == top ? kRoot : parent_[i]);
    }
  }
  return LabelledTree(std::move(verts), std::move(parents));
}

std::string LabelledTree::toString() const {
  std::string out;
  if (standard_) {
    out = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parent_[i]);
    }
    return out + "]";
  }
  out = "{";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i]) + ":" + std::to_string(parent_[i]);
  }
  return out + "}";
}

namespace {

std::vector<int> parseInts(std::string_view body, std::string_view separators) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw ArgumentError("empty entry in tree text");
    out.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : body) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (separators.find(c) != std::string_view::npos) {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else {
      throw ArgumentError(std::string("unexpected character '") + c + "' in tree text");
    }
  }
  if (!token.empty() || !out.empty()) flush();
  return out;
}

}  // namespace

LabelledTree LabelledTree::parse(std::string_view text) {
  auto first = text.find_first_not_of(" \t\n");
  auto last = text.find_last_not_of(" \t\n");
  if (first == std::string_view::npos) throw ArgumentError("empty tree text");
  text = text.substr(first, last - first + 1);
  if (text.size() < 2) throw ArgumentError("malformed tree text");
  auto body = text.substr(1, text.size() - 2);
  if (text.front() == '[' && text.back() == ']') return LabelledTree(parseInts(body, ","));
  if (text.front() == '{' && text.back() == '}') {
    auto flat = parseInts(body, ",:");
    if (flat.size() % 2) throw ArgumentError("malformed vertex:parent list");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < flat.size(); i += 2) pairs.emplace_back(flat[i], flat[i + 1]);
    std::sort(pairs.begin(), pairs.end());
    std::vector<Vertex> verts, parents;
    for (auto [v, p] : pairs) {
      verts.push_back(v);
      parents.push_back(p);
    }
    return LabelledTree(std::move(verts), std::move(parents));
  }
  throw ArgumentError("tree text must be [p1,...,pn] or {v:p,...}");
}

bool isConnectedParentMap(std::span<const Vertex> parent) {
  const int n = static_cast<int>(parent.size());
  // n vertices and n-1 edges: weakly connected iff every vertex reaches the root.
  for (int v = 1; v <= n; ++v) {
    int u = v, steps = 0;
    while (parent[u - 1] != kRoot) {
      u = parent[u - 1];
      if (++steps > n) return false;
    }
  }
  return true;
}

std::vector<LabelledTree> enumerateTrees(int n) {
  if (n < 1 || n > kMaxEnumeratedTreeSize)
    throw SizeLimitError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedTreeSize));
  std::vector<LabelledTree> out;
  std::vector<Vertex> parent(n);
  std::function<void(int, bool)> rec = [&](int i, bool haveRoot) {
    if (i == n) {
      if (haveRoot && isConnectedParentMap(parent)) out.emplace_back(parent);
      return;
    }
    for (Vertex p = 0; p <= n; ++p) {
      if (p == i + 1) continue;
      if (p == kRoot && haveRoot) continue;
      // Not enough positions left to place the single root.
      if (!haveRoot && p != kRoot && i == n - 1) continue;
      parent[i] = p;
      rec(i + 1, haveRoot || p == kRoot);
    }
  };
  rec(0, false);
  return out;
}

LabelledTree relabel(const LabelledTree& tree, const Permutation& sigma) {
  if (!tree.isStandard() || sigma.size() != tree.size())
    throw ArgumentError("relabel needs a standard tree and a permutation of the same size");
  std::vector<Vertex> parent(tree.size());
  for (Vertex v = 1; v <= tree.size(); ++v) {
    Vertex p = tree.parents()[v - 1];
    parent[sigma(v) - 1] = p == kRoot ? kRoot : sigma(p);
  }
  return LabelledTree(std::move(parent));
}

RetargetResult retarget(std::span<const Vertex> parent, const Permutation& sigma) {
  const int n = static_cast<int>(parent.size());
  if (sigma.size() != n) throw ArgumentError("retarget needs a permutation of the same size");
  RetargetResult out;
  out.parent.assign(n, kRoot);
  for (Vertex w = 1; w <= n; ++w) out.parent[sigma(w) - 1] = parent[w - 1];
  out.isTree = isConnectedParentMap(out.parent);
  if (out.isTree) out.tree.emplace(out.parent);
  return out;
}

RetargetResult retarget(const LabelledTree& tree, const Permutation& sigma) {
  if (!tree.isStandard()) throw ArgumentError("retarget needs a standard tree");
  return retarget(std::span<const Vertex>(tree.parents()), sigma);
}

Permutation findSigma(const LabelledTree& a, const LabelledTree& b) {
  if (!a.isStandard() || !b.isStandard() || a.size() != b.size())
    throw ArgumentError("findSigma needs standard trees of the same size");
  if (projectPi(a) != projectPi(b)) throw PreconditionError("trees have different multi-indices");
  const int n = a.size();
  std::vector<int> img(n, 0);
  img[a.root() - 1] = b.root();
  auto ca = a.childIndices();
  auto cb = b.childIndices();
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < ca[v].size(); ++i) img[ca[v][i]] = cb[v][i] + 1;
  return Permutation(std::move(img));
}

LabelledTree bplus(Vertex r, std::span<const LabelledTree> parts) {
  std::vector<std::pair<Vertex, Vertex>> entries{{r, kRoot}};
  for (const auto& part : parts)
    for (int i = 0; i < part.size(); ++i)
      entries.emplace_back(part.vertices()[i], part.parents()[i] == kRoot ? r : part.parents()[i]);
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first) throw ArgumentError("B+ parts share vertex labels");
  std::vector<Vertex> verts, parents;
  for (auto [v, p] : entries) {
    verts.push_back(v);
    parents.push_back(p);
  }
  return LabelledTree(std::move(verts), std::move(parents));
}

std::vector<LabelledTree> graftSum(const LabelledTree& branch, const LabelledTree& base) {
  for (Vertex v : branch.vertices())
    if (base.contains(v)) throw ArgumentError("grafted trees share vertex labels");
  std::vector<LabelledTree> out;
  for (Vertex target : base.vertices()) {
    std::vector<std::pair<Vertex, Vertex>> entries;
    for (int i = 0; i < base.size(); ++i) entries.emplace_back(base.vertices()[i], base.parents()[i]);
    for (int i = 0; i < branch.size(); ++i)
      entries.emplace_back(branch.vertices()[i], branch.parents()[i] == kRoot ? target : branch.parents()[i]);
    std::sort(entries.begin(), entries.end());
    std::vector<Vertex> verts, parents;
    for (auto [v, p] : entries) {
      verts.push_back(v);
      parents.push_back(p);
    }
    out.emplace_back(std::move(verts), std::move(parents));
  }
  return out;
}

std::string canonicalForm(const LabelledTree& tree) {
  auto kids = tree.childIndices();
  std::function<std::string(int)> code = [&](int v) {
    std::vector<std::string> parts;
    for (int c : kids[v]) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    return s + ")";
  };
  return code(tree.indexOf(tree.root()));
}

bool isLinear(const LabelledTree& tree) {
  for (const auto& k : tree.childIndices())
    if (k.size() > 1) return false;
  return true;
}

}  // namespace elemdiff
