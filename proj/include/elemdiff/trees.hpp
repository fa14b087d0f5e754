#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elemdiff/permutation.hpp"

namespace elemdiff {

using Vertex = int;
inline constexpr Vertex kRoot = 0;
inline constexpr int kMaxEnumeratedTreeSize = 8;

/// Rooted tree on a finite set of positive vertex labels, stored as a parent
/// map. Most of the library works with *standard* trees whose vertex set is
/// exactly [n]; grafting and B+ also produce trees on arbitrary label sets.
class LabelledTree {
 public:
  /// Standard tree: parent[v-1] is the parent of v, kRoot marks the root.
  explicit LabelledTree(std::vector<Vertex> parent);
  /// Tree on `vertices` (strictly ascending); parent[i] belongs to vertices[i].
  LabelledTree(std::vector<Vertex> vertices, std::vector<Vertex> parent);

  static LabelledTree singleton(Vertex v);

  int size() const noexcept { return static_cast<int>(vertices_.size()); }
  bool isStandard() const noexcept { return standard_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Vertex>& parents() const noexcept { return parent_; }
  Vertex root() const noexcept { return root_; }

  bool contains(Vertex v) const;
  /// Position of v in vertices(); throws ArgumentError if absent.
  int indexOf(Vertex v) const;
  Vertex parentOf(Vertex v) const { return parent_[indexOf(v)]; }
  /// Children of v in ascending order (C_v).
  std::vector<Vertex> children(Vertex v) const;
  /// childIndices()[i] lists positions of the children of vertices()[i].
  std::vector<std::vector<int>> childIndices() const;
  /// The subtree made of v and every vertex above it.
  LabelledTree subtree(Vertex v) const;

  /// "[p1,...,pn]" for standard trees, "{v:p,...}" otherwise.
  std::string toString() const;
  static LabelledTree parse(std::string_view text);

  auto operator<=>(const LabelledTree& other) const {
    if (auto c = vertices_ <=> other.vertices_; c != 0) return c;
    return parent_ <=> other.parent_;
  }
  bool operator==(const LabelledTree& other) const {
    return vertices_ == other.vertices_ && parent_ == other.parent_;
  }

 private:
  void validate();

  std::vector<Vertex> vertices_;
  std::vector<Vertex> parent_;
  Vertex root_ = kRoot;
  bool standard_ = true;
};

/// Outcome of the edge-retargeting action: the children set of every vertex
/// v becomes sigma(C_v) and sigma(root) loses its parent. The graph may be
/// disconnected (an aromatic forest), in which case isTree is false.
struct RetargetResult {
  std::vector<Vertex> parent;  // parent[v-1], kRoot for sigma(root)
  bool isTree = false;
  std::optional<LabelledTree> tree;
};

/// RT(n) in lexicographic order of parent arrays; |RT(n)| = n^(n-1).
std::vector<LabelledTree> enumerateTrees(int n);

/// Vertex relabelling: vertex v is renamed sigma(v).
LabelledTree relabel(const LabelledTree& tree, const Permutation& sigma);

/// sigma.tau with E_sigma = {(v, sigma(w)) : w child of v}.
RetargetResult retarget(const LabelledTree& tree, const Permutation& sigma);
/// The same action on a raw (possibly aromatic) parent map.
RetargetResult retarget(std::span<const Vertex> parent, const Permutation& sigma);

/// Bijection sigma with retarget(a, sigma) == b; requires equal multi-indices.
/// Children are matched in ascending label order.
Permutation findSigma(const LabelledTree& a, const LabelledTree& b);

/// B+ with root r over the given parts (pairwise disjoint vertex sets).
LabelledTree bplus(Vertex r, std::span<const LabelledTree> parts);

/// Grafting product: one summand per vertex v of `base`, attaching the root
/// of `branch` below v. Summands follow the ascending order of v.
std::vector<LabelledTree> graftSum(const LabelledTree& branch, const LabelledTree& base);

/// Code of the unlabelled shape: "(" + sorted child codes + ")".
std::string canonicalForm(const LabelledTree& tree);

bool isLinear(const LabelledTree& tree);

/// Weak connectivity of a parent map with exactly one kRoot entry.
bool isConnectedParentMap(std::span<const Vertex> parent);

}  // namespace elemdiff
