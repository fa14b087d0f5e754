#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "elemdiff/permutation.hpp"

namespace elemdiff {

class LabelledTree;

inline constexpr int kMaxEnumeratedMultiIndexSize = 12;

/// Arity function phi on [n] with sum phi(v) = n - 1.
class MultiIndex {
 public:
  /// arity[v-1] = phi(v); throws ArgumentError if the populated condition fails.
  explicit MultiIndex(std::vector<int> arity);

  int size() const noexcept { return static_cast<int>(arity_.size()); }
  int arity(int v) const { return arity_[v - 1]; }
  const std::vector<int>& arities() const noexcept { return arity_; }

  /// Monomial form z[(1,2)(2,0)(3,0)].
  std::string toString() const;
  /// Accepts the monomial form or a plain comma list "2,0,0".
  static MultiIndex parse(std::string_view text);

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> arity_;
};

MultiIndex projectPi(const LabelledTree& tree);

/// MI(n): weak compositions of n-1 into n parts, lexicographic order.
std::vector<MultiIndex> enumerateMI(int n);

bool isLinearMI(const MultiIndex& m);

/// phi'(sigma(v)) = phi(v).
MultiIndex relabel(const MultiIndex& m, const Permutation& sigma);

/// Label of the S_n-orbit: arities sorted in non-increasing order, "2,0,0".
std::string orbitCode(const MultiIndex& m);

/// A tree whose projection is m (children attached greedily in label order).
LabelledTree witnessTree(const MultiIndex& m);

}  // namespace elemdiff
