#pragma once

#include <compare>
#include <string>
#include <vector>

namespace elemdiff {

/// Bijection of [n] = {1,...,n}. Composition follows function notation:
/// (a * b)(i) = a(b(i)).
class Permutation {
 public:
  /// images[i-1] is the image of i; throws ArgumentError unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Cycles use 1-based points, e.g. {{1,2},{3,4,5}}.
  static Permutation fromCycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v - 1]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  int sign() const;
  int fixedPoints() const;
  /// Cycle lengths (including fixed points) in non-increasing order.
  std::vector<int> cycleType() const;
  /// "(1 2)(3 4 5)", or "id".
  std::string cycleString() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All of S_n in lexicographic order of the image arrays.
std::vector<Permutation> allPermutations(int n);

}  // namespace elemdiff
