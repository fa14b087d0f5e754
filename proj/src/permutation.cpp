#include "elemdiff/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "elemdiff/error.hpp"

namespace elemdiff {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw ArgumentError("permutation of an empty set");
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x]) throw ArgumentError("images do not form a bijection of [n]");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::fromCycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i];
      if (a < 1 || a > n || used[a]) throw ArgumentError("invalid cycle notation");
      used[a] = true;
      img[a - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::cycleType() const {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> type;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j - 1]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycleType())
    if (len % 2 == 0) s = -s;
  return s;
}

int Permutation::fixedPoints() const {
  int count = 0;
  for (int i = 1; i <= size(); ++i) count += images_[i - 1] == i;
  return count;
}

std::string Permutation::cycleString() const {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (seen[i] || images_[i - 1] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = images_[j - 1]) {
      seen[j] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ArgumentError("composing permutations of different sizes");
  std::vector<int> img(b.images_.size());
  for (int i = 1; i <= b.size(); ++i) img[i - 1] = a(b(i));
  return Permutation(std::move(img));
}

std::vector<Permutation> allPermutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace elemdiff
