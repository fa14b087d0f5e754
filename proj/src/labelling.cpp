#include "elemdiff/labelling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "elemdiff/error.hpp"
#include "elemdiff/groups.hpp"

namespace elemdiff {

namespace {

constexpr int kMaxCanonicalSize = 6;

const std::vector<Permutation>& permutationsOf(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (slot.empty()) slot = allPermutations(n);
  return slot;
}

}  // namespace

std::vector<int> LabelledObject::multiplicities() const {
  std::vector<int> k(ell, 0);
  for (int l : labels) ++k[l - 1];
  return k;
}

LabelledObject canonicalizeLabelled(const LabelledTree& base, std::span<const int> labels, int ell) {
  const int n = base.size();
  if (!base.isStandard() || static_cast<int>(labels.size()) != n) throw ArgumentError("one label per vertex is required");
  if (n > kMaxCanonicalSize) throw SizeLimitError("labelled canonicalization supports n <= 6");
  for (int l : labels)
    if (l < 1 || l > ell) throw ArgumentError("label out of range");
  const auto& parent = base.parents();
  std::vector<int> bestParent, bestLabels, p(n), l(n);
  for (const auto& sigma : permutationsOf(n)) {
    for (int v = 1; v <= n; ++v) {
      const int w = sigma(v) - 1;
      p[w] = parent[v - 1] == kRoot ? kRoot : sigma(parent[v - 1]);
      l[w] = labels[v - 1];
    }
    if (bestParent.empty() || std::tie(p, l) < std::tie(bestParent, bestLabels)) {
      bestParent = p;
      bestLabels = l;
    }
  }
  return LabelledObject{LabelledTree(std::move(bestParent)), std::move(bestLabels), ell};
}

LabelledObject identify(std::span<const int> phi, int ellTarget, const LabelledObject& object) {
  if (static_cast<int>(phi.size()) != object.ell) throw ArgumentError("identification map must cover every label");
  std::vector<int> mapped;
  for (int l : object.labels) {
    int target = phi[l - 1];
    if (target < 1 || target > ellTarget) throw ArgumentError("identification map leaves the target label set");
    mapped.push_back(target);
  }
  return canonicalizeLabelled(object.base, mapped, ellTarget);
}

std::vector<LabelledObject> enumerateLabelled(int n, std::span<const int> multiplicities) {
  if (std::accumulate(multiplicities.begin(), multiplicities.end(), 0) != n)
    throw ArgumentError("label multiplicities must sum to n");
  for (int k : multiplicities)
    if (k < 0) throw ArgumentError("negative multiplicity");
  const int ell = static_cast<int>(multiplicities.size());
  std::vector<int> labels;
  for (int i = 0; i < ell; ++i) labels.insert(labels.end(), multiplicities[i], i + 1);
  std::set<LabelledObject> reps;
  for (const auto& t : enumerateTrees(n)) {
    // Only the labelling orbit under Aut-free relabelling matters: fixing the
    // tree and running over all label arrangements visits every orbit.
    auto arrangement = labels;
    do {
      reps.insert(canonicalizeLabelled(t, arrangement, ell));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  return {reps.begin(), reps.end()};
}

std::size_t burnsideCount(int n, std::span<const int> multiplicities) {
  if (std::accumulate(multiplicities.begin(), multiplicities.end(), 0) != n)
    throw ArgumentError("label multiplicities must sum to n");
  const auto trees = enumerateTrees(n);
  std::size_t total = 0;
  for (const auto& g : permutationsOf(n)) {
    std::size_t fixedTrees = 0;
    for (const auto& t : trees) fixedTrees += relabel(t, g) == t;
    if (!fixedTrees) continue;
    // Labellings fixed by g are constant on cycles: count ways to fill each
    // label's quota with whole cycles.
    auto type = g.cycleType();
    std::vector<int> quota(multiplicities.begin(), multiplicities.end());
    std::size_t fixedLabels = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == type.size()) {
        fixedLabels += std::all_of(quota.begin(), quota.end(), [](int q) { return q == 0; });
        return;
      }
      for (auto& q : quota) {
        if (q < type[i]) continue;
        q -= type[i];
        self(self, i + 1);
        q += type[i];
      }
    };
    rec(rec, 0);
    total += fixedTrees * fixedLabels;
  }
  return total / permutationsOf(n).size();
}

std::vector<EvalRow> labelledRows(const std::vector<LabelledObject>& objects) {
  std::vector<EvalRow> rows;
  for (const auto& o : objects) rows.push_back(EvalRow{o.base, o.labels});
  return rows;
}

DimensionResult dimensionLabelled(int d, int n, std::span<const int> multiplicities, const DimensionOptions& options) {
  checkDeskScale(d, n, options.allowLarge);
  const auto objects = enumerateLabelled(n, multiplicities);
  return dimensionOfRows(labelledRows(objects), static_cast<int>(multiplicities.size()), d, n, options);
}

}  // namespace elemdiff
