#pragma once

#include <span>
#include <vector>

#include "elemdiff/relations.hpp"
#include "elemdiff/trees.hpp"

namespace elemdiff {

/// A tree with one of ell colours per vertex, stored as the minimal element
/// of its orbit under simultaneous relabelling of vertices and labels.
struct LabelledObject {
  LabelledTree base;
  std::vector<int> labels;  // labels[v-1] in [1, ell]
  int ell = 1;

  /// k_i = number of vertices labelled i.
  std::vector<int> multiplicities() const;
  auto operator<=>(const LabelledObject&) const = default;
};

/// Orbit-minimal representative; the order compares parent arrays first,
/// then label vectors. Exhaustive minimum over S_n (n <= 6).
LabelledObject canonicalizeLabelled(const LabelledTree& base, std::span<const int> labels, int ell);

/// phi_*: labels mapped through phi (phi[i-1] in [1, ellTarget]), re-canonicalized.
LabelledObject identify(std::span<const int> phi, int ellTarget, const LabelledObject& object);

/// L^{k_1..k_ell}(RT)(n) as sorted canonical representatives.
std::vector<LabelledObject> enumerateLabelled(int n, std::span<const int> multiplicities);

/// (1/n!) sum_g fix(g on RT(n)) * fix(g on labellings with these multiplicities).
std::size_t burnsideCount(int n, std::span<const int> multiplicities);

/// Dimension of the span of F^{k_1..k_ell} over the labelled representatives,
/// with the same two-sided certificate as dimensionW.
DimensionResult dimensionLabelled(int d, int n, std::span<const int> multiplicities,
                                  const DimensionOptions& options = {});

std::vector<EvalRow> labelledRows(const std::vector<LabelledObject>& objects);

}  // namespace elemdiff
