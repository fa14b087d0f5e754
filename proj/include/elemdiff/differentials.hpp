#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "elemdiff/error.hpp"
#include "elemdiff/jets.hpp"
#include "elemdiff/multiindex.hpp"
#include "elemdiff/trees.hpp"

namespace elemdiff {

namespace detail {

template <class T>
void requireCommonShape(std::span<const BasicJet<T>* const> inputs) {
  for (const auto* f : inputs)
    if (!f->sameShape(*inputs[0])) throw ArgumentError("input jets must share (d, D)");
}

// F(tau) where inputs[i] feeds tree.vertices()[i].
template <class T>
BasicJet<T> evalFImpl(const LabelledTree& tree, std::span<const BasicJet<T>* const> inputs) {
  if (static_cast<int>(inputs.size()) != tree.size()) throw ArgumentError("one input jet per vertex is required");
  requireCommonShape<T>(inputs);
  const int d = inputs[0]->dimension();
  const int D = inputs[0]->degree();
  const auto kids = tree.childIndices();

  auto eval = [&](auto&& self, int v) -> BasicJet<T> {
    const auto& f = *inputs[v];
    const auto& cs = kids[v];
    const int k = static_cast<int>(cs.size());
    if (k == 0) return f;
    std::vector<BasicJet<T>> outs;
    outs.reserve(k);
    for (int c : cs) outs.push_back(self(self, c));
    BasicJet<T> result(d, D);
    std::vector<int> j(k, 1);
    while (true) {
      auto prod = outs[0].component(j[0]);
      for (int i = 1; i < k; ++i) prod = prod * outs[i].component(j[i]);
      if (!prod.isZero()) {
        for (int c = 1; c <= d; ++c) {
          auto der = f.component(c);
          for (int i = 0; i < k && !der.isZero(); ++i) der = der.partial(j[i]);
          if (!der.isZero()) result.component(c) += prod * der;
        }
      }
      int pos = 0;
      while (pos < k && j[pos] == d) j[pos++] = 1;
      if (pos == k) break;
      ++j[pos];
    }
    return result;
  };
  return eval(eval, tree.indexOf(tree.root()));
}

template <class T>
std::vector<const BasicJet<T>*> pointers(std::span<const BasicJet<T>> jets) {
  std::vector<const BasicJet<T>*> out;
  for (const auto& j : jets) out.push_back(&j);
  return out;
}

}  // namespace detail

/// Elementary differential F(tau)(f^1, ..., f^n); inputs[i] is attached to
/// tree.vertices()[i] (vertex i+1 for a standard tree).
template <class T>
BasicJet<T> evalF(const LabelledTree& tree, std::span<const BasicJet<T>> inputs) {
  auto ptrs = detail::pointers(inputs);
  return detail::evalFImpl<T>(tree, ptrs);
}

/// F with vertex v fed by inputs[labels[v-1] - 1].
template <class T>
BasicJet<T> evalFLabelled(const LabelledTree& tree, std::span<const int> labels, std::span<const BasicJet<T>> inputs) {
  if (static_cast<int>(labels.size()) != tree.size()) throw ArgumentError("one label per vertex is required");
  std::vector<const BasicJet<T>*> ptrs;
  for (int l : labels) {
    if (l < 1 || l > static_cast<int>(inputs.size())) throw ArgumentError("label out of range");
    ptrs.push_back(&inputs[l - 1]);
  }
  return detail::evalFImpl<T>(tree, ptrs);
}

/// G(m)(f_1, ..., f_n) = prod f_i^(phi(i)) for scalar one-variable inputs.
template <class T>
BasicPolynomial<T> evalG(const MultiIndex& m, std::span<const BasicPolynomial<T>> inputs) {
  if (static_cast<int>(inputs.size()) != m.size()) throw ArgumentError("one input per vertex is required");
  for (const auto& f : inputs)
    if (f.dimension() != 1) throw ArgumentError("G is defined in dimension 1 only");
  auto result = BasicPolynomial<T>::constant(1, inputs[0].degree(), T(1));
  for (int v = 1; v <= m.size(); ++v) {
    auto factor = inputs[v - 1];
    for (int k = 0; k < m.arity(v); ++k) factor = factor.partial(1);
    result = result * factor;
  }
  return result;
}

/// Witt product f <| g = sum_i g_i d_i f.
template <class T>
BasicJet<T> preLie(const BasicJet<T>& f, const BasicJet<T>& g) {
  if (!f.sameShape(g)) throw ArgumentError("pre-Lie product of jets with different shapes");
  BasicJet<T> out(f.dimension(), f.degree());
  for (int i = 1; i <= f.dimension(); ++i) {
    const auto& gi = g.component(i);
    if (gi.isZero()) continue;
    for (int c = 1; c <= f.dimension(); ++c) {
      auto der = f.component(c).partial(i);
      if (!der.isZero()) out.component(c) += gi * der;
    }
  }
  return out;
}

/// f_{o1} <| (f_{o2} <| ( ... <| (f_{o_{m-1}} <| f_m))). `order` must be a
/// permutation of [m-1] (1-based indices into inputs).
template <class T>
BasicJet<T> leftChain(std::span<const int> order, std::span<const BasicJet<T>> inputs) {
  const int m = static_cast<int>(inputs.size());
  if (m < 1 || static_cast<int>(order.size()) != m - 1) throw ArgumentError("chain order must list inputs 1..m-1");
  std::vector<bool> seen(m, false);
  for (int o : order) {
    if (o < 1 || o >= m || seen[o]) throw ArgumentError("chain order must be a permutation of 1..m-1");
    seen[o] = true;
  }
  BasicJet<T> acc = inputs[m - 1];
  for (int i = m - 2; i >= 0; --i) acc = preLie(inputs[order[i] - 1], acc);
  return acc;
}

/// Standard polynomial identity s_{2k} evaluated on 2k+1 jets:
/// sum over sigma in S_{2k} of sign(sigma) times the left chain. Computed by
/// expanding along the first factor over subsets of [2k].
template <class T>
BasicJet<T> s2d(int k, std::span<const BasicJet<T>> inputs) {
  const int m = 2 * k;
  if (k < 1 || static_cast<int>(inputs.size()) != m + 1) throw ArgumentError("s_2d needs exactly 2d+1 inputs");
  if (m > 20) throw SizeLimitError("s_2d order too large");
  std::vector<std::optional<BasicJet<T>>> table(std::size_t{1} << m);
  table[0] = inputs[m];
  for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
    BasicJet<T> acc(inputs[0].dimension(), inputs[0].degree());
    int below = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      auto term = preLie(inputs[i], *table[mask & ~(1u << i)]);
      if (below % 2) acc -= term;
      else acc += term;
      ++below;
    }
    table[mask] = std::move(acc);
  }
  return *table.back();
}

/// Value at the origin of F(tau), read directly from Taylor coefficients:
/// derivatives only ever hit the raw inputs, so F(tau)(0) is a sum over
/// component assignments of products of (multi-index)! * coefficient.
/// Inputs are attached as in evalFLabelled (identity labels when empty).
std::vector<Rational> valueAtZero(const LabelledTree& tree, std::span<const int> labels, std::span<const Jet> inputs);
/// Same on integer jets; throws ContractViolation on int64 overflow.
std::vector<std::int64_t> valueAtZero(const LabelledTree& tree, std::span<const int> labels,
                                      std::span<const IntJet> inputs);

/// x^alpha e_component as a compact sweep element.
struct MonomialField {
  std::vector<int> alpha;
  int component = 1;
};

/// Input family separating tau from sigma.tau at vertex v (d = 2):
/// f = y^k e_x + x^N e_y on v and its k children, x^N e_x elsewhere.
/// N defaults to the tree size. D = n * max(N, n) exceeds the degree of every
/// product, so evaluations on these inputs are exact, never truncated.
std::vector<Jet> geofixedWitness(const LabelledTree& tree, Vertex v, int exponent = 0);

}  // namespace elemdiff
