#include "elemdiff/differentials.hpp"

#include <limits>

namespace elemdiff {

namespace {

using Wide = __int128;

constexpr Wide kWideLimit = Wide(1) << 100;

Wide checkedMul(Wide a, Wide b) {
  Wide r = a * b;
  if (r > kWideLimit || r < -kWideLimit || (a != 0 && r / a != b))
    throw ContractViolation("integer overflow while evaluating at zero");
  return r;
}

struct RationalOps {
  using Acc = Rational;
  static Acc fromCoefficient(const Rational& q) { return q; }
  static Acc mul(const Acc& a, const Acc& b) { return a * b; }
};

struct IntOps {
  using Acc = Wide;
  static Acc fromCoefficient(std::int64_t q) { return q; }
  static Acc mul(Acc a, Acc b) { return checkedMul(a, b); }
};

template <class T, class Ops>
std::vector<typename Ops::Acc> valueAtZeroImpl(const LabelledTree& tree, std::span<const int> labels,
                                               std::span<const BasicJet<T>> inputs) {
  using Acc = typename Ops::Acc;
  const int n = tree.size();
  std::vector<const BasicJet<T>*> feed(n);
  if (labels.empty()) {
    if (static_cast<int>(inputs.size()) != n) throw ArgumentError("one input jet per vertex is required");
    for (int i = 0; i < n; ++i) feed[i] = &inputs[i];
  } else {
    if (static_cast<int>(labels.size()) != n) throw ArgumentError("one label per vertex is required");
    for (int i = 0; i < n; ++i) {
      if (labels[i] < 1 || labels[i] > static_cast<int>(inputs.size())) throw ArgumentError("label out of range");
      feed[i] = &inputs[labels[i] - 1];
    }
  }
  for (const auto* f : feed)
    if (!f->sameShape(*feed[0])) throw ArgumentError("input jets must share (d, D)");
  const int d = feed[0]->dimension();
  const auto& table = feed[0]->component(1).table();
  const auto kids = tree.childIndices();

  std::vector<long> factorial(table.degree() + 2, 1);
  for (std::size_t i = 1; i < factorial.size(); ++i) factorial[i] = factorial[i - 1] * static_cast<long>(i);

  // value[v][j]: component j (0-based) of F(tau_v) at zero.
  std::vector<std::vector<Acc>> value(n, std::vector<Acc>(d, Acc(0)));
  auto visit = [&](auto&& self, int v) -> void {
    const auto& cs = kids[v];
    for (int c : cs) self(self, c);
    const int k = static_cast<int>(cs.size());
    std::vector<int> j(k, 0);
    std::vector<int> hist(d);
    while (true) {
      Acc prod(1);
      std::fill(hist.begin(), hist.end(), 0);
      for (int i = 0; i < k && prod != 0; ++i) {
        prod = Ops::mul(prod, value[cs[i]][j[i]]);
        ++hist[j[i]];
      }
      if (prod != 0) {
        const int mono = table.indexOf(hist);
        if (mono >= 0) {
          long weight = 1;
          for (int h : hist) weight *= factorial[h];
          for (int comp = 0; comp < d; ++comp) {
            const auto& coeff = feed[v]->component(comp + 1).coefficientAt(mono);
            if (coeff == 0) continue;
            value[v][comp] += Ops::mul(prod, Ops::mul(Acc(weight), Ops::fromCoefficient(coeff)));
          }
        }
      }
      int pos = 0;
      while (pos < k && j[pos] == d - 1) j[pos++] = 0;
      if (pos == k) break;
      ++j[pos];
    }
  };
  const int root = tree.indexOf(tree.root());
  visit(visit, root);
  return value[root];
}

}  // namespace

std::vector<Rational> valueAtZero(const LabelledTree& tree, std::span<const int> labels, std::span<const Jet> inputs) {
  return valueAtZeroImpl<Rational, RationalOps>(tree, labels, inputs);
}

std::vector<std::int64_t> valueAtZero(const LabelledTree& tree, std::span<const int> labels,
                                      std::span<const IntJet> inputs) {
  auto wide = valueAtZeroImpl<std::int64_t, IntOps>(tree, labels, inputs);
  std::vector<std::int64_t> out;
  for (Wide w : wide) {
    if (w > std::numeric_limits<std::int64_t>::max() || w < std::numeric_limits<std::int64_t>::min())
      throw ContractViolation("value at zero exceeds 64-bit range");
    out.push_back(static_cast<std::int64_t>(w));
  }
  return out;
}

std::vector<Jet> geofixedWitness(const LabelledTree& tree, Vertex v, int exponent) {
  const int N = exponent > 0 ? exponent : tree.size();
  const int D = tree.size() * std::max(N, static_cast<int>(tree.size()));
  const auto kids = tree.children(v);
  const int k = static_cast<int>(kids.size());
  const std::vector<int> yk{0, k}, xN{N, 0};
  Jet special(2, D);
  special.component(1) = Polynomial::monomial(2, D, yk);
  special.component(2) = Polynomial::monomial(2, D, xN);
  const Jet plain = Jet::monomialField(2, D, xN, 1);
  std::vector<Jet> out;
  for (Vertex u : tree.vertices()) {
    bool marked = u == v || std::find(kids.begin(), kids.end(), u) != kids.end();
    out.push_back(marked ? special : plain);
  }
  return out;
}

}  // namespace elemdiff
