#pragma once

#include <random>
#include <vector>

#include "elemdiff/jets.hpp"

namespace testing {

// Coefficients in [-bound, bound] on monomials of degree <= maxDegree (all if < 0).
// Identities that differentiate computed jets only hold exactly when the true
// degree stays below the truncation, so those tests pass a small maxDegree.
inline elemdiff::Jet randomJet(std::mt19937_64& rng, int d, int D, int bound = 4, int maxDegree = -1) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  elemdiff::Jet j(d, D);
  for (int k = 1; k <= d; ++k) {
    const auto& tab = j.component(k).table();
    for (int i = 0; i < tab.count(); ++i)
      if (maxDegree < 0 || tab.totalDegree(i) <= maxDegree) j.component(k).setCoefficientAt(i, elemdiff::Rational(coeff(rng)));
  }
  return j;
}

inline std::vector<elemdiff::Jet> randomJets(std::mt19937_64& rng, int count, int d, int D, int bound = 4,
                                             int maxDegree = -1) {
  std::vector<elemdiff::Jet> out;
  for (int i = 0; i < count; ++i) out.push_back(randomJet(rng, d, D, bound, maxDegree));
  return out;
}

}  // namespace testing
