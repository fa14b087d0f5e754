#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elemdiff/permutation.hpp"
#include "elemdiff/rational.hpp"

namespace elemdiff {

using CycleType = std::vector<int>;  // non-increasing, includes fixed points

struct ConjugacyClass {
  CycleType type;
  Permutation representative;
  std::uint64_t size = 0;
};

/// Classes of S_n ordered by the number of transpositions needed, then by
/// the number of non-trivial cycles. For n = 5 this is
/// id, (1 2), (1 2 3), (1 2)(3 4), (1 2 3 4), (1 2)(3 4 5), (1 2 3 4 5).
/// Representatives place the non-trivial cycles on 1, 2, ... shortest first.
std::vector<ConjugacyClass> conjugacyClasses(int n);

/// Class function on S_n, one value per conjugacy class (order above).
struct CharacterRow {
  std::string name;
  int n = 0;
  std::vector<CycleType> classes;
  std::vector<long long> values;

  long long at(const CycleType& type) const;
  long long at(const Permutation& g) const { return at(g.cycleType()); }
};

/// Number of trees of RT(n) fixed by vertex relabelling (n <= 5).
CharacterRow chiInfinity(int n);
/// sign(g) * #fixed points on S_{2d+1}.
CharacterRow chiV(int d);
/// chiInfinity(5) - chiV(2).
CharacterRow chi2();
CharacterRow difference(const CharacterRow& a, const CharacterRow& b, std::string name);

/// (1/n!) sum over classes of |class| a(g) b(g).
Rational innerProduct(const CharacterRow& a, const CharacterRow& b);

struct SubgroupClass {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted
  std::size_t order = 0;
  std::size_t conjugates = 0;  // size of the conjugacy class of subgroups
  /// Orbits of the representative on [n], e.g. "{1,2,3,4}{5}".
  std::string orbits;
};

/// All subgroups of S_n up to conjugacy (n <= 6), grown from the trivial group
/// by adjoining one element at a time. Sorted by order, then orbit pattern.
std::vector<SubgroupClass> subgroupClasses(int n);

/// Permutation character of S_n acting on the left cosets of G.
CharacterRow cosetCharacter(const SubgroupClass& group, int n);

struct ScanEntry {
  SubgroupClass group;
  CharacterRow character;
  bool belowBound = false;
  bool equalOnSquareClass = false;  // chi((1 2)(3 4)) == chi((1 2 3 4)) >= 1
  bool vanishes = false;            // chi((1 2)(3 4 5)) == chi((1 2 3 4 5)) == 0
  bool survives = false;
  long long finalLhs = 0;  // 2 * chi((1 2 3))
  long long finalRhs = 0;  // bound((1 2 3))
  bool contradiction = false;
};

struct ScanReport {
  CharacterRow bound;
  std::vector<ScanEntry> entries;
  std::vector<std::size_t> survivors;
};

/// Filters the subgroup classes of S_5 by the orbit constraints for a stable
/// basis against `bound` (chi2() by default) and runs the final inequality on
/// each survivor.
ScanReport constraintScan(const CharacterRow& bound);
ScanReport constraintScan();

}  // namespace elemdiff
