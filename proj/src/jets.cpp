#include "elemdiff/jets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace elemdiff {

MonomialTable::MonomialTable(int d, int D) : d_(d), D_(D) {
  if (d < 1 || D < 0) throw ArgumentError("monomial table needs d >= 1 and D >= 0");
  if (d > 6 || D > 40) throw SizeLimitError("monomial table too large");
  std::vector<int> alpha(d, 0);
  for (int deg = 0; deg <= D; ++deg) {
    // Exponents of total degree deg in descending lexicographic order.
    std::function<void(int, int)> rec = [&](int i, int remaining) {
      if (i == d - 1) {
        alpha[i] = remaining;
        exponents_.push_back(alpha);
        degrees_.push_back(deg);
        return;
      }
      for (int a = remaining; a >= 0; --a) {
        alpha[i] = a;
        rec(i + 1, remaining - a);
      }
    };
    rec(0, deg);
  }
  int stride = 1;
  for (int i = 0; i < d; ++i) stride *= D + 1;
  lookup_.assign(stride, -1);
  auto encode = [&](const std::vector<int>& e) {
    int code = 0;
    for (int x : e) code = code * (D + 1) + x;
    return code;
  };
  for (int i = 0; i < count(); ++i) lookup_[encode(exponents_[i])] = i;

  const int m = count();
  product_.assign(m * m, -1);
  std::vector<int> sum(d);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (degrees_[a] + degrees_[b] > D) continue;
      for (int i = 0; i < d; ++i) sum[i] = exponents_[a][i] + exponents_[b][i];
      product_[a * m + b] = lookup_[encode(sum)];
    }
  derivative_.assign(m * d, {0, 0});
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < d; ++i) {
      int e = exponents_[a][i];
      if (e == 0) continue;
      auto lowered = exponents_[a];
      --lowered[i];
      derivative_[a * d + i] = {lookup_[encode(lowered)], e};
    }
}

int MonomialTable::indexOf(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != d_) throw ArgumentError("exponent length differs from dimension");
  int total = 0, code = 0;
  for (int x : alpha) {
    if (x < 0) throw ArgumentError("negative exponent");
    total += x;
    code = code * (D_ + 1) + std::min(x, D_);
  }
  if (total > D_) return -1;
  return lookup_[code];
}

std::shared_ptr<const MonomialTable> MonomialTable::get(int d, int D) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{d, D}];
  if (!slot) slot = std::make_shared<const MonomialTable>(d, D);
  return slot;
}

IntJet toIntJet(const Jet& jet) {
  IntJet out(jet.dimension(), jet.degree());
  for (int j = 1; j <= jet.dimension(); ++j) {
    const auto& src = jet.component(j);
    for (int i = 0; i < src.table().count(); ++i) {
      const Rational& q = src.coefficientAt(i);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ArgumentError("jet coefficient is not a machine integer");
      out.component(j).setCoefficientAt(i, q.get_num().get_si());
    }
  }
  return out;
}

Jet toRationalJet(const IntJet& jet) {
  Jet out(jet.dimension(), jet.degree());
  for (int j = 1; j <= jet.dimension(); ++j) {
    const auto& src = jet.component(j);
    for (int i = 0; i < src.table().count(); ++i)
      out.component(j).setCoefficientAt(i, Rational(static_cast<long>(src.coefficientAt(i))));
  }
  return out;
}

}  // namespace elemdiff
