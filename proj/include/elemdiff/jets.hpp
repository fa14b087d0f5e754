#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "elemdiff/error.hpp"
#include "elemdiff/rational.hpp"

namespace elemdiff {

/// Dense index of the monomials x^a in d variables with |a| <= D, in graded
/// order (degree first, then exponent vectors in descending lexicographic
/// order, so x comes before y). Index 0 is the constant monomial.
class MonomialTable {
 public:
  /// Shared, immutable table for (d, D); thread-safe.
  static std::shared_ptr<const MonomialTable> get(int d, int D);

  MonomialTable(int d, int D);

  int dimension() const noexcept { return d_; }
  int degree() const noexcept { return D_; }
  int count() const noexcept { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponent(int index) const { return exponents_[index]; }
  int totalDegree(int index) const { return degrees_[index]; }
  /// -1 when |alpha| > D.
  int indexOf(std::span<const int> alpha) const;
  /// Index of x^(a+b), or -1 when it exceeds the truncation degree.
  int product(int a, int b) const { return product_[a * count() + b]; }
  /// d/dx_dir (dir 1-based) of x^a = factor * x^(a - e_dir); factor 0 kills it.
  std::pair<int, int> derivative(int a, int dir) const { return derivative_[a * d_ + dir - 1]; }

 private:
  int d_;
  int D_;
  std::vector<std::vector<int>> exponents_;
  std::vector<int> degrees_;
  std::vector<int> lookup_;
  std::vector<int> product_;
  std::vector<std::pair<int, int>> derivative_;
};

/// Truncated polynomial in d variables: every stored monomial has total
/// degree <= D, products discard anything above D.
template <class T>
class BasicPolynomial {
 public:
  BasicPolynomial(int d, int D) : table_(MonomialTable::get(d, D)), coeffs_(table_->count(), T(0)) {}

  static BasicPolynomial constant(int d, int D, const T& c) {
    BasicPolynomial p(d, D);
    p.coeffs_[0] = c;
    return p;
  }
  /// c * x^alpha; zero if |alpha| > D.
  static BasicPolynomial monomial(int d, int D, std::span<const int> alpha, const T& c = T(1)) {
    BasicPolynomial p(d, D);
    if (static_cast<int>(alpha.size()) != d) throw ArgumentError("exponent length differs from dimension");
    if (int idx = p.table_->indexOf(alpha); idx >= 0) p.coeffs_[idx] = c;
    return p;
  }
  /// x_i, 1-based.
  static BasicPolynomial variable(int d, int D, int i) {
    std::vector<int> alpha(d, 0);
    if (i < 1 || i > d) throw ArgumentError("variable index out of range");
    alpha[i - 1] = 1;
    return monomial(d, D, alpha);
  }

  int dimension() const noexcept { return table_->dimension(); }
  int degree() const noexcept { return table_->degree(); }
  const MonomialTable& table() const noexcept { return *table_; }
  std::span<const T> coefficients() const noexcept { return coeffs_; }
  const T& coefficientAt(int index) const { return coeffs_[index]; }
  void setCoefficientAt(int index, T value) { coeffs_[index] = std::move(value); }
  T coefficient(std::span<const int> alpha) const {
    int idx = table_->indexOf(alpha);
    return idx < 0 ? T(0) : coeffs_[idx];
  }
  const T& valueAtZero() const { return coeffs_[0]; }

  bool isZero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    requireShape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    requireShape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  BasicPolynomial& operator*=(const T& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(const T& q, BasicPolynomial a) { return a *= q; }

  /// Truncated product.
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.requireShape(b);
    BasicPolynomial out(a.dimension(), a.degree());
    const auto& tab = *a.table_;
    const int m = tab.count();
    for (int i = 0; i < m; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < m; ++j) {
        if (b.coeffs_[j] == 0) continue;
        int k = tab.product(i, j);
        if (k >= 0) out.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  /// Exact partial derivative in direction dir (1-based).
  BasicPolynomial partial(int dir) const {
    if (dir < 1 || dir > dimension()) throw ArgumentError("derivative direction out of range");
    BasicPolynomial out(dimension(), degree());
    for (int i = 0; i < table_->count(); ++i) {
      if (coeffs_[i] == 0) continue;
      auto [target, factor] = table_->derivative(i, dir);
      if (factor) out.coeffs_[target] += T(factor) * coeffs_[i];
    }
    return out;
  }

  /// Sets the last variable to zero; result lives in d-1 variables.
  BasicPolynomial restrictLastVariable() const {
    if (dimension() < 2) throw ArgumentError("cannot restrict a one-variable polynomial");
    BasicPolynomial out(dimension() - 1, degree());
    for (int i = 0; i < table_->count(); ++i) {
      const auto& e = table_->exponent(i);
      if (e.back() != 0) continue;
      out.coeffs_[out.table_->indexOf(std::span<const int>(e.data(), e.size() - 1))] = coeffs_[i];
    }
    return out;
  }

  bool operator==(const BasicPolynomial& o) const {
    return dimension() == o.dimension() && degree() == o.degree() && coeffs_ == o.coeffs_;
  }

 private:
  void requireShape(const BasicPolynomial& o) const {
    if (dimension() != o.dimension() || degree() != o.degree())
      throw ArgumentError("polynomial shapes (d, D) differ");
  }

  std::shared_ptr<const MonomialTable> table_;
  std::vector<T> coeffs_;
};

/// Truncated polynomial vector field R^d -> R^d; components are 1-based.
template <class T>
class BasicJet {
 public:
  using Polynomial = BasicPolynomial<T>;

  BasicJet(int d, int D) : comps_(d, Polynomial(d, D)) {
    if (d < 1 || D < 0) throw ArgumentError("jet needs d >= 1 and D >= 0");
  }
  explicit BasicJet(std::vector<Polynomial> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw ArgumentError("jet without components");
    for (const auto& c : comps_)
      if (c.dimension() != dimension() || c.degree() != comps_[0].degree())
        throw ArgumentError("jet components must share (d, D) with d = number of components");
  }

  /// c * x^alpha * e_k.
  static BasicJet monomialField(int d, int D, std::span<const int> alpha, int k, const T& c = T(1)) {
    BasicJet j(d, D);
    j.component(k) = Polynomial::monomial(d, D, alpha, c);
    return j;
  }

  int dimension() const noexcept { return static_cast<int>(comps_.size()); }
  int degree() const noexcept { return comps_[0].degree(); }
  const Polynomial& component(int j) const { return comps_.at(j - 1); }
  Polynomial& component(int j) { return comps_.at(j - 1); }
  const std::vector<Polynomial>& components() const noexcept { return comps_; }

  std::vector<T> valueAtZero() const {
    std::vector<T> out;
    for (const auto& c : comps_) out.push_back(c.valueAtZero());
    return out;
  }
  bool isZero() const {
    for (const auto& c : comps_)
      if (!c.isZero()) return false;
    return true;
  }
  bool sameShape(const BasicJet& o) const { return dimension() == o.dimension() && degree() == o.degree(); }

  BasicJet& operator+=(const BasicJet& o) {
    requireShape(o);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
  }
  BasicJet& operator-=(const BasicJet& o) {
    requireShape(o);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
  }
  BasicJet& operator*=(const T& q) {
    for (auto& c : comps_) c *= q;
    return *this;
  }
  friend BasicJet operator+(BasicJet a, const BasicJet& b) { return a += b; }
  friend BasicJet operator-(BasicJet a, const BasicJet& b) { return a -= b; }
  friend BasicJet operator*(const T& q, BasicJet a) { return a *= q; }

  /// Projection W_d -> W_(d-1): last variable set to 0, last component dropped.
  BasicJet restrictLastVariable() const {
    std::vector<Polynomial> comps;
    for (int j = 0; j + 1 < dimension(); ++j) comps.push_back(comps_[j].restrictLastVariable());
    return BasicJet(std::move(comps));
  }

  bool operator==(const BasicJet& o) const { return comps_ == o.comps_; }

 private:
  void requireShape(const BasicJet& o) const {
    if (!sameShape(o)) throw ArgumentError("jet shapes (d, D) differ");
  }

  std::vector<Polynomial> comps_;
};

using Polynomial = BasicPolynomial<Rational>;
using Jet = BasicJet<Rational>;
using IntPolynomial = BasicPolynomial<std::int64_t>;
using IntJet = BasicJet<std::int64_t>;

template <class T>
BasicJet<T> add(const BasicJet<T>& a, const BasicJet<T>& b) { return a + b; }
template <class T>
BasicJet<T> scale(const T& q, const BasicJet<T>& a) { return q * a; }
template <class T>
BasicPolynomial<T> multiply(const BasicPolynomial<T>& u, const BasicPolynomial<T>& v) { return u * v; }
template <class T>
BasicPolynomial<T> partial(const BasicPolynomial<T>& u, int dir) { return u.partial(dir); }
template <class T>
std::vector<T> evalAtZero(const BasicJet<T>& u) { return u.valueAtZero(); }

/// All x^alpha e_k with |alpha| <= D; count d * C(D+d, d). Ordered by
/// component, then monomial index.
template <class T = Rational>
std::vector<BasicJet<T>> monomialBasis(int d, int D) {
  const auto table = MonomialTable::get(d, D);
  std::vector<BasicJet<T>> out;
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i < table->count(); ++i) out.push_back(BasicJet<T>::monomialField(d, D, table->exponent(i), k));
  return out;
}

IntJet toIntJet(const Jet& jet);  // throws ArgumentError on non-integral or oversized coefficients
Jet toRationalJet(const IntJet& jet);

}  // namespace elemdiff
