#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "elemdiff/rational.hpp"

namespace elemdiff {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

/// Deterministic Miller-Rabin for 64-bit integers.
bool isPrime64(std::uint64_t n);

/// Arithmetic modulo a prime below 2^63. The Mersenne prime 2^61-1 uses a
/// shift-and-fold reduction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a ? p_ - a : 0; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    if (mersenne_) {
      std::uint64_t lo = static_cast<std::uint64_t>(prod) & p_;
      std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
      std::uint64_t s = lo + hi;
      return s >= p_ ? s - p_ : s;
    }
    return static_cast<std::uint64_t>(prod % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t fromSigned(std::int64_t x) const noexcept {
    if (x >= 0) return static_cast<std::uint64_t>(x) % p_;
    std::uint64_t r = static_cast<std::uint64_t>(-(x + 1)) % p_;
    return p_ - 1 - r;
  }
  /// Throws ArgumentError if the denominator vanishes modulo p.
  std::uint64_t fromRational(const Rational& q) const;

 private:
  std::uint64_t p_;
  bool mersenne_;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Incremental row echelon modulo p. Rows are processed in order; a row that
/// is independent of the earlier pivot rows becomes a pivot, so pivotRows is
/// the greedy (lexicographically first) maximal independent set.
struct EchelonResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivotRows;
  std::vector<std::size_t> pivotCols;  // pivotCols[i] pairs with pivotRows[i]
  std::vector<std::size_t> dependentRows;
  /// relations[i] * M == 0 (mod p), with coefficient 1 on dependentRows[i]
  /// and 0 on every other dependent row. Only filled when requested.
  std::vector<std::vector<std::uint64_t>> relations;
};

EchelonResult rowEchelonModP(const IntMatrix& m, const PrimeField& field, bool trackRelations);

/// Determinant of a square integer matrix modulo p by column-pivoted
/// elimination. A nonzero result proves the integer determinant is nonzero.
std::uint64_t determinantModP(const IntMatrix& square, const PrimeField& field);

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
std::size_t bareissRank(const IntMatrix& m);

/// Smallest-height fraction r/s with r = a*s (mod p), |r|, s <= sqrt(p/2).
std::optional<Rational> rationalReconstruct(std::uint64_t a, std::uint64_t p);

}  // namespace elemdiff
