#include "elemdiff/modular.hpp"

#include <cmath>
#include <utility>

#include "elemdiff/error.hpp"

namespace elemdiff {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool isPrime64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), mersenne_(p == kDefaultPrime) {
  if (p >= (std::uint64_t{1} << 63) || !isPrime64(p)) throw ArgumentError("modulus must be a prime below 2^63");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw ArgumentError("inverse of zero modulo p");
  return pow(a % p_, p_ - 2);
}

std::uint64_t PrimeField::fromRational(const Rational& q) const {
  auto reduce = [&](const BigInt& z) {
    BigInt r = z % BigInt(std::to_string(p_));
    if (r < 0) r += BigInt(std::to_string(p_));
    return std::stoull(r.get_str());
  };
  std::uint64_t den = reduce(q.get_den());
  if (den == 0) throw ArgumentError("denominator vanishes modulo p");
  return mul(reduce(q.get_num()), inv(den));
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

EchelonResult rowEchelonModP(const IntMatrix& m, const PrimeField& F, bool trackRelations) {
  const std::size_t rows = m.rows(), cols = m.cols();
  EchelonResult out;
  std::vector<std::vector<std::uint64_t>> basis;  // normalized pivot rows
  std::vector<std::vector<std::uint64_t>> combos;  // their combination of original rows
  std::vector<std::uint64_t> vec(cols), combo;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) vec[c] = F.fromSigned(m(r, c));
    if (trackRelations) {
      combo.assign(rows, 0);
      combo[r] = 1;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::uint64_t factor = vec[out.pivotCols[i]];
      if (factor == 0) continue;
      const auto& b = basis[i];
      for (std::size_t c = out.pivotCols[i]; c < cols; ++c)
        if (b[c]) vec[c] = F.sub(vec[c], F.mul(factor, b[c]));
      if (trackRelations) {
        const auto& bc = combos[i];
        for (std::size_t k = 0; k < r; ++k)
          if (bc[k]) combo[k] = F.sub(combo[k], F.mul(factor, bc[k]));
      }
    }
    std::size_t lead = 0;
    while (lead < cols && vec[lead] == 0) ++lead;
    if (lead == cols) {
      out.dependentRows.push_back(r);
      if (trackRelations) out.relations.push_back(combo);
      continue;
    }
    const std::uint64_t scale = F.inv(vec[lead]);
    for (std::size_t c = lead; c < cols; ++c) vec[c] = F.mul(vec[c], scale);
    if (trackRelations)
      for (std::size_t k = 0; k <= r; ++k) combo[k] = F.mul(combo[k], scale);
    basis.push_back(vec);
    if (trackRelations) combos.push_back(combo);
    out.pivotRows.push_back(r);
    out.pivotCols.push_back(lead);
  }
  out.rank = basis.size();
  return out;
}

std::uint64_t determinantModP(const IntMatrix& square, const PrimeField& F) {
  const std::size_t n = square.rows();
  if (square.cols() != n) throw ArgumentError("determinant of a non-square matrix");
  // Column-major storage, pivot search down each column.
  std::vector<std::vector<std::uint64_t>> col(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) col[j][i] = F.fromSigned(square(i, j));
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && col[k][piv] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(col[j][k], col[j][piv]);
      det = F.neg(det);
    }
    const std::uint64_t p = col[k][k];
    det = F.mul(det, p);
    const std::uint64_t pinv = F.inv(p);
    for (std::size_t j = k + 1; j < n; ++j) {
      const std::uint64_t factor = F.mul(col[j][k], pinv);
      if (factor == 0) continue;
      for (std::size_t i = k + 1; i < n; ++i)
        if (col[k][i]) col[j][i] = F.sub(col[j][i], F.mul(factor, col[k][i]));
    }
  }
  return det;
}

std::size_t bareissRank(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m(i, j));
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::optional<Rational> rationalReconstruct(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on (p, a), stopping once the remainder drops below the bound.
  const BigInt bound = BigInt(static_cast<unsigned long>(std::sqrt(static_cast<long double>(p) / 2)));
  BigInt r0 = BigInt(std::to_string(p)), r1 = BigInt(std::to_string(a));
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  if (gcd(r1, t1) != 1) return std::nullopt;
  return out;
}

}  // namespace elemdiff
