#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "puro/macaulay.hpp"

// Exact integer matrices at desk scale: fraction-free rank over the
// rationals, rank over F_p, determinants, and the Smith normal form whose
// elementary divisors locate the primes where ranks drop.

namespace puro {

class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
inline int rank_rational(IntMat m) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        BigInt num = m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c);
        m.at(r, c) = num / prev;  // exact division per Bareiss
      }
      m.at(r, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

/// Determinant of a square matrix, fraction-free.
inline BigInt determinant(IntMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const int n = m.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) { pivot = r; break; }
      if (pivot < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(k, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        m.at(r, c) = (m.at(k, k) * m.at(r, c) - m.at(r, k) * m.at(k, c)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

/// Rank over F_p (p prime, p < 2^31).
inline int rank_mod_p(const IntMat& m, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: p must be prime");
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      BigInt v = m.at(r, c) % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      a[r][c] = v.convert_to<std::uint64_t>();
    }
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  auto powmod = [&](std::uint64_t base, std::uint64_t e) {
    std::uint64_t result = 1;
    while (e) {
      if (e & 1) result = mulmod(result, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    std::uint64_t inv = powmod(a[rank][col], p - 2);
    for (int c = col; c < cols; ++c) a[rank][c] = mulmod(a[rank][c], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      std::uint64_t f = a[r][col];
      for (int c = col; c < cols; ++c) {
        std::uint64_t sub = mulmod(f, a[rank][c]);
        a[r][c] = (a[r][c] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

/// Nonzero elementary divisors d1 | d2 | ... of the Smith normal form.
inline std::vector<BigInt> elementary_divisors(IntMat m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<BigInt> divisors;
  int t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero entry of smallest absolute value in the remaining block
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        if (m.at(r, c) == 0) continue;
        BigInt v = abs(m.at(r, c));
        if (pr < 0 || v < best) { best = v; pr = r; pc = c; }
      }
    if (pr < 0) break;
    for (int c = 0; c < cols; ++c) std::swap(m.at(pr, c), m.at(t, c));
    for (int r = 0; r < rows; ++r) std::swap(m.at(r, pc), m.at(r, t));

    bool clean = true;
    for (int r = t + 1; r < rows; ++r) {
      BigInt q = m.at(r, t) / m.at(t, t);
      if (q != 0)
        for (int c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
      if (m.at(r, t) != 0) clean = false;
    }
    for (int c = t + 1; c < cols; ++c) {
      BigInt q = m.at(t, c) / m.at(t, t);
      if (q != 0)
        for (int r = t; r < rows; ++r) m.at(r, c) -= q * m.at(r, t);
      if (m.at(t, c) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repeat with them

    // pivot must divide every remaining entry; if not, absorb a witness row
    bool divides_all = true;
    for (int r = t + 1; r < rows && divides_all; ++r)
      for (int c = t + 1; c < cols && divides_all; ++c)
        if (m.at(r, c) % m.at(t, t) != 0) {
          for (int cc = t; cc < cols; ++cc) m.at(t, cc) += m.at(r, cc);
          divides_all = false;
        }
    if (!divides_all) continue;

    divisors.push_back(abs(m.at(t, t)));
    ++t;
  }
  return divisors;
}

}  // namespace puro
