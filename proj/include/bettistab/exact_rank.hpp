#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include <gmpxx.h>

#include "matrix.hpp"

namespace bettistab {
namespace detail {

// Fraction-free (Bareiss) elimination over machine integers. Every stored
// value is an exact minor of the input, so the division below is exact.
// Returns the rank, or -1 when an intermediate no longer fits in 64 bits.
inline int bareiss_rank_i64(const IntegerMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);

  constexpr std::int64_t kLimit = INT64_MAX;
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (a[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c)
        std::swap(a[pivot * cols + c], a[rank * cols + c]);
    const std::int64_t p = a[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::int64_t head = a[r * cols + col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        __int128 t = static_cast<__int128>(p) * a[r * cols + c] -
                     static_cast<__int128>(head) * a[rank * cols + c];
        t /= prev;  // exact by the Bareiss identity
        if (t > kLimit || t < -kLimit) return -1;
        a[r * cols + c] = static_cast<std::int64_t>(t);
      }
      a[r * cols + col] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

// Same elimination over arbitrary-precision integers; used only when the
// machine-word pass overflows.
inline int bareiss_rank_mpz(const IntegerMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a[r * cols + c] = static_cast<long>(m.at(r, c));

  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (a[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c)
        std::swap(a[pivot * cols + c], a[rank * cols + c]);
    const mpz_class p = a[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class head = a[r * cols + col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class t = p * a[r * cols + c] - head * a[rank * cols + c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[r * cols + c] = t;
      }
      a[r * cols + col] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace detail

/// Rank over the rationals, computed exactly. Fast path uses fraction-free
/// elimination in 64-bit words and falls back to GMP integers when a minor
/// grows past the word size.
inline int rank_exact(const IntegerMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  int r = detail::bareiss_rank_i64(m);
  return r >= 0 ? r : detail::bareiss_rank_mpz(m);
}

/// Rank over Z/p for a prime p. Cross-check only; never a substitute for
/// rank_exact, since rank mod p can drop below the rational rank.
inline int rank_mod_p(const IntegerMatrix& m, std::uint64_t p) {
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::int64_t v = m.at(r, c) % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      a[r * cols + c] = static_cast<std::uint64_t>(v);
    }

  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  auto powmod = [&](std::uint64_t base, std::uint64_t e) {
    std::uint64_t acc = 1;
    while (e) {
      if (e & 1) acc = mulmod(acc, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return acc;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (a[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c)
        std::swap(a[pivot * cols + c], a[rank * cols + c]);
    std::uint64_t inv = powmod(a[rank * cols + col], p - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t factor = mulmod(a[r * cols + col], inv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        std::uint64_t sub = mulmod(factor, a[rank * cols + c]);
        a[r * cols + c] = (a[r * cols + c] + p - sub) % p;
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace bettistab
