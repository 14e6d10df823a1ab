#pragma once

#include <cstdint>
#include <vector>

#include "betti_table.hpp"
#include "ideal.hpp"
#include "lcm_lattice.hpp"

namespace bettistab {
namespace detail {

inline std::int64_t binomial(std::int64_t top, std::int64_t k) {
  if (k < 0 || top < k) return 0;
  k = std::min(k, top - k);
  __int128 acc = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    acc = acc * (top - k + t) / t;
    if (acc > INT64_MAX) throw error(errc::capacity, "binomial overflow");
  }
  return static_cast<std::int64_t>(acc);
}

// Number of degree-j monomials lying in I, for j = 0..j_max, by direct
// enumeration: every exponent prefix of length n-1 determines the smallest
// admissible last exponent, so each prefix contributes one monomial to
// every degree from that point on... except that the last coordinate is
// forced, so it contributes exactly one monomial per degree j >= s(prefix).
inline std::vector<std::int64_t> counts_direct(const MonomialIdeal& I,
                                               std::int64_t j_max) {
  const std::size_t n = I.num_vars();
  const auto& gens = I.generators();
  std::vector<std::int64_t> hist(static_cast<std::size_t>(j_max) + 2, 0);

  if (n == 3) {
    const ThreeVarTools tools(I);
    for (exp_t a = 0; a <= j_max; ++a)
      for (exp_t b = 0; a + b <= j_max; ++b) {
        const exp_t mz = tools.min_z(a, b);
        if (mz == ThreeVarTools::kNoZ) continue;
        const std::int64_t s = a + b + mz;
        if (s <= j_max) ++hist[s];
      }
  } else {
    std::vector<exp_t> prefix(n - 1, 0);
    auto min_last = [&]() {
      exp_t best = -1;
      for (const Monomial& g : gens) {
        bool dom = true;
        for (std::size_t v = 0; v + 1 < n; ++v)
          if (g.exponent(v) > prefix[v]) {
            dom = false;
            break;
          }
        if (!dom) continue;
        const exp_t need = g.exponent(n - 1);
        if (best < 0 || need < best) best = need;
      }
      return best;
    };
    auto rec = [&](auto&& self, std::size_t v, std::int64_t used) -> void {
      if (v + 1 == n) {
        const exp_t need = min_last();
        if (need >= 0 && used + need <= j_max) ++hist[used + need];
        return;
      }
      for (exp_t e = 0; used + e <= j_max; ++e) {
        prefix[v] = e;
        self(self, v + 1, used + e);
      }
      prefix[v] = 0;
    };
    if (n == 1) {
      exp_t need = gens[0].exponent(0);
      for (const Monomial& g : gens) need = std::min(need, g.exponent(0));
      if (need <= j_max) ++hist[need];
    } else {
      rec(rec, 0, 0);
    }
  }

  std::vector<std::int64_t> counts(static_cast<std::size_t>(j_max) + 1, 0);
  std::int64_t running = 0;
  for (std::int64_t j = 0; j <= j_max; ++j) {
    running += hist[j];
    counts[j] = running;
  }
  return counts;
}

// Inclusion-exclusion over nonempty generator subsets: the monomials of
// degree j divisible by all of S are counted by a single binomial.
inline std::vector<std::int64_t> counts_inclusion_exclusion(const MonomialIdeal& I,
                                                            std::int64_t j_max) {
  const std::size_t m = I.num_generators();
  const std::size_t n = I.num_vars();
  if (m > 20)
    throw error(errc::capacity, "hilbert: too many generators for inclusion-exclusion");
  const auto& gens = I.generators();

  std::vector<std::int64_t> counts(static_cast<std::size_t>(j_max) + 1, 0);
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<exp_t> join(n);
  for (std::size_t s = 1; s < subsets; ++s) {
    std::fill(join.begin(), join.end(), 0);
    for (std::size_t g = 0; g < m; ++g)
      if (s & (std::size_t{1} << g))
        for (std::size_t v = 0; v < n; ++v)
          join[v] = std::max(join[v], gens[g].exponent(v));
    std::int64_t deg = 0;
    for (exp_t e : join) deg += e;
    const int sign = (__builtin_popcountll(s) % 2 == 1) ? 1 : -1;
    for (std::int64_t j = deg; j <= j_max; ++j)
      counts[j] += sign * binomial(j - deg + static_cast<std::int64_t>(n) - 1,
                                   static_cast<std::int64_t>(n) - 1);
  }
  return counts;
}

}  // namespace detail

/// Number of degree-j monomials contained in I for j = 0..j_max. Direct
/// enumeration for n <= 4; inclusion-exclusion beyond that.
inline std::vector<std::int64_t> monomial_counts_in_ideal(const MonomialIdeal& I,
                                                          std::int64_t j_max) {
  if (j_max < 0) throw error(errc::argument, "monomial_counts_in_ideal: j_max < 0");
  if (I.num_vars() <= 4) return detail::counts_direct(I, j_max);
  return detail::counts_inclusion_exclusion(I, j_max);
}

/// Independent correctness witness: the Hilbert function of I computed by
/// counting monomials must match the alternating sum of the Betti table,
///   count(j) = sum_i (-1)^i sum_l beta_{i,l} * C(j - l + n - 1, n - 1),
/// for every degree j <= j_max.
inline bool hilbert_consistency(const MonomialIdeal& I, const BettiTable& B,
                                std::int64_t j_max) {
  const std::int64_t n = static_cast<std::int64_t>(I.num_vars());
  std::int64_t max_shift = 0;
  for (const auto& [ij, mult] : B.entries()) max_shift = std::max(max_shift, ij.second);
  if (j_max < max_shift + n)
    throw error(errc::argument, "hilbert_consistency: j_max below max shift + n");

  const auto counts = monomial_counts_in_ideal(I, j_max);
  for (std::int64_t j = 0; j <= j_max; ++j) {
    std::int64_t predicted = 0;
    for (const auto& [ij, mult] : B.entries()) {
      const std::int64_t term = mult * detail::binomial(j - ij.second + n - 1, n - 1);
      predicted += (ij.first % 2 == 0) ? term : -term;
    }
    if (predicted != counts[j]) return false;
  }
  return true;
}

}  // namespace bettistab
