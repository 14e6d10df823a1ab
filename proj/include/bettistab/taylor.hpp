#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "betti_table.hpp"
#include "exact_rank.hpp"
#include "ideal.hpp"

namespace bettistab {

struct TaylorOptions {
  std::size_t generator_cap = 14;
};

/// Independent Betti oracle via the Taylor complex: the free resolution on
/// all generator subsets, reduced modulo the maximal ideal. A subset S sits
/// in homological position |S| - 1 with multidegree lcm(S); the reduced
/// differential keeps the +-1 coefficient from S to S minus g exactly when
/// dropping g does not change the lcm. Graded Betti numbers are the
/// dimensions of homology of the resulting complex of vector spaces,
/// degree slice by degree slice.
inline BettiTable betti_taylor(const MonomialIdeal& I, const TaylorOptions& opt = {}) {
  const std::size_t m = I.num_generators();
  const std::size_t n = I.num_vars();
  if (m > opt.generator_cap)
    throw error(errc::capacity, "betti_taylor: generator count exceeds oracle cap");

  const std::size_t subsets = std::size_t{1} << m;
  const auto& gens = I.generators();

  // lcm multidegree of every nonempty subset, built from the lowest bit
  std::vector<std::vector<exp_t>> lcm(subsets);
  std::vector<std::int64_t> degree(subsets, 0);
  for (std::size_t s = 1; s < subsets; ++s) {
    const unsigned g = static_cast<unsigned>(__builtin_ctzll(s));
    const std::size_t rest = s & (s - 1);
    if (rest == 0) {
      lcm[s] = gens[g].exponents();
    } else {
      lcm[s].resize(n);
      for (std::size_t v = 0; v < n; ++v)
        lcm[s][v] = std::max(lcm[rest][v], gens[g].exponent(v));
    }
    for (exp_t e : lcm[s]) degree[s] += e;
  }

  // basis of the degree-j slice at homological position i = popcount - 1
  std::map<std::pair<int, std::int64_t>, std::vector<std::size_t>> basis;
  std::vector<std::size_t> position_in_slice(subsets, 0);
  for (std::size_t s = 1; s < subsets; ++s) {
    const int i = __builtin_popcountll(s) - 1;
    auto& slice = basis[{i, degree[s]}];
    position_in_slice[s] = slice.size();
    slice.push_back(s);
  }

  // rank of the reduced differential into each slice, keyed by (i, j) of
  // the domain slice
  std::map<std::pair<int, std::int64_t>, int> diff_rank;
  for (const auto& [key, cols] : basis) {
    const auto [i, j] = key;
    if (i == 0) continue;  // d_0 reduces to zero
    auto target = basis.find({i - 1, j});
    if (target == basis.end()) {
      diff_rank[key] = 0;
      continue;
    }
    IntegerMatrix D(target->second.size(), cols.size());
    bool any = false;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::size_t s = cols[c];
      int position = 0;
      for (std::size_t g = 0; g < m; ++g) {
        if (!(s & (std::size_t{1} << g))) continue;
        const std::size_t t = s & ~(std::size_t{1} << g);
        if (lcm[t] == lcm[s]) {
          D.at(position_in_slice[t], c) = (position % 2 == 0) ? 1 : -1;
          any = true;
        }
        ++position;
      }
    }
    diff_rank[key] = any ? rank_exact(D) : 0;
  }

  BettiTable table;
  for (const auto& [key, slice] : basis) {
    const auto [i, j] = key;
    std::int64_t dim = static_cast<std::int64_t>(slice.size());
    auto in = diff_rank.find(key);
    if (in != diff_rank.end()) dim -= in->second;
    auto out = diff_rank.find({i + 1, j});
    if (out != diff_rank.end()) dim -= out->second;
    if (dim > 0) table.add(i, j, dim);
  }
  return table;
}

}  // namespace bettistab
