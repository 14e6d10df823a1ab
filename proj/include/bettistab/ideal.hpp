#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "monomial.hpp"

namespace bettistab {

/// The unique minimal generating set of the monomial ideal spanned by `gens`:
/// duplicates removed, every monomial strictly divisible by another list
/// member dropped, result in canonical order.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  if (gens.empty())
    throw error(errc::argument, "minimalize: empty generator list");
  for (std::size_t i = 1; i < gens.size(); ++i)
    require_same_ring(gens[0], gens[i]);

  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Distinct monomials of equal degree never divide one another, so only
  // strictly lower-degree survivors can eliminate a candidate.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (const Monomial& cand : gens) {
    exp_t deg = cand.total_degree();
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (k.total_degree() >= deg) break;
      if (divides(k, cand)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(cand);
  }
  return kept;
}

/// A proper monomial ideal, held by its canonical minimal generating set.
class MonomialIdeal {
public:
  static MonomialIdeal from_generators(std::vector<Monomial> gens) {
    std::vector<Monomial> minimal = minimalize(std::move(gens));
    if (minimal.size() == 1 && minimal[0].is_unit())
      throw error(errc::argument, "unit ideal is not supported");
    return MonomialIdeal(std::move(minimal));
  }

  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }
  const RingPtr& ring_ptr() const { return gens_[0].ring_ptr(); }
  const RingContext& ring() const { return gens_[0].ring(); }
  std::size_t num_vars() const { return ring().num_vars(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!same_ring(a.ring_ptr(), b.ring_ptr())) return false;
    if (a.gens_.size() != b.gens_.size()) return false;
    for (std::size_t i = 0; i < a.gens_.size(); ++i)
      if (a.gens_[i].exponents() != b.gens_[i].exponents()) return false;
    return true;
  }

private:
  explicit MonomialIdeal(std::vector<Monomial> canonical_minimal_gens)
      : gens_(std::move(canonical_minimal_gens)) {}

  std::vector<Monomial> gens_;
};

/// Lowest total degree among the minimal generators; this is the shift r
/// used by the shape relation.
inline exp_t min_gen_degree(const MonomialIdeal& I) {
  exp_t r = I.generators()[0].total_degree();
  for (const Monomial& g : I.generators()) r = std::min(r, g.total_degree());
  return r;
}

/// Degree r when every minimal generator has total degree r, else empty.
inline std::optional<exp_t> is_equigenerated(const MonomialIdeal& I) {
  exp_t r = I.generators()[0].total_degree();
  for (const Monomial& g : I.generators())
    if (g.total_degree() != r) return std::nullopt;
  return r;
}

namespace detail {

// Enumerates all degree-d multisets over the generators, accumulating the
// exponent sum of each product.
inline void multiset_products(const std::vector<Monomial>& gens, long long d,
                              std::vector<std::vector<exp_t>>& out) {
  std::size_t n = gens[0].num_vars();
  std::vector<exp_t> acc(n, 0);
  auto rec = [&](auto&& self, std::size_t from, long long remaining) -> void {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t g = from; g < gens.size(); ++g) {
      for (std::size_t v = 0; v < n; ++v) acc[v] += gens[g].exponent(v);
      self(self, g, remaining - 1);
      for (std::size_t v = 0; v < n; ++v) acc[v] -= gens[g].exponent(v);
    }
  };
  rec(rec, 0, d);
}

inline long long multiset_count(std::size_t m, long long d, long long cap) {
  // C(m + d - 1, d), saturating at cap + 1.
  long long count = 1;
  for (long long k = 1; k <= d; ++k) {
    __int128 next = static_cast<__int128>(count) * (static_cast<long long>(m) - 1 + k) / k;
    if (next > cap) return cap + 1;
    count = static_cast<long long>(next);
  }
  return count;
}

}  // namespace detail

/// d-th power of the ideal: minimalized products of all degree-d generator
/// multisets. power(I, 1) == I.
inline MonomialIdeal power(const MonomialIdeal& I, long long d) {
  if (d < 1) throw error(errc::argument, "power: exponent must be >= 1");
  if (d == 1) return I;
  constexpr long long kEnumerationCap = 20'000'000;
  if (detail::multiset_count(I.num_generators(), d, kEnumerationCap) > kEnumerationCap)
    throw error(errc::capacity, "power: generator multiset enumeration too large");

  std::vector<std::vector<exp_t>> products;
  detail::multiset_products(I.generators(), d, products);
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()), products.end());

  std::vector<Monomial> gens;
  gens.reserve(products.size());
  for (auto& e : products) gens.emplace_back(I.ring_ptr(), std::move(e));
  return MonomialIdeal::from_generators(std::move(gens));
}

}  // namespace bettistab
