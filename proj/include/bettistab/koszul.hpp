#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "betti_table.hpp"
#include "ideal.hpp"
#include "lcm_lattice.hpp"
#include "parallel.hpp"
#include "simplicial.hpp"

namespace bettistab {

struct KoszulOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
  std::int64_t lattice_warn_threshold = 50'000'000;
  std::function<void(const std::string&)> warn;
};

/// Multidegree-refined Betti numbers beta_{i,b}; the graded table is the
/// degree-wise sum. Exposed for invariant testing.
struct MultigradedBetti {
  std::map<std::pair<int, std::vector<exp_t>>, std::int64_t> entries;
};

namespace detail {

// Upper Koszul complex membership mask at multidegree b: bit (tau - 1) is
// set iff x^(b - tau) lies in the ideal, for each nonzero 0/1 vector tau.
// The empty face is always present since x^b itself lies in the ideal.
template <typename Member>
inline std::uint64_t koszul_mask(const std::vector<exp_t>& b, std::size_t n,
                                 const Member& member) {
  std::uint64_t mask = 0;
  std::vector<exp_t> c(n);
  const std::uint64_t top = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t tau = 1; tau <= top; ++tau) {
    bool ok = true;
    for (std::size_t v = 0; v < n; ++v) {
      c[v] = b[v] - ((tau >> v) & 1);
      if (c[v] < 0) {
        ok = false;
        break;
      }
    }
    if (ok && member(c)) mask |= std::uint64_t{1} << (tau - 1);
  }
  return mask;
}

inline SimplicialComplex complex_of_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::vector<int>> faces{{}};
  const std::uint64_t top = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t tau = 1; tau <= top; ++tau) {
    if (!(mask & (std::uint64_t{1} << (tau - 1)))) continue;
    std::vector<int> face;
    for (std::size_t v = 0; v < n; ++v)
      if ((tau >> v) & 1) face.push_back(static_cast<int>(v));
    faces.push_back(std::move(face));
  }
  return SimplicialComplex::from_faces(static_cast<int>(n), std::move(faces));
}

// dim H~_{i-1} for i = 0..n, indexed by i.
inline std::vector<std::int64_t> homology_of_mask(std::size_t n, std::uint64_t mask) {
  return reduced_homology_dims(complex_of_mask(n, mask), static_cast<int>(n) - 1);
}

// Linear-scan membership over the canonical (degree-sorted) generators.
struct ScanMember {
  const std::vector<Monomial>* gens;
  std::vector<exp_t> degs;

  explicit ScanMember(const MonomialIdeal& I) : gens(&I.generators()) {
    degs.reserve(gens->size());
    for (const Monomial& g : *gens) degs.push_back(g.total_degree());
  }

  bool operator()(const std::vector<exp_t>& c) const {
    exp_t cdeg = 0;
    for (exp_t e : c) cdeg += e;
    for (std::size_t k = 0; k < gens->size(); ++k) {
      if (degs[k] > cdeg) return false;
      const auto& ge = (*gens)[k].exponents();
      bool div = true;
      for (std::size_t v = 0; v < c.size(); ++v)
        if (ge[v] > c[v]) {
          div = false;
          break;
        }
      if (div) return true;
    }
    return false;
  }
};

inline BettiTable koszul_generic(const MonomialIdeal& I, const KoszulOptions& opt = {}) {
  const std::size_t n = I.num_vars();
  if (n > 20) throw error(errc::capacity, "betti_koszul: too many variables");

  const LcmLattice L = lcm_closure(I);
  const ScanMember member(I);
  const unsigned workers = resolve_workers(opt.workers);
  const bool memoize = n <= 6;

  std::vector<std::map<std::pair<int, std::int64_t>, std::int64_t>> partial(workers);
  parallel_chunks(L.elements.size(), workers,
                  [&](unsigned w, std::size_t lo, std::size_t hi) {
                    std::unordered_map<std::uint64_t, std::vector<std::int64_t>> memo;
                    for (std::size_t k = lo; k < hi; ++k) {
                      const auto& b = L.elements[k];
                      std::int64_t deg = 0;
                      for (exp_t e : b) deg += e;
                      const std::uint64_t mask = koszul_mask(b, n, member);
                      const std::vector<std::int64_t>* h;
                      std::vector<std::int64_t> direct;
                      if (memoize) {
                        auto it = memo.find(mask);
                        if (it == memo.end())
                          it = memo.emplace(mask, homology_of_mask(n, mask)).first;
                        h = &it->second;
                      } else {
                        direct = homology_of_mask(n, mask);
                        h = &direct;
                      }
                      for (std::size_t i = 0; i < h->size(); ++i)
                        if ((*h)[i] > 0)
                          partial[w][{static_cast<int>(i), deg}] += (*h)[i];
                    }
                  });

  if (opt.warn && static_cast<std::int64_t>(L.elements.size()) > opt.lattice_warn_threshold)
    opt.warn("lattice size " + std::to_string(L.elements.size()) +
             " exceeds warning threshold");

  BettiTable table;
  for (const auto& part : partial)
    for (const auto& [ij, mult] : part) table.add(ij.first, ij.second, mult);
  return table;
}

// Three-variable fast path. The lattice is enumerated by a planar sweep and
// each multidegree contributes through a 128-entry homology table of the
// possible upper Koszul complexes on three vertices.
struct TriHomology {
  std::int8_t h[128][3];  // mask -> (H~_{-1}, H~_0, H~_1)

  TriHomology() {
    for (std::uint64_t mask = 0; mask < 128; ++mask) {
      bool closed = true;
      for (std::uint64_t tau = 1; tau <= 7 && closed; ++tau) {
        if (!(mask & (1ull << (tau - 1)))) continue;
        for (std::uint64_t sub = (tau - 1) & tau; sub; sub = (sub - 1) & tau)
          if (!(mask & (1ull << (sub - 1)))) {
            closed = false;
            break;
          }
      }
      if (!closed) {
        h[mask][0] = h[mask][1] = h[mask][2] = -1;
        continue;
      }
      auto dims = homology_of_mask(3, mask);
      for (int i = 0; i < 3; ++i) h[mask][i] = static_cast<std::int8_t>(dims[i]);
    }
  }
};

inline const TriHomology& tri_homology() {
  static const TriHomology table;
  return table;
}

inline BettiTable koszul_threevar(const MonomialIdeal& I, const KoszulOptions& opt = {}) {
  const ThreeVarTools tools(I);
  const TriHomology& tri = tri_homology();
  const unsigned workers = resolve_workers(opt.workers);

  const std::int64_t jmax = tools.x_values().back() + tools.y_values().back() +
                            tools.z_values().back();
  std::vector<std::vector<std::int64_t>> acc(
      workers, std::vector<std::int64_t>(3 * (jmax + 1), 0));
  std::vector<std::int64_t> points(workers, 0);

  parallel_chunks(tools.num_x_levels(), workers,
                  [&](unsigned w, std::size_t lo, std::size_t hi) {
                    auto& a = acc[w];
                    std::int64_t count = 0;
                    tools.enumerate_lattice(lo, hi, [&](exp_t x, exp_t y, exp_t z) {
                      ++count;
                      std::uint64_t mask = 0;
                      for (std::uint64_t tau = 1; tau <= 7; ++tau) {
                        const exp_t cx = x - (tau & 1);
                        const exp_t cy = y - ((tau >> 1) & 1);
                        const exp_t cz = z - ((tau >> 2) & 1);
                        if (cx < 0 || cy < 0 || cz < 0) continue;
                        if (tools.member(cx, cy, cz)) mask |= 1ull << (tau - 1);
                      }
                      if (tri.h[mask][0] < 0)
                        throw error(errc::argument,
                                    "betti_koszul: membership mask is not downward closed");
                      const std::int64_t j = x + y + z;
                      a[3 * j + 0] += tri.h[mask][0];
                      a[3 * j + 1] += tri.h[mask][1];
                      a[3 * j + 2] += tri.h[mask][2];
                    });
                    points[w] = count;
                  });

  std::int64_t total_points = 0;
  for (std::int64_t c : points) total_points += c;
  if (opt.warn && total_points > opt.lattice_warn_threshold)
    opt.warn("lattice size " + std::to_string(total_points) +
             " exceeds warning threshold");

  BettiTable table;
  for (std::int64_t j = 0; j <= jmax; ++j)
    for (int i = 0; i < 3; ++i) {
      std::int64_t sum = 0;
      for (unsigned w = 0; w < workers; ++w) sum += acc[w][3 * j + i];
      if (sum > 0) table.add(i, j, sum);
    }
  return table;
}

}  // namespace detail

/// Graded Betti numbers of I via the multigraded simplicial formula: for
/// each lcm-lattice multidegree b, beta_{i,b} is dim H~_{i-1} of the upper
/// Koszul complex at b, and beta_{i,j} sums those over |b| = j. Output is
/// identical for every worker count.
inline BettiTable betti_koszul(const MonomialIdeal& I, const KoszulOptions& opt = {}) {
  if (I.num_vars() == 3) return detail::koszul_threevar(I, opt);
  return detail::koszul_generic(I, opt);
}

/// Multidegree-level refinement, computed on the generic path; intended for
/// invariant checks at test scale.
inline MultigradedBetti multigraded_betti(const MonomialIdeal& I) {
  const std::size_t n = I.num_vars();
  if (n > 20) throw error(errc::capacity, "multigraded_betti: too many variables");
  const LcmLattice L = lcm_closure(I);
  const detail::ScanMember member(I);

  MultigradedBetti result;
  for (const auto& b : L.elements) {
    const std::uint64_t mask = detail::koszul_mask(b, n, member);
    const auto h = detail::homology_of_mask(n, mask);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] > 0) result.entries[{static_cast<int>(i), b}] = h[i];
  }
  return result;
}

}  // namespace bettistab
