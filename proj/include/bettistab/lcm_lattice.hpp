#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>
#include <vector>

#include "ideal.hpp"
#include "monomial.hpp"

namespace bettistab {

namespace detail {

struct ExpVecHash {
  std::size_t operator()(const std::vector<exp_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (exp_t e : v) {
      h ^= static_cast<std::uint64_t>(e);
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// The support set for multigraded Betti numbers: the smallest join-closed
/// (coordinatewise max) superset of the generator multidegrees.
struct LcmLattice {
  RingPtr ring;
  std::vector<std::vector<exp_t>> elements;  // sorted by (total degree, lex)
};

/// Worklist fixpoint: joins every known element with every generator until
/// nothing new appears. Any join of a generator subset is a fold of such
/// pairwise joins, so this reaches the full closure.
inline LcmLattice lcm_closure(const MonomialIdeal& I) {
  const auto& gens = I.generators();
  const std::size_t n = I.num_vars();

  std::unordered_set<std::vector<exp_t>, detail::ExpVecHash> seen;
  std::deque<std::vector<exp_t>> work;
  for (const Monomial& g : gens)
    if (seen.insert(g.exponents()).second) work.push_back(g.exponents());

  std::vector<exp_t> join(n);
  while (!work.empty()) {
    std::vector<exp_t> u = std::move(work.front());
    work.pop_front();
    for (const Monomial& g : gens) {
      bool differs = false;
      for (std::size_t v = 0; v < n; ++v) {
        join[v] = std::max(u[v], g.exponent(v));
        differs |= join[v] != u[v];
      }
      if (!differs) continue;
      if (seen.insert(join).second) work.push_back(join);
    }
  }

  LcmLattice L;
  L.ring = I.ring_ptr();
  L.elements.assign(seen.begin(), seen.end());
  std::sort(L.elements.begin(), L.elements.end(),
            [](const std::vector<exp_t>& a, const std::vector<exp_t>& b) {
              exp_t da = 0, db = 0;
              for (exp_t e : a) da += e;
              for (exp_t e : b) db += e;
              if (da != db) return da < db;
              return a < b;
            });
  return L;
}

namespace detail {

/// Divisibility oracle and lattice enumerator specialized to three variables,
/// where every acceptance-scale computation lives. Monomial membership
/// x^c in I reduces to a staircase lookup: among generators with
/// x-exponent <= c_x, the one minimizing z subject to y <= c_y.
class ThreeVarTools {
public:
  explicit ThreeVarTools(const MonomialIdeal& I) {
    const auto& gens = I.generators();
    m_ = gens.size();
    gx_.resize(m_);
    gy_.resize(m_);
    gz_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      gx_[i] = gens[i].exponent(0);
      gy_[i] = gens[i].exponent(1);
      gz_[i] = gens[i].exponent(2);
    }

    auto sorted_unique = [](std::vector<exp_t> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    };
    xs_ = sorted_unique(gx_);
    ys_ = sorted_unique(gy_);
    zs_ = sorted_unique(gz_);

    build_classes();
    build_staircases();
  }

  std::size_t num_x_levels() const { return xs_.size(); }
  const std::vector<exp_t>& x_values() const { return xs_; }
  const std::vector<exp_t>& y_values() const { return ys_; }
  const std::vector<exp_t>& z_values() const { return zs_; }

  /// True iff some generator divides (cx, cy, cz). All coordinates >= 0.
  bool member(exp_t cx, exp_t cy, exp_t cz) const {
    exp_t mz = min_z(cx, cy);
    return mz <= cz;
  }

  /// Smallest z with (cx, cy, z) in the ideal; kMaxExponent + 1 when none.
  exp_t min_z(exp_t cx, exp_t cy) const {
    std::size_t lvl = index_le(xs_, cx);
    if (lvl == npos) return kNoZ;
    const Staircase& s = stairs_[lvl];
    std::size_t k = index_le(s.y, cy);
    if (k == npos) return kNoZ;
    return s.z[k];
  }

  static constexpr exp_t kNoZ = kMaxExponent + 2;

  /// Enumerates every lattice element (a, b, c) with a at x-level index in
  /// [x_lo, x_hi), invoking fn(a, b, c). Elements with a fixed (a, b) pair
  /// are exactly the z-values of dominated generators that are >= the
  /// smallest z forced by covering a in x and b in y.
  void enumerate_lattice(std::size_t x_lo, std::size_t x_hi,
                         const std::function<void(exp_t, exp_t, exp_t)>& fn) const {
    const std::size_t zw = (zs_.size() + 63) / 64;
    std::vector<std::uint64_t> zbits(zw);

    for (std::size_t ai = x_lo; ai < x_hi && ai < xs_.size(); ++ai) {
      const exp_t a = xs_[ai];
      std::fill(zbits.begin(), zbits.end(), 0);

      const auto& xc = xclass_[ai];  // (y, prefix-min z) sorted by y
      std::size_t xp = 0;
      exp_t min_a = kNoZ;

      std::size_t gp = 0;  // cursor over generators sorted by y
      for (std::size_t bi = 0; bi < ys_.size(); ++bi) {
        const exp_t b = ys_[bi];

        // absorb generators with g_y == b, g_x <= a into the z-value set
        while (gp < m_ && gy_[by_y_[gp]] <= b) {
          const std::size_t g = by_y_[gp++];
          if (gx_[g] <= a) {
            const std::size_t zi = index_of(zs_, gz_[g]);
            zbits[zi >> 6] |= 1ull << (zi & 63);
          }
        }

        while (xp < xc.size() && xc[xp].first <= b) {
          min_a = std::min(min_a, xc[xp].second);
          ++xp;
        }
        if (min_a == kNoZ) continue;  // nothing with g_x == a, g_y <= b

        const exp_t min_b = yclass_min_z(bi, a);
        if (min_b == kNoZ) continue;  // nothing with g_y == b, g_x <= a

        const exp_t z0 = std::max(min_a, min_b);
        std::size_t zi = index_of(zs_, z0);
        // walk set bits at z-index >= zi
        std::size_t w = zi >> 6;
        std::uint64_t word = zbits[w] & (~0ull << (zi & 63));
        while (true) {
          while (word) {
            const int bit = __builtin_ctzll(word);
            word &= word - 1;
            fn(a, b, zs_[(w << 6) + bit]);
          }
          if (++w >= zw) break;
          word = zbits[w];
        }
      }
    }
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static std::size_t index_le(const std::vector<exp_t>& v, exp_t x) {
    auto it = std::upper_bound(v.begin(), v.end(), x);
    if (it == v.begin()) return npos;
    return static_cast<std::size_t>(it - v.begin()) - 1;
  }

  static std::size_t index_of(const std::vector<exp_t>& v, exp_t x) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  }

  void build_classes() {
    xclass_.assign(xs_.size(), {});
    for (std::size_t g = 0; g < m_; ++g)
      xclass_[index_of(xs_, gx_[g])].push_back({gy_[g], gz_[g]});
    for (auto& cls : xclass_) {
      std::sort(cls.begin(), cls.end());
      exp_t run = kNoZ;
      for (auto& e : cls) {
        run = std::min(run, e.second);
        e.second = run;  // prefix-min z over ascending y
      }
    }

    yclass_.assign(ys_.size(), {});
    for (std::size_t g = 0; g < m_; ++g)
      yclass_[index_of(ys_, gy_[g])].push_back({gx_[g], gz_[g]});
    for (auto& cls : yclass_) {
      std::sort(cls.begin(), cls.end());
      exp_t run = kNoZ;
      for (auto& e : cls) {
        run = std::min(run, e.second);
        e.second = run;
      }
    }

    by_y_.resize(m_);
    for (std::size_t g = 0; g < m_; ++g) by_y_[g] = g;
    std::sort(by_y_.begin(), by_y_.end(),
              [this](std::size_t i, std::size_t j) { return gy_[i] < gy_[j]; });
  }

  exp_t yclass_min_z(std::size_t bi, exp_t a) const {
    const auto& cls = yclass_[bi];
    // largest x <= a in the class, then its prefix-min z
    std::size_t lo = 0, hi = cls.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cls[mid].first <= a)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == 0) return kNoZ;
    return cls[lo - 1].second;
  }

  void build_staircases() {
    stairs_.resize(xs_.size());
    // minimal (y, z) pairs among generators with g_x <= level, maintained
    // incrementally as the level rises
    std::vector<std::pair<exp_t, exp_t>> frontier;  // y asc, z strictly desc
    std::vector<std::size_t> order(m_);
    for (std::size_t g = 0; g < m_; ++g) order[g] = g;
    std::sort(order.begin(), order.end(),
              [this](std::size_t i, std::size_t j) { return gx_[i] < gx_[j]; });

    std::size_t gp = 0;
    for (std::size_t lvl = 0; lvl < xs_.size(); ++lvl) {
      while (gp < m_ && gx_[order[gp]] <= xs_[lvl]) {
        const std::size_t g = order[gp++];
        insert_frontier(frontier, gy_[g], gz_[g]);
      }
      Staircase& s = stairs_[lvl];
      s.y.reserve(frontier.size());
      s.z.reserve(frontier.size());
      for (const auto& [y, z] : frontier) {
        s.y.push_back(y);
        s.z.push_back(z);
      }
    }
  }

  static void insert_frontier(std::vector<std::pair<exp_t, exp_t>>& f, exp_t y, exp_t z) {
    // dominated by an existing (y' <= y, z' <= z)? with z descending in y,
    // the best candidate is the last entry with y' <= y
    auto it = std::upper_bound(f.begin(), f.end(), std::make_pair(y, kMaxExponent + 3));
    if (it != f.begin() && std::prev(it)->second <= z) return;
    // drop entries this one dominates: y'' >= y with z'' >= z
    auto lo = std::lower_bound(f.begin(), f.end(), std::make_pair(y, exp_t{-1}));
    auto hi = lo;
    while (hi != f.end() && hi->second >= z) ++hi;
    auto pos = f.erase(lo, hi);
    f.insert(pos, {y, z});
  }

  struct Staircase {
    std::vector<exp_t> y;  // ascending
    std::vector<exp_t> z;  // strictly descending
  };

  std::size_t m_;
  std::vector<exp_t> gx_, gy_, gz_;
  std::vector<exp_t> xs_, ys_, zs_;
  std::vector<std::vector<std::pair<exp_t, exp_t>>> xclass_;  // per x-level
  std::vector<std::vector<std::pair<exp_t, exp_t>>> yclass_;  // per y-level
  std::vector<std::size_t> by_y_;
  std::vector<Staircase> stairs_;
};

}  // namespace detail
}  // namespace bettistab
