#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace bettistab {

using exp_t = std::int64_t;

/// Per-exponent bound; keeps all degree arithmetic far away from 64-bit overflow.
inline constexpr exp_t kMaxExponent = exp_t{1} << 32;

/// A monomial x^a in a fixed ring context, stored as its exponent vector.
/// Immutable after construction.
class Monomial {
public:
  Monomial(RingPtr ring, std::vector<exp_t> exponents)
      : ring_(std::move(ring)), exps_(std::move(exponents)) {
    if (!ring_) throw error(errc::argument, "monomial needs a ring context");
    if (exps_.size() != ring_->num_vars())
      throw error(errc::argument, "exponent vector length does not match ring");
    for (exp_t e : exps_) {
      if (e < 0) throw error(errc::argument, "negative exponent");
      if (e > kMaxExponent)
        throw error(errc::argument, "exponent exceeds 2^32");
    }
  }

  const RingPtr& ring_ptr() const { return ring_; }
  const RingContext& ring() const { return *ring_; }
  const std::vector<exp_t>& exponents() const { return exps_; }
  exp_t exponent(std::size_t v) const { return exps_[v]; }
  std::size_t num_vars() const { return exps_.size(); }

  exp_t total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), exp_t{0});
  }

  bool is_unit() const {
    for (exp_t e : exps_)
      if (e != 0) return false;
    return true;
  }

  /// Canonical text form, e.g. "x1*x2^2"; the unit monomial renders as "1".
  std::string str() const {
    std::string out;
    for (std::size_t v = 0; v < exps_.size(); ++v) {
      if (exps_[v] == 0) continue;
      if (!out.empty()) out += '*';
      out += ring_->variable_name(v);
      if (exps_[v] != 1) {
        out += '^';
        out += std::to_string(exps_[v]);
      }
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return same_ring(a.ring_, b.ring_) && a.exps_ == b.exps_;
  }

private:
  RingPtr ring_;
  std::vector<exp_t> exps_;
};

inline void require_same_ring(const Monomial& a, const Monomial& b) {
  if (!same_ring(a.ring_ptr(), b.ring_ptr()))
    throw error(errc::context, "monomials belong to different ring contexts");
}

/// True iff a | b, i.e. every exponent of a is at most the matching one of b.
inline bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  for (std::size_t v = 0; v < a.num_vars(); ++v)
    if (a.exponent(v) > b.exponent(v)) return false;
  return true;
}

/// Coordinatewise maximum of the exponent vectors.
inline Monomial lcm_pair(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<exp_t> e(a.num_vars());
  for (std::size_t v = 0; v < e.size(); ++v)
    e[v] = std::max(a.exponent(v), b.exponent(v));
  return Monomial(a.ring_ptr(), std::move(e));
}

inline Monomial product(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<exp_t> e(a.num_vars());
  for (std::size_t v = 0; v < e.size(); ++v)
    e[v] = a.exponent(v) + b.exponent(v);
  return Monomial(a.ring_ptr(), std::move(e));
}

/// Canonical order: ascending total degree, ties by lexicographic comparison
/// of exponent vectors. Total on monomials of one ring.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  exp_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

}  // namespace bettistab
