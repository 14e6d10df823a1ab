#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "betti_table.hpp"
#include "ideal.hpp"
#include "koszul.hpp"

namespace bettistab {

enum class KeepTables { none, sequence, all };

struct StabOptions {
  // Same-shape run required before an estimate is emitted. Runs of six
  // equal shapes followed by a seventh change occur in the wild, so
  // anything below 7 is known to mislead.
  std::int64_t lookahead = 7;
  KeepTables keep = KeepTables::none;
  KoszulOptions koszul;
};

/// Per-ideal stabilization record. estimated_stab is an estimate and never
/// a certified stabilization index: no certificate exists, so it is only
/// emitted once `lookahead` consecutive powers past the last shape change
/// have been checked.
struct StabReport {
  std::optional<MonomialIdeal> ideal;
  std::int64_t shift_r = 1;
  std::int64_t max_power = 1;
  std::vector<std::pair<std::int64_t, BettiTable>> tables;  // retained (d, B(I^d))
  std::vector<std::int64_t> stab_seq;                       // ascending, contains 1
  std::optional<std::int64_t> estimated_stab;
  std::int64_t lookahead_used = 0;
  std::int64_t stable_run_length = 0;
  std::optional<std::int64_t> equigenerated_degree;
  /// Powers whose new shape already occurred before the directly preceding
  /// power; recorded without interpretation.
  std::vector<std::pair<std::int64_t, std::int64_t>> shape_recurrences;
  std::vector<std::string> generator_strings;
};

/// Minimal generating sets of I^1, ..., I^D, computed incrementally:
/// generators of I^d are the minimalized pairwise products of the previous
/// power's generators with those of I.
inline std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& I, std::int64_t D) {
  if (D < 1) throw error(errc::argument, "powers_up_to: max power must be >= 1");
  std::vector<MonomialIdeal> out;
  out.reserve(static_cast<std::size_t>(D));
  out.push_back(I);
  const std::size_t n = I.num_vars();
  for (std::int64_t d = 2; d <= D; ++d) {
    const auto& prev = out.back().generators();
    std::vector<Monomial> products;
    products.reserve(prev.size() * I.num_generators());
    for (const Monomial& p : prev)
      for (const Monomial& g : I.generators()) {
        std::vector<exp_t> e(n);
        for (std::size_t v = 0; v < n; ++v) e[v] = p.exponent(v) + g.exponent(v);
        products.emplace_back(I.ring_ptr(), std::move(e));
      }
    out.push_back(MonomialIdeal::from_generators(std::move(products)));
  }
  return out;
}

/// Stabilization sequence of I up to max_power: 1 together with every d
/// whose Betti table shape differs from the previous power's, with shapes
/// compared through r*d-normalized support keys, r the lowest generator
/// degree.
inline StabReport stab_seq(const MonomialIdeal& I, std::int64_t max_power,
                           const StabOptions& opt = {}) {
  if (max_power < 1) throw error(errc::argument, "stab_seq: max power must be >= 1");
  if (opt.lookahead < 0) throw error(errc::argument, "stab_seq: negative lookahead");

  StabReport report;
  report.ideal = I;
  report.shift_r = min_gen_degree(I);
  report.max_power = max_power;
  report.lookahead_used = opt.lookahead;
  report.equigenerated_degree = is_equigenerated(I);
  for (const Monomial& g : I.generators())
    report.generator_strings.push_back(g.str());

  const auto powers = powers_up_to(I, max_power);

  std::vector<std::set<std::pair<int, std::int64_t>>> keys;
  keys.reserve(powers.size());
  for (std::int64_t d = 1; d <= max_power; ++d) {
    const BettiTable B = betti_koszul(powers[d - 1], opt.koszul);
    keys.push_back(shape_key(B, report.shift_r, d).offsets);
    if (opt.keep == KeepTables::all) report.tables.push_back({d, B});

    const bool is_new = d == 1 || keys[d - 1] != keys[d - 2];
    if (is_new) {
      report.stab_seq.push_back(d);
      if (opt.keep == KeepTables::sequence) report.tables.push_back({d, B});
      for (std::int64_t earlier = 1; earlier < d - 1; ++earlier)
        if (keys[earlier - 1] == keys[d - 1]) {
          report.shape_recurrences.push_back({d, earlier});
          break;
        }
    }
  }

  const std::int64_t last_change = report.stab_seq.back();
  report.stable_run_length = max_power - last_change;
  if (report.stable_run_length >= opt.lookahead) report.estimated_stab = last_change;
  return report;
}

/// A family of monomial ideals whose generator exponents are linear
/// functions slope*n + offset of an integer parameter n.
struct LinearExponent {
  std::int64_t slope = 0;   // nonnegative
  std::int64_t offset = 0;

  std::int64_t eval(std::int64_t n) const { return slope * n + offset; }
};

class LinearExponentFamily {
public:
  LinearExponentFamily(RingPtr ring,
                       std::vector<std::vector<LinearExponent>> generators,
                       std::int64_t n_min = 1)
      : ring_(std::move(ring)), gens_(std::move(generators)), n_min_(n_min) {
    if (!ring_) throw error(errc::argument, "family needs a ring context");
    if (gens_.empty()) throw error(errc::argument, "family needs at least one generator");
    for (const auto& g : gens_) {
      if (g.size() != ring_->num_vars())
        throw error(errc::argument, "family generator arity does not match ring");
      for (const LinearExponent& e : g) {
        if (e.slope < 0)
          throw error(errc::argument, "family exponent slope must be nonnegative");
        if (e.slope > kMaxExponent || e.offset > kMaxExponent || e.offset < -kMaxExponent)
          throw error(errc::argument, "family exponent coefficient exceeds 2^32");
      }
    }
  }

  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<std::vector<LinearExponent>>& generators() const { return gens_; }
  std::int64_t n_min() const { return n_min_; }

private:
  RingPtr ring_;
  std::vector<std::vector<LinearExponent>> gens_;
  std::int64_t n_min_;
};

/// Evaluates every exponent at n and minimalizes.
inline MonomialIdeal instantiate(const LinearExponentFamily& F, std::int64_t n) {
  if (n < F.n_min())
    throw error(errc::argument, "instantiate: n below the family's domain");
  std::vector<Monomial> gens;
  for (std::size_t g = 0; g < F.generators().size(); ++g) {
    std::vector<exp_t> e;
    e.reserve(F.generators()[g].size());
    for (std::size_t v = 0; v < F.generators()[g].size(); ++v) {
      const std::int64_t value = F.generators()[g][v].eval(n);
      if (value < 0)
        throw error(errc::domain, "instantiate: generator " + std::to_string(g + 1) +
                                      ", variable " + F.ring_ptr()->variable_name(v) +
                                      " evaluates to " + std::to_string(value) +
                                      " at n = " + std::to_string(n));
      e.push_back(value);
    }
    gens.emplace_back(F.ring_ptr(), std::move(e));
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

/// Exact integer line through a point list: reported only when every point
/// lies on the line determined by the first two.
struct LinearFit {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  std::int64_t n_from = 0;
  std::int64_t n_to = 0;
};

namespace detail {

inline std::optional<LinearFit> exact_linear_fit(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
  if (points.size() < 2) return std::nullopt;
  const auto [n1, v1] = points[0];
  const auto [n2, v2] = points[1];
  if ((v2 - v1) % (n2 - n1) != 0) return std::nullopt;
  LinearFit fit;
  fit.slope = (v2 - v1) / (n2 - n1);
  fit.intercept = v1 - fit.slope * n1;
  fit.n_from = points.front().first;
  fit.n_to = points.back().first;
  for (const auto& [n, v] : points)
    if (v != fit.slope * n + fit.intercept) return std::nullopt;
  return fit;
}

}  // namespace detail

struct FamilySweepResult {
  std::map<std::int64_t, StabReport> reports;
  std::optional<LinearFit> stab_fit;
  std::optional<LinearFit> cardinality_fit;
};

/// Runs stab_seq for every family member in [n_lo, n_hi] and attempts exact
/// linear fits of the estimated stabilization index and of the sequence
/// cardinality against n, over the members whose estimate is present.
inline FamilySweepResult family_sweep(const LinearExponentFamily& F, std::int64_t n_lo,
                                      std::int64_t n_hi, std::int64_t max_power,
                                      const StabOptions& opt = {}) {
  if (n_lo > n_hi) throw error(errc::argument, "family_sweep: empty n range");
  FamilySweepResult result;
  std::vector<std::pair<std::int64_t, std::int64_t>> stab_points, card_points;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    StabReport r = stab_seq(instantiate(F, n), max_power, opt);
    if (r.estimated_stab) {
      stab_points.push_back({n, *r.estimated_stab});
      card_points.push_back({n, static_cast<std::int64_t>(r.stab_seq.size())});
    }
    result.reports.emplace(n, std::move(r));
  }
  result.stab_fit = detail::exact_linear_fit(stab_points);
  result.cardinality_fit = detail::exact_linear_fit(card_points);
  return result;
}

/// Checks an observed sequence against the closed form
/// {1,2,3,5,6} union {11 + 6m : 0 <= m <= 2(n-2)}, i.e. {1,2,3,5,6}
/// followed by the arithmetic run 11, 17, ..., 12n-13. Valid for n >= 3.
inline bool stab_seq_closed_form_check(std::int64_t n,
                                       const std::vector<std::int64_t>& observed) {
  if (n < 3) throw error(errc::argument, "stab_seq_closed_form_check: n must be >= 3");
  std::vector<std::int64_t> expected{1, 2, 3, 5, 6};
  for (std::int64_t m = 0; m <= 2 * (n - 2); ++m) expected.push_back(11 + 6 * m);
  return observed == expected;
}

}  // namespace bettistab
