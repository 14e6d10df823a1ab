#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bettistab {

/// Graded Betti numbers beta_{i,j} as a sparse map; zero multiplicities are
/// never stored. In the rendered grid, column i and row j - i hold the
/// entry (i, j).
class BettiTable {
public:
  struct entry {
    int i;
    std::int64_t j;
    std::int64_t multiplicity;
  };

  BettiTable() = default;

  static BettiTable from_entries(const std::vector<entry>& entries) {
    BettiTable t;
    for (const auto& e : entries) t.add(e.i, e.j, e.multiplicity);
    return t;
  }

  void add(int i, std::int64_t j, std::int64_t multiplicity) {
    if (i < 0) throw error(errc::argument, "betti table: negative homological degree");
    if (j < 0) throw error(errc::argument, "betti table: negative internal degree");
    if (multiplicity < 1)
      throw error(errc::argument, "betti table: multiplicity must be positive");
    entries_[{i, j}] += multiplicity;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  std::int64_t at(int i, std::int64_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<std::pair<int, std::int64_t>, std::int64_t>& entries() const {
    return entries_;
  }

  std::int64_t total_betti(int i) const {
    std::int64_t sum = 0;
    for (const auto& [k, mult] : entries_)
      if (k.first == i) sum += mult;
    return sum;
  }

  /// Largest homological degree with an entry (the projective range).
  int max_i() const {
    require_nonempty();
    int m = 0;
    for (const auto& [k, mult] : entries_) m = std::max(m, k.first);
    return m;
  }

  std::int64_t min_row() const {
    require_nonempty();
    std::int64_t r = INT64_MAX;
    for (const auto& [k, mult] : entries_) r = std::min(r, k.second - k.first);
    return r;
  }

  std::int64_t max_row() const {
    require_nonempty();
    std::int64_t r = INT64_MIN;
    for (const auto& [k, mult] : entries_) r = std::max(r, k.second - k.first);
    return r;
  }

  /// Least j with an entry at i = 0; the first populated degree of column 0.
  std::int64_t min_degree_in_column_zero() const {
    require_nonempty();
    std::int64_t best = INT64_MAX;
    for (const auto& [k, mult] : entries_)
      if (k.first == 0) best = std::min(best, k.second);
    if (best == INT64_MAX)
      throw error(errc::argument, "betti table has no column-zero entry");
    return best;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }

private:
  void require_nonempty() const {
    if (entries_.empty()) throw error(errc::argument, "betti table is empty");
  }

  std::map<std::pair<int, std::int64_t>, std::int64_t> entries_;
};

/// The support of a Betti table with rows shifted down by r*d: the offset
/// pair for an entry (i, j) is (i, j - i - r*d), so a table whose lowest
/// column-zero entry sits at degree r*d contributes offset (0, 0). This is
/// the invariant compared by the shape relation; multiplicities never enter.
struct ShapeKey {
  std::set<std::pair<int, std::int64_t>> offsets;
  std::int64_t shift_r = 1;
  std::int64_t power_d = 1;

  friend bool operator==(const ShapeKey& a, const ShapeKey& b) {
    return a.offsets == b.offsets;
  }
};

inline ShapeKey shape_key(const BettiTable& B, std::int64_t r, std::int64_t d) {
  if (r < 1 || d < 1) throw error(errc::argument, "shape_key: r and d must be >= 1");
  ShapeKey k;
  k.shift_r = r;
  k.power_d = d;
  for (const auto& [ij, mult] : B.entries())
    k.offsets.insert({ij.first, ij.second - ij.first - r * d});
  return k;
}

/// Shape relation: the tables of I^x and I^y share the same arrangement of
/// nonzero entries once rows are shifted by r*x and r*y.
inline bool same_shape(const BettiTable& Bx, std::int64_t x, const BettiTable& By,
                       std::int64_t y, std::int64_t r) {
  return shape_key(Bx, r, x) == shape_key(By, r, y);
}

/// Macaulay2-style grid: header "-" row with column indices, "total:" row,
/// then one row per j - i value over the full populated interval, zeros as
/// ".", every column right-aligned with single-space separation.
inline std::string render_m2(const BettiTable& B) {
  if (B.empty()) throw error(errc::argument, "render_m2: empty table");
  const int imax = B.max_i();
  const std::int64_t row_lo = B.min_row(), row_hi = B.max_row();

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"-"};
  for (int i = 0; i <= imax; ++i) header.push_back(std::to_string(i));
  grid.push_back(header);

  std::vector<std::string> total{"total:"};
  for (int i = 0; i <= imax; ++i) total.push_back(std::to_string(B.total_betti(i)));
  grid.push_back(total);

  for (std::int64_t row = row_lo; row <= row_hi; ++row) {
    std::vector<std::string> line{std::to_string(row) + ":"};
    for (int i = 0; i <= imax; ++i) {
      std::int64_t v = B.at(i, row + i);
      line.push_back(v == 0 ? "." : std::to_string(v));
    }
    grid.push_back(line);
  }

  std::vector<std::size_t> width(static_cast<std::size_t>(imax) + 2, 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c)
      width[c] = std::max(width[c], line[c].size());

  std::string out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += ' ';
      text += std::string(width[c] - line[c].size(), ' ');
      text += line[c];
    }
    out += text;
    out += '\n';
  }
  return out;
}

/// Renders the ranks and shifts of the minimal graded free resolution,
/// e.g. "0 -> R(-7) -> R(-4) ++ R^3(-5) -> R^4(-3) -> I -> 0".
inline std::string resolution_skeleton(const BettiTable& B) {
  if (B.empty()) throw error(errc::argument, "resolution_skeleton: empty table");
  const int imax = B.max_i();
  std::string out = "0";
  for (int i = imax; i >= 0; --i) {
    std::map<std::int64_t, std::int64_t> shifts;  // j -> multiplicity
    for (const auto& [ij, mult] : B.entries())
      if (ij.first == i) shifts[ij.second] = mult;
    out += " -> ";
    bool first = true;
    for (const auto& [j, mult] : shifts) {
      if (!first) out += " ++ ";
      first = false;
      out += "R";
      if (mult != 1) out += "^" + std::to_string(mult);
      out += "(-" + std::to_string(j) + ")";
    }
  }
  out += " -> I -> 0";
  return out;
}

}  // namespace bettistab
