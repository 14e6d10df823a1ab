#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "errors.hpp"
#include "exact_rank.hpp"
#include "matrix.hpp"

namespace bettistab {

/// An abstract simplicial complex on vertices {0, ..., vertex_count-1},
/// stored as the full face list (including the empty face when the complex
/// is nonvoid). The void complex (no faces at all) and the irrelevant
/// complex ({} only) are distinct values.
class SimplicialComplex {
public:
  static SimplicialComplex void_complex(int vertex_count) {
    return SimplicialComplex(vertex_count, {});
  }

  static SimplicialComplex irrelevant_complex(int vertex_count) {
    return SimplicialComplex(vertex_count, {{}});
  }

  /// Builds from an explicit face list; validates downward closure.
  static SimplicialComplex from_faces(int vertex_count,
                                      std::vector<std::vector<int>> faces) {
    std::set<std::vector<int>> canon;
    for (auto& f : faces) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (int v : f)
        if (v < 0 || v >= vertex_count)
          throw error(errc::argument, "face vertex out of range");
      canon.insert(std::move(f));
    }
    if (!canon.empty() && !canon.count({}))
      throw error(errc::argument, "nonvoid complex must contain the empty face");
    for (const auto& f : canon) {
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        std::vector<int> sub;
        for (std::size_t k = 0; k < f.size(); ++k)
          if (k != skip) sub.push_back(f[k]);
        if (!canon.count(sub))
          throw error(errc::argument, "face set is not downward closed");
      }
    }
    return SimplicialComplex(vertex_count,
                             std::vector<std::vector<int>>(canon.begin(), canon.end()));
  }

  /// Downward closure of the given facets (always contains the empty face).
  static SimplicialComplex closure_of_facets(int vertex_count,
                                             const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> canon;
    for (auto f : facets) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (int v : f)
        if (v < 0 || v >= vertex_count)
          throw error(errc::argument, "facet vertex out of range");
      if (f.size() > 30) throw error(errc::capacity, "facet too large");
      // all subsets
      const std::size_t k = f.size();
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) sub.push_back(f[i]);
        canon.insert(std::move(sub));
      }
    }
    return SimplicialComplex(vertex_count,
                             std::vector<std::vector<int>>(canon.begin(), canon.end()));
  }

  /// Full simplex on all vertices.
  static SimplicialComplex full_simplex(int vertex_count) {
    std::vector<int> top(vertex_count);
    for (int v = 0; v < vertex_count; ++v) top[v] = v;
    return closure_of_facets(vertex_count, {top});
  }

  int vertex_count() const { return vertex_count_; }
  bool is_void() const { return faces_.empty(); }
  std::size_t num_faces() const { return faces_.size(); }
  const std::vector<std::vector<int>>& faces() const { return faces_; }

  /// Faces of dimension d (d = -1 selects the empty face), in canonical
  /// order: lexicographic on the sorted vertex lists.
  std::vector<std::vector<int>> faces_of_dim(int d) const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_)
      if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Largest face dimension; -1 for the irrelevant complex, -2 for void.
  int max_dim() const {
    int d = -2;
    for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.faces_ == b.faces_;
  }

private:
  SimplicialComplex(int vertex_count, std::vector<std::vector<int>> faces)
      : vertex_count_(vertex_count), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x < y;
    });
  }

  int vertex_count_;
  std::vector<std::vector<int>> faces_;  // sorted by (dimension, lex)
};

/// Matrix of the i-th boundary map C_i -> C_{i-1} with the alternating-sign
/// convention, rows and columns in canonical face order. The augmentation
/// map (i = 0, vertices to the empty face) is included, so homology built
/// from these matrices is reduced.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& K, int i) {
  if (i < 0) throw error(errc::argument, "boundary_matrix: dimension must be >= 0");
  const auto domain = K.faces_of_dim(i);
  const auto target = K.faces_of_dim(i - 1);
  IntegerMatrix m(target.size(), domain.size());
  if (domain.empty() || target.empty()) return m;

  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = r;

  for (std::size_t c = 0; c < domain.size(); ++c) {
    const auto& f = domain[c];
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::vector<int> facet;
      facet.reserve(f.size() - 1);
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != k) facet.push_back(f[t]);
      auto it = row_of.find(facet);
      if (it == row_of.end())
        throw error(errc::argument, "complex is not downward closed");
      m.at(it->second, c) = (k % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

/// dim H~_i(K; k) for i = -1, ..., max_dim over a characteristic-zero field,
/// as exact rational ranks of the integer boundary matrices. Index 0 of the
/// result holds dimension -1.
inline std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& K,
                                                       int max_dim) {
  if (max_dim < -1)
    throw error(errc::argument, "reduced_homology_dims: max_dim must be >= -1");
  std::vector<std::int64_t> dims(static_cast<std::size_t>(max_dim) + 2, 0);
  if (K.is_void()) return dims;

  // rank of each boundary map, one past max_dim for the quotient at the top
  std::vector<int> ranks(static_cast<std::size_t>(max_dim) + 3, 0);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_dim) + 2, 0);
  for (int i = -1; i <= max_dim; ++i)
    counts[i + 1] = static_cast<std::int64_t>(K.faces_of_dim(i).size());
  for (int i = 0; i <= max_dim + 1; ++i)
    ranks[i + 1] = rank_exact(boundary_matrix(K, i));

  for (int i = -1; i <= max_dim; ++i) {
    // ker(d_i) = c_i - rank(d_i); d_{-1} is the zero map.
    std::int64_t kernel = counts[i + 1] - (i >= 0 ? ranks[i + 1] : 0);
    dims[i + 1] = kernel - ranks[i + 2];
  }
  return dims;
}

}  // namespace bettistab
