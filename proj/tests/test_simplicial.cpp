#include <doctest.h>

#include <random>

#include "bettistab/exact_rank.hpp"
#include "bettistab/simplicial.hpp"
#include "test_util.hpp"

using namespace bettistab;

namespace {

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::closure_of_facets(3, {{0, 1}, {1, 2}, {0, 2}});
}

IntegerMatrix random_sign_matrix(std::mt19937_64& rng, std::size_t rows,
                                 std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = static_cast<std::int64_t>(rng() % 3) - 1;
  return m;
}

SimplicialComplex cone_over(const SimplicialComplex& K) {
  const int apex = K.vertex_count();
  std::vector<std::vector<int>> faces;
  for (const auto& f : K.faces()) {
    faces.push_back(f);
    auto with_apex = f;
    with_apex.push_back(apex);
    faces.push_back(with_apex);
  }
  if (faces.empty()) faces = {{}, {apex}};
  return SimplicialComplex::from_faces(apex + 1, faces);
}

}  // namespace

TEST_CASE("boundary matrices of the named small complexes") {
  auto tri = hollow_triangle();
  auto d1 = boundary_matrix(tri, 1);
  REQUIRE(d1.rows() == 3);
  REQUIRE(d1.cols() == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    int plus = 0, minus = 0, zero = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      if (d1.at(r, c) == 1) ++plus;
      if (d1.at(r, c) == -1) ++minus;
      if (d1.at(r, c) == 0) ++zero;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
    CHECK(zero == 1);
  }
  CHECK(rank_exact(d1) == 2);

  auto vertex = SimplicialComplex::from_faces(1, {{}, {0}});
  auto d0 = boundary_matrix(vertex, 0);
  REQUIRE(d0.rows() == 1);
  REQUIRE(d0.cols() == 1);
  CHECK(d0.at(0, 0) == 1);

  auto nothing = SimplicialComplex::void_complex(2);
  CHECK(boundary_matrix(nothing, 1).rows() == 0);
  CHECK(boundary_matrix(nothing, 1).cols() == 0);
}

TEST_CASE("rank_exact on tiny fixed matrices") {
  IntegerMatrix eye(2, 2);
  eye.at(0, 0) = eye.at(1, 1) = 1;
  CHECK(rank_exact(eye) == 2);

  IntegerMatrix ones(2, 2);
  ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = 1;
  CHECK(rank_exact(ones) == 1);

  CHECK(rank_exact(IntegerMatrix()) == 0);
}

TEST_CASE("rank_exact falls back to big integers when minors overflow") {
  const std::int64_t big = (std::int64_t{1} << 31) + 7;
  IntegerMatrix m(3, 3);
  m.at(0, 0) = big;
  m.at(0, 1) = big;
  m.at(0, 2) = 1;
  m.at(1, 0) = big;
  m.at(1, 1) = -big;
  m.at(1, 2) = 2;
  m.at(2, 0) = 1;
  m.at(2, 1) = 2;
  m.at(2, 2) = 3;
  CHECK(detail::bareiss_rank_i64(m) == -1);  // must actually exercise the fallback
  CHECK(rank_exact(m) == 3);
  CHECK(rank_exact(m) == rank_mod_p(m, 2147483647ull));
}

TEST_CASE("machine-word and big-integer eliminations agree") {
  std::mt19937_64 rng(1618);
  for (int round = 0; round < 40; ++round) {
    std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m.at(r, c) = static_cast<std::int64_t>(rng() % 21) - 10;
    const int fast = detail::bareiss_rank_i64(m);
    REQUIRE(fast >= 0);  // small entries never overflow
    CHECK(fast == detail::bareiss_rank_mpz(m));
  }
}

TEST_CASE("rank_exact agrees with transpose and with modular ranks") {
  std::mt19937_64 rng(91);
  const std::uint64_t primes[] = {2147483647ull, 1000000007ull, 998244353ull};
  for (int round = 0; round < 60; ++round) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    auto m = random_sign_matrix(rng, rows, cols);
    int r = rank_exact(m);
    CHECK(r == rank_exact(m.transposed()));
    for (auto p : primes) CHECK(r == rank_mod_p(m, p));
  }
}

TEST_CASE("reduced homology conventions") {
  auto irrelevant = SimplicialComplex::irrelevant_complex(3);
  auto h = reduced_homology_dims(irrelevant, 2);
  CHECK(h == std::vector<std::int64_t>{1, 0, 0, 0});

  auto two_points = SimplicialComplex::from_faces(2, {{}, {0}, {1}});
  h = reduced_homology_dims(two_points, 1);
  CHECK(h == std::vector<std::int64_t>{0, 1, 0});

  h = reduced_homology_dims(hollow_triangle(), 2);
  CHECK(h == std::vector<std::int64_t>{0, 0, 1, 0});

  for (int n = 1; n <= 4; ++n) {
    auto full = SimplicialComplex::full_simplex(n);
    for (std::int64_t dim : reduced_homology_dims(full, n)) CHECK(dim == 0);
  }

  auto nothing = SimplicialComplex::void_complex(3);
  for (std::int64_t dim : reduced_homology_dims(nothing, 2)) CHECK(dim == 0);
}

TEST_CASE("reduced Euler characteristic identity on random complexes") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<int>> facets;
    const int facet_count = 1 + static_cast<int>(rng() % 4);
    for (int f = 0; f < facet_count; ++f) {
      std::vector<int> face;
      for (int v = 0; v < n; ++v)
        if (rng() % 2) face.push_back(v);
      facets.push_back(face);
    }
    auto K = SimplicialComplex::closure_of_facets(n, facets);
    auto h = reduced_homology_dims(K, n - 1);

    std::int64_t faces_alternating = 0, homology_alternating = 0;
    for (int i = -1; i <= n - 1; ++i) {
      const std::int64_t s = (i % 2 == 0) ? 1 : -1;
      faces_alternating += s * static_cast<std::int64_t>(K.faces_of_dim(i).size());
      homology_alternating += s * h[i + 1];
    }
    CHECK(faces_alternating == homology_alternating);
  }
}

TEST_CASE("coning kills reduced homology") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<int>> facets;
    for (int f = 0; f < 3; ++f) {
      std::vector<int> face;
      for (int v = 0; v < n; ++v)
        if (rng() % 2) face.push_back(v);
      facets.push_back(face);
    }
    auto K = SimplicialComplex::closure_of_facets(n, facets);
    auto coned = cone_over(K);
    for (std::int64_t dim : reduced_homology_dims(coned, coned.vertex_count() - 1))
      CHECK(dim == 0);
  }
}

TEST_CASE("from_faces validates closure") {
  CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {{}, {0, 1}}), const error&);
  CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {{0}}), const error&);
  CHECK_NOTHROW(SimplicialComplex::from_faces(2, {{}, {0}, {1}, {0, 1}}));
}
