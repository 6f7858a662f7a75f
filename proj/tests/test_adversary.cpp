#include <doctest.h>

#include <memory>

#include "biasham/adversary.hpp"
#include "biasham/error.hpp"
#include "biasham/models.hpp"
#include "biasham/oracle.hpp"
#include "brute.hpp"

using namespace biasham;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;
}

std::vector<Vertex> range(int a, int b) {
  std::vector<Vertex> v;
  for (int i = a; i < b; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("balanced colouring gives every Hamilton cycle an even split") {
  for (int n : {8, 12}) {
    const Graph g = complete_split(n, Rational(3, 4));
    const auto chi = balanced_colouring(g, 2, range(0, n / 4));
    const ColourProfile p = colour_profile(chi);
    CHECK(p.cycles > 0);
    CHECK(p.min_count == std::vector<int>{n / 2, n / 2});
    CHECK(p.max_count == std::vector<int>{n / 2, n / 2});
    CHECK(p.max_bias == Rational(0));
  }
}

TEST_CASE("balanced colouring for three colours") {
  const int n = 12;
  const Graph g = complete_split(n, Rational(4, 6));  // |A| = 4 = (r-1) n / 2r
  const auto chi = balanced_colouring(g, 3, range(0, 4));
  const ColourProfile p = colour_profile(chi);
  CHECK(p.min_count == std::vector<int>{4, 4, 4});
  CHECK(p.max_count == std::vector<int>{4, 4, 4});
}

TEST_CASE("balanced colouring colours exactly the edges meeting A_1 with 1") {
  const Graph g = complete_split(8, Rational(3, 4));
  const auto chi = balanced_colouring(g, 2, range(0, 2));
  for (const Edge& e : g.edges()) {
    CHECK((chi.colour(e.u, e.v) == 1) == (e.u < 2 || e.v < 2));
  }
}

TEST_CASE("balanced colouring with a surplus independent set") {
  // |A| = 4 > 2: the two surplus vertices join colour r.
  const Graph g = complete_split(8, Rational(1, 2));
  const auto chi = balanced_colouring(g, 2, range(0, 4));
  for (const Edge& e : g.edges()) {
    CHECK((chi.colour(e.u, e.v) == 1) == (e.u < 2));
  }
}

TEST_CASE("balanced colouring errors") {
  const Graph g = complete_split(8, Rational(3, 4));
  CHECK(code_of([&] { balanced_colouring(g, 2, std::vector<Vertex>{0, 5}); }) ==
        Errc::not_independent);
  CHECK(code_of([&] { balanced_colouring(g, 2, std::vector<Vertex>{0}); }) ==
        Errc::set_too_small);
  CHECK(code_of([&] { balanced_colouring(complete_split(6, Rational(2, 3)), 2,
                                         std::vector<Vertex>{0, 1}); }) == Errc::indivisible_n);
  // A star has no Hamilton cycle; the colouring is still produced.
  const Graph star(8, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}});
  const auto chi = balanced_colouring(star, 2, range(1, 3));
  CHECK(chi.count(1) == 2);
}

TEST_CASE("critical colouring bounds the bias by 2(r-1)m") {
  for (int r : {2, 3}) {
    const int n = 12;
    const Rational alpha(r + 1, 2 * r);
    const Graph split = complete_split(n, alpha);
    const int a = split_independent_size(n, alpha);
    for (int m = 1; m <= 3; ++m) {
      if (m * r >= n) continue;
      // Extra edges inside A.
      std::vector<Edge> extra;
      for (int i = 0; i < a && static_cast<int>(extra.size()) < m; ++i) {
        for (int j = i + 1; j < a && static_cast<int>(extra.size()) < m; ++j) {
          extra.push_back({i, j});
        }
      }
      const auto chi = critical_colouring(split, Graph(n, extra), r);
      const ColourProfile p = colour_profile(chi);
      CHECK(p.max_bias <= Rational(2 * (r - 1) * m));
      for (int c = 1; c < r; ++c) CHECK(p.min_count[c - 1] >= n / r - 2 * m);
    }
  }
}

TEST_CASE("critical colouring without extra edges is balanced") {
  const Graph split = complete_split(8, Rational(3, 4));
  const auto chi = critical_colouring(split, Graph(8), 2);
  CHECK(colour_profile(chi).max_bias == Rational(0));
}

TEST_CASE("critical colouring errors and totality") {
  const Graph split = complete_split(8, Rational(3, 4));
  const std::vector<Edge> many{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  CHECK(code_of([&] { critical_colouring(split, Graph(8, many), 2); }) ==
        Errc::too_many_extra_edges);
  CHECK(code_of([&] { critical_colouring(split, Graph(9), 2); }) == Errc::size_mismatch);
  const std::vector<Edge> one{{0, 1}};
  const auto chi = critical_colouring(split, Graph(8, one), 2);
  CHECK(chi.graph().edge_count() == split.edge_count() + 1);
  CHECK(chi.colour(0, 1) == 1);
}

TEST_CASE("greedy independent sets") {
  const auto a = find_large_independent_set(complete_split(8, Rational(3, 4)), 2);
  REQUIRE(a.has_value());
  CHECK(*a == std::vector<Vertex>{0, 1});
  CHECK_FALSE(find_large_independent_set(complete_graph(5), 2).has_value());
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = brute::random_graph(20, 0.2, seed);
    const auto s = find_large_independent_set(g, 5);
    if (s) {
      CHECK(s->size() >= 5);
      for (std::size_t i = 0; i < s->size(); ++i) {
        for (std::size_t j = i + 1; j < s->size(); ++j) CHECK_FALSE(g.adjacent((*s)[i], (*s)[j]));
      }
      CHECK(static_cast<int>(s->size()) <= brute::independence_number(g));
    }
  }
}
