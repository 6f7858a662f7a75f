#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "biasham/error.hpp"
#include "biasham/measures.hpp"
#include "biasham/oracle.hpp"
#include "brute.hpp"

using namespace biasham;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, e);
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

TEST_CASE("Hamilton cycle counts of small graphs") {
  CHECK(count_hamilton_cycles(complete_graph(4)) == 3);
  CHECK(count_hamilton_cycles(cycle_graph(6)) == 1);
  CHECK(count_hamilton_cycles(petersen()) == 0);
  CHECK(brute::hamilton_cycle_count(petersen()) == 0);
  CHECK(count_hamilton_cycles(path_graph(5)) == 0);
  CHECK(count_hamilton_cycles(complete_graph(2)) == 0);
  for (int n = 4; n <= 9; ++n) {
    CHECK(count_hamilton_cycles(complete_graph(n)) == factorial(n - 1) / 2);
  }
}

TEST_CASE("enumeration agrees with subset dynamic programming") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    const Graph g = brute::random_graph(n, 0.6, seed);
    CHECK(count_hamilton_cycles(g) == brute::hamilton_cycle_count(g));
  }
}

TEST_CASE("enumerated cycles are canonical, valid and distinct") {
  const Graph g = brute::random_graph(8, 0.7, 42);
  const auto cycles = enumerate_hamilton_cycles(g);
  std::set<std::vector<Vertex>> seen;
  for (const CycleSeq& c : cycles) {
    CHECK(is_hamilton_cycle(g, c));
    CHECK(c.vertices.front() == 0);
    CHECK(c.vertices[1] < c.vertices.back());
    CHECK(canonical_cycle(c) == c);
    CHECK(seen.insert(c.vertices).second);
  }
  CHECK(cycles.size() == brute::hamilton_cycle_count(g));
}

TEST_CASE("guards refuse oversized inputs") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  };
  CHECK(code([] { count_hamilton_cycles(complete_graph(13)); }) == Errc::guard_exceeded);
  CHECK(code([] { longest_path_exact(complete_graph(17)); }) == Errc::guard_exceeded);
  CHECK(code([] { exact_hr_tiny(complete_graph(7), 2); }) == Errc::guard_exceeded);
  CHECK(code([] { exact_hr_tiny(petersen(), 2, OracleGuard{12, 16, 40}); }) ==
        Errc::no_hamilton_cycle);
  CHECK(code([] { exact_hr_tiny(path_graph(4), 2); }) == Errc::no_hamilton_cycle);
  const auto star = EdgeColouring::uniform(
      std::make_shared<const Graph>(Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}})), 2, 1);
  CHECK(code([&] { max_bias_fixed_colouring(star); }) == Errc::no_hamilton_cycle);
}

TEST_CASE("maximum bias for fixed colourings") {
  auto k6 = std::make_shared<const Graph>(complete_graph(6));
  const auto mono = EdgeColouring::uniform(k6, 2, 1);
  const BiasOptimum best = max_bias_fixed_colouring(mono);
  CHECK(best.bias == Rational(3));
  CHECK(best.report.bias() == best.bias);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = brute::random_graph(8, 0.7, seed);
    if (count_hamilton_cycles(g) == 0) continue;
    const auto chi = brute::random_colouring(g, 3, seed);
    const BiasOptimum opt = max_bias_fixed_colouring(chi);
    Rational seen(-100);
    for (const CycleSeq& c : enumerate_hamilton_cycles(g)) {
      seen = std::max(seen, colour_bias(c, chi).bias());
    }
    CHECK(opt.bias == seen);
    CHECK(colour_bias(opt.cycle, chi).bias() == opt.bias);
  }
}

TEST_CASE("colour profile extremes") {
  auto c6 = std::make_shared<const Graph>(cycle_graph(6));
  const auto chi = EdgeColouring::from_function(c6, 2, [](const Edge& e) { return e.v < 3 ? 1 : 2; });
  const ColourProfile p = colour_profile(chi);
  CHECK(p.cycles == 1);
  CHECK(p.min_count == std::vector<int>{2, 4});
  CHECK(p.max_count == std::vector<int>{2, 4});
  CHECK(p.max_bias == Rational(1));
}

TEST_CASE("exact h_r on tiny graphs") {
  CHECK(exact_hr_tiny(cycle_graph(4), 2) == Rational(0));
  // Colour a triangle of K4 with 1: each Hamilton cycle misses one perfect
  // matching, which holds one triangle edge, so every cycle is split 2/2.
  CHECK(exact_hr_tiny(complete_graph(4), 2) == Rational(0));
  CHECK(exact_hr_tiny(cycle_graph(5), 2) == Rational(1, 2));
  CHECK(exact_hr_tiny(cycle_graph(3), 3) == Rational(0));
  CHECK(exact_hr_tiny(complete_graph(5), 2) == Rational(1, 2));
}

TEST_CASE("h_r is invariant under relabelling") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = brute::random_graph(6, 0.6, seed);
    if (g.edge_count() > 12 || count_hamilton_cycles(g) == 0) continue;
    std::vector<Vertex> perm{3, 5, 0, 1, 4, 2};
    std::vector<Edge> moved;
    for (const Edge& e : g.edges()) moved.push_back(make_edge(perm[e.u], perm[e.v]));
    const Graph h(6, moved);
    CHECK(exact_hr_tiny(g, 2) == exact_hr_tiny(h, 2));
  }
}

TEST_CASE("exact longest path") {
  CHECK(longest_path_exact(path_graph(5)).size() == 5);
  CHECK(longest_path_exact(complete_graph(5)).size() == 5);
  const Graph star(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(longest_path_exact(star).size() == 3);
  CHECK(longest_path_exact(Graph(0)).size() == 0);
  CHECK(longest_path_exact(Graph(3)).size() == 1);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const Graph g = brute::random_graph(n, 0.3, seed);
    const PathSeq p = longest_path_exact(g);
    CHECK(is_valid_path(g, p));
    CHECK(static_cast<int>(p.size()) == brute::longest_path_vertices(g));
  }
}

TEST_CASE("Boost-backed exact matching") {
  CHECK(max_matching_exact(complete_graph(4)).size() == 2);
  CHECK(max_matching_exact(cycle_graph(5)).size() == 2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = brute::random_graph(12, 0.4, seed);
    const Matching m = max_matching_exact(g);
    CHECK(is_valid_matching(g, m));
    CHECK(static_cast<int>(m.size()) == brute::max_matching_size(g));
  }
}
