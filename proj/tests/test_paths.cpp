#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "biasham/error.hpp"
#include "biasham/measures.hpp"
#include "biasham/oracle.hpp"
#include "biasham/paths.hpp"
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

PathForest forest_of(const std::vector<std::vector<Vertex>>& paths) {
  PathForest f;
  for (const auto& p : paths) f.paths.push_back(PathSeq{p});
  return f;
}

bool contains_edges(const CycleSeq& c, const std::vector<Edge>& edges) {
  const auto ce = cycle_edges(c);
  const std::set<Edge> have(ce.begin(), ce.end());
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return have.count(e) > 0; });
}

}  // namespace

TEST_CASE("dfs long path basics") {
  CHECK(dfs_long_path(complete_graph(6), 1).size() >= 4);
  CHECK(dfs_long_path(complete_graph(6), 1).size() == 6);
  CHECK(dfs_long_path(Graph(4)).size() == 1);
  CHECK(dfs_long_path(Graph(0)).size() == 0);
  CHECK(dfs_long_path(path_graph(7)).size() == 7);
}

TEST_CASE("dfs long path meets the k-joined bound") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 200 && seed < 5000; ++seed) {
    const int n = 8 + static_cast<int>(seed % 9);
    const int k = 1 + static_cast<int>(seed % 3);
    if (2 * k > n) continue;
    const Graph g = brute::random_graph(n, 0.4 + 0.05 * static_cast<double>(seed % 8), seed);
    if (!is_k_joined(g, k).joined) continue;
    ++checked;
    const PathSeq p = dfs_long_path(g, k);
    CHECK(is_valid_path(g, p));
    CHECK(static_cast<int>(p.size()) >= n - 2 * k);
    CHECK(p.size() <= longest_path_exact(g).size());
  }
  CHECK(checked == 200);
}

TEST_CASE("rooted dfs stays inside the available set") {
  const Graph g = complete_graph(8);
  std::vector<char> avail{1, 0, 1, 1, 0, 1, 1, 1};
  const PathSeq p = dfs_long_path_from(g, 3, avail);
  CHECK(p.front() == 3);
  CHECK(p.size() == 6);
  for (Vertex v : p.vertices) CHECK(avail[v]);
  CHECK(code_of([&] { dfs_long_path_from(g, 1, avail); }) == Errc::invalid_argument);
}

TEST_CASE("near-monochromatic path examples") {
  auto k8 = std::make_shared<const Graph>(complete_graph(8));
  const auto mono = EdgeColouring::uniform(k8, 2, 1);
  const NearMonoPath p = near_monochromatic_path(mono, 6, 0);
  CHECK(p.path.size() == 6);
  CHECK(p.off_colour == 0);
  CHECK(is_valid_path(*k8, p.path));

  auto c5 = std::make_shared<const Graph>(cycle_graph(5));
  const auto rainbow = EdgeColouring(c5, 5, {1, 2, 3, 4, 5});
  CHECK(code_of([&] { near_monochromatic_path(rainbow, 5, 0); }) == Errc::target_unreachable);
  CHECK(near_monochromatic_path(rainbow, 2, 0).path.size() == 2);
  // Bridges join colour segments when the budget allows.
  const NearMonoPath bridged = near_monochromatic_path(rainbow, 5, 4);
  CHECK(bridged.path.size() == 5);
  CHECK(bridged.off_colour <= 4);
}

TEST_CASE("near-monochromatic path certificates on random instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = brute::random_graph(60, 0.15, seed);
    const auto chi = brute::random_colouring(g, 2, seed + 77);
    const int K = static_cast<int>(seed % 4);
    try {
      const NearMonoPath p = near_monochromatic_path(chi, 20, K);
      CHECK(p.path.size() == 20);
      CHECK(is_valid_path(g, p.path));
      CHECK(p.off_colour <= K);
      int off = 0;
      for (std::size_t i = 1; i < p.path.size(); ++i) {
        off += chi.colour(p.path.vertices[i - 1], p.path.vertices[i]) != p.colour;
      }
      CHECK(off == p.off_colour);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::target_unreachable);
    }
  }
}

TEST_CASE("near-monochromatic path success rate at the calibration point") {
  int ok = 0;
  const int n = 200;
  const auto target = static_cast<std::size_t>((2.0 / 3.0 - 0.05) * n);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = brute::random_graph(n, 20.0 / n, seed);
    const auto chi = brute::random_colouring(g, 2, seed + 500);
    try {
      const NearMonoPath p = near_monochromatic_path(chi, target, 10);
      ok += is_valid_path(g, p.path) && p.off_colour <= 10;
    } catch (const Error&) {
    }
  }
  CHECK(ok >= 45);
}

TEST_CASE("monochromatic cycle examples") {
  auto k6 = std::make_shared<const Graph>(complete_graph(6));
  const CycleSeq c = monochromatic_cycle(EdgeColouring::uniform(k6, 2, 1), 4);
  CHECK(c.size() == 5);
  CHECK(is_valid_cycle(*k6, c));

  // A monochromatic path: the endpoints of any 6-vertex subpath share no
  // neighbour outside it.
  auto p7 = std::make_shared<const Graph>(path_graph(7));
  CHECK(code_of([&] { monochromatic_cycle(EdgeColouring::uniform(p7, 2, 1), 6); }) ==
        Errc::no_closing_vertex);
  // A cycle C_n does close: v_0 is the single vertex left out.
  auto c7 = std::make_shared<const Graph>(cycle_graph(7));
  CHECK(monochromatic_cycle(EdgeColouring::uniform(c7, 2, 1), 6).size() == 7);
  // Colour 2 has most edges but only short paths.
  auto star = std::make_shared<const Graph>(
      Graph(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}}));
  const auto starry = EdgeColouring::from_function(star, 2, [](const Edge& e) {
    return e == Edge{1, 2} ? 1 : 2;
  });
  CHECK(code_of([&] { monochromatic_cycle(starry, 4); }) == Errc::no_path);
}

TEST_CASE("monochromatic cycle certificate on dense hosts") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = brute::random_dense_graph(40, 0.7, 30, seed);
    const auto chi = brute::random_colouring(g, 2, seed);
    const CycleSeq c = monochromatic_cycle(chi, 6);
    REQUIRE(c.size() == 7);
    CHECK(is_valid_cycle(g, c));
    const Colour star = chi.count(1) >= chi.count(2) ? 1 : 2;
    // Every edge except the two at v_0 = c[0] is of colour c*.
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
      CHECK(chi.colour(c.vertices[i], c.vertices[i + 1]) == star);
    }
  }
}

TEST_CASE("Posa examples") {
  const Graph k4 = complete_graph(4);
  const CycleSeq c = posa_hamilton_with_forest(k4, forest_of({{0, 1}}));
  CHECK(is_hamilton_cycle(k4, c));
  CHECK(contains_edges(c, {{0, 1}}));

  for (int n = 5; n <= 12; ++n) {
    const Graph kn = complete_graph(n);
    std::vector<Vertex> a, b;
    for (int i = 0; i < n - 2; ++i) (i % 2 ? b : a).push_back(i);
    // A single path on n-1 vertices has l = n-2 edges, the largest allowed.
    std::vector<Vertex> all(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) all[i] = (i * 3 + 1) % (n - 1);
    if (std::set<Vertex>(all.begin(), all.end()).size() != all.size()) {
      for (int i = 0; i < n - 1; ++i) all[i] = n - 2 - i;
    }
    const PathForest near_spanning = forest_of({all});
    const CycleSeq hc = posa_hamilton_with_forest(kn, near_spanning);
    CHECK(is_hamilton_cycle(kn, hc));
    CHECK(contains_edges(hc, near_spanning.edges()));
    const CycleSeq two = posa_hamilton_with_forest(kn, forest_of({a, b}));
    CHECK(contains_edges(two, forest_of({a, b}).edges()));
  }
}

TEST_CASE("Posa on an 8-vertex host with two forced edges") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = brute::random_dense_graph(8, 0.5, 5, seed);
    const auto forest = brute::random_forest(g, 2, seed);
    const PathForest J = forest_of(forest);
    if (J.edge_count() != 2) continue;
    const CycleSeq c = posa_hamilton_with_forest(g, J);
    CHECK(is_hamilton_cycle(g, c));
    CHECK(contains_edges(c, J.edges()));
  }
}

TEST_CASE("Posa preconditions") {
  const Graph c6 = cycle_graph(6);
  CHECK(code_of([&] { posa_hamilton_with_forest(c6, forest_of({{0, 1}})); }) ==
        Errc::precondition_violated);
  CHECK(code_of([&] { posa_hamilton_with_forest(c6, forest_of({{0, 2}})); }) ==
        Errc::invalid_argument);
  const Graph k5 = complete_graph(5);
  CHECK(code_of([&] { posa_hamilton_with_forest(k5, forest_of({{0, 1, 2, 3, 4}})); }) ==
        Errc::precondition_violated);
  // Relaxed mode on a cycle: the forced edge lies on the only Hamilton cycle.
  const CycleSeq ok = posa_hamilton_with_forest(c6, forest_of({{0, 1}}), PosaOptions{true, 0});
  CHECK(is_hamilton_cycle(c6, ok));
  // Relaxed mode with an impossible request runs out of moves.
  const Graph p5 = path_graph(5);
  CHECK(code_of([&] { posa_hamilton_with_forest(p5, {}, PosaOptions{true, 0}); }) ==
        Errc::search_exhausted);
}

TEST_CASE("Posa with the Dirac case and no forced edges") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = brute::random_dense_graph(11, 0.3, 6, seed);
    const CycleSeq c = posa_hamilton_with_forest(g, {});
    CHECK(is_hamilton_cycle(g, c));
  }
}

TEST_CASE("window joins") {
  const Graph r(4, std::vector<Edge>{{1, 2}});
  const WindowJoin j = connect_windows(PathSeq{{0, 1}}, PathSeq{{2, 3}}, r, 1);
  CHECK(j.joined.vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(j.discarded.empty());
  CHECK(code_of([&] { connect_windows(PathSeq{{0, 1}}, PathSeq{{2, 3}}, Graph(4), 1); }) ==
        Errc::no_connecting_edge);
  CHECK(code_of([&] { connect_windows(PathSeq{{0, 1}}, PathSeq{{1, 3}}, r, 1); }) ==
        Errc::invalid_argument);
}

TEST_CASE("window joins discard exactly (w - 1 - i) + j vertices") {
  for (int w = 1; w <= 5; ++w) {
    for (int i = 0; i < w; ++i) {
      for (int j = 0; j < w; ++j) {
        // pa = 0..9, pb = 10..19; the only R-edge sits at offsets (i, j).
        const PathSeq pa{[] {
          std::vector<Vertex> v(10);
          for (int k = 0; k < 10; ++k) v[k] = k;
          return v;
        }()};
        const PathSeq pb{[] {
          std::vector<Vertex> v(10);
          for (int k = 0; k < 10; ++k) v[k] = 10 + k;
          return v;
        }()};
        const Vertex a = 10 - w + i;
        const Vertex b = 10 + j;
        const Graph r(20, std::vector<Edge>{{a, b}});
        const WindowJoin out = connect_windows(pa, pb, r, w);
        CHECK(static_cast<int>(out.discarded.size()) == (w - 1 - i) + j);
        CHECK(out.joined.size() + out.discarded.size() == 20);
        CHECK(std::find(out.joined.vertices.begin(), out.joined.vertices.end(), a) !=
              out.joined.vertices.end());
      }
    }
  }
}

TEST_CASE("closing a path through its windows") {
  const Graph r(8, std::vector<Edge>{{6, 1}});
  const WindowClose c = close_windows(PathSeq{{0, 1, 2, 3, 4, 5, 6, 7}}, r, 2);
  CHECK(c.cycle.vertices == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
  CHECK(c.discarded.size() == 2);
  CHECK(code_of([&] { close_windows(PathSeq{{0, 1, 2, 3}}, r, 2); }) == Errc::invalid_argument);
}
