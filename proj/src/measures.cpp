#include "biasham/measures.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "biasham/error.hpp"
#include "biasham/matching.hpp"

namespace biasham {

BiasReport colour_bias(const CycleSeq& cycle, const EdgeColouring& chi) {
  const Graph& g = chi.graph();
  if (!is_valid_cycle(g, cycle)) {
    throw Error(Errc::invalid_cycle, "sequence of length " + std::to_string(cycle.size()) +
                                         " is not a cycle of the coloured graph");
  }
  BiasReport report;
  report.per_colour.assign(static_cast<std::size_t>(chi.r()), 0);
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Colour c = chi.colour(cycle.vertices[i], cycle.vertices[(i + 1) % k]);
    ++report.per_colour[c - 1];
  }
  const auto best = std::max_element(report.per_colour.begin(), report.per_colour.end());
  report.colour = static_cast<Colour>(best - report.per_colour.begin()) + 1;
  report.count = *best;
  report.bias_denominator = chi.r();
  report.bias_numerator = static_cast<std::int64_t>(chi.r()) * report.count -
                          static_cast<std::int64_t>(k);
  return report;
}

int min_degree(const Graph& g) {
  if (g.n() == 0) return 0;
  int best = g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_hamilton_cycle(const Graph& g, const CycleSeq& c) {
  return static_cast<int>(c.size()) == g.n() && is_valid_cycle(g, c);
}

std::size_t non_isolated_edge_count(const Graph& g) {
  std::size_t isolated = 0;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) ++isolated;
  }
  return g.edge_count() - isolated;
}

namespace {

// Walks every k-subset S of 0..n-1 and reports one whose closed
// neighbourhood misses at least k vertices; those k vertices and S span no
// edge between them.
KJoinedResult exhaustive_k_joined(const Graph& g, int k) {
  const int n = g.n();
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    for (Vertex u : g.neighbours(v)) closed[v] |= std::uint32_t{1} << u;
  }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::uint32_t covered = 0;
    for (int x : pick) covered |= closed[x];
    const std::uint32_t outside = all & ~covered;
    if (std::popcount(outside) >= k) {
      KJoinedResult result;
      result.joined = false;
      std::vector<Vertex> first(pick.begin(), pick.end());
      std::vector<Vertex> second;
      for (Vertex v = 0; v < n && static_cast<int>(second.size()) < k; ++v) {
        if ((outside >> v) & 1U) second.push_back(v);
      }
      result.witness = std::make_pair(std::move(first), std::move(second));
      return result;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {};
}

}  // namespace

KJoinedResult is_k_joined(const Graph& g, int k, int guard) {
  const int n = g.n();
  if (k < 1 || 2 * k > n) {
    throw Error(Errc::invalid_argument, "k-joined needs 1 <= k <= n/2 (k=" + std::to_string(k) +
                                            ", n=" + std::to_string(n) + ")");
  }
  if (k == 1) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!g.adjacent(a, b)) {
          KJoinedResult result;
          result.joined = false;
          result.witness = std::make_pair(std::vector<Vertex>{a}, std::vector<Vertex>{b});
          return result;
        }
      }
    }
    return {};
  }
  if (n > guard || n > 32) {
    throw Error(Errc::guard_exceeded, "exhaustive k-joined check limited to n <= " +
                                          std::to_string(std::min(guard, 32)));
  }
  return exhaustive_k_joined(g, k);
}

Matching max_matching_avoiding_colour(const EdgeColouring& chi, Colour c,
                                      std::span<const Vertex> U) {
  const Graph& g = chi.graph();
  if (!all_distinct(U, g.n())) {
    throw Error(Errc::invalid_argument, "U must be a set of vertices of the graph");
  }
  return maximum_matching_in(g, U, [&](Vertex x, Vertex y) { return chi.colour(x, y) != c; });
}

int f_c(Vertex v, Vertex x, Vertex y, const EdgeColouring& chi, Colour c) {
  const int vx = chi.colour(v, x) == c ? 1 : 0;
  const int vy = chi.colour(v, y) == c ? 1 : 0;
  const int xy = chi.colour(x, y) == c ? 1 : 0;
  return vx + vy - xy;
}

bool is_c_good(Vertex v, const Edge& xy, const EdgeColouring& chi, Colour c) {
  return f_c(v, xy.u, xy.v, chi, c) <= 0;
}

}  // namespace biasham
