#include "biasham/adversary.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "biasham/error.hpp"
#include "biasham/models.hpp"
#include "biasham/sequences.hpp"

namespace biasham {

namespace {

void require_independent(const Graph& g, std::span<const Vertex> A) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      if (g.adjacent(A[i], A[j])) {
        throw Error(Errc::not_independent, "A spans the edge {" + std::to_string(A[i]) + "," +
                                               std::to_string(A[j]) + "}");
      }
    }
  }
}

}  // namespace

PartitionedColouringPlan PartitionedColouringPlan::make(int n, int r, std::span<const Vertex> A) {
  if (r < 2) throw Error(Errc::invalid_argument, "r must be at least 2");
  if (n % (2 * r) != 0) {
    throw Error(Errc::indivisible_n, "2r = " + std::to_string(2 * r) + " does not divide n = " +
                                         std::to_string(n));
  }
  if (!all_distinct(A, n)) throw Error(Errc::invalid_argument, "A must be a set of vertices");
  const std::size_t part_size = static_cast<std::size_t>(n / (2 * r));
  const std::size_t needed = part_size * static_cast<std::size_t>(r - 1);
  if (A.size() < needed) {
    throw Error(Errc::set_too_small, "|A| = " + std::to_string(A.size()) + " but " +
                                         std::to_string(needed) + " vertices are needed");
  }
  PartitionedColouringPlan plan;
  plan.n = n;
  plan.r = r;
  plan.independent.assign(A.begin(), A.end());
  std::sort(plan.independent.begin(), plan.independent.end());
  plan.part_of.assign(static_cast<std::size_t>(n), r);
  for (int i = 0; i < r - 1; ++i) {
    auto first = plan.independent.begin() + static_cast<std::ptrdiff_t>(part_size * i);
    plan.parts.emplace_back(first, first + static_cast<std::ptrdiff_t>(part_size));
    for (Vertex v : plan.parts.back()) plan.part_of[v] = i + 1;
  }
  return plan;
}

EdgeColouring balanced_colouring(const Graph& g, int r, std::span<const Vertex> A) {
  const auto plan = PartitionedColouringPlan::make(g.n(), r, A);
  require_independent(g, plan.independent);
  auto shared = std::make_shared<const Graph>(g);
  return EdgeColouring::from_function(shared, r, [&](const Edge& e) {
    const Colour a = plan.part_of[e.u];
    const Colour b = plan.part_of[e.v];
    if (a != r && b != r) {
      throw Error(Errc::not_independent, "edge joins two parts of A");
    }
    return std::min(a, b);
  });
}

EdgeColouring critical_colouring(const Graph& split, const Graph& extra, int r) {
  const int n = split.n();
  if (extra.n() != n) {
    throw Error(Errc::size_mismatch, "split and extra graphs differ in vertex count");
  }
  if (r < 2) throw Error(Errc::invalid_argument, "r must be at least 2");
  if (n % (2 * r) != 0) {
    throw Error(Errc::indivisible_n, "2r = " + std::to_string(2 * r) + " does not divide n = " +
                                         std::to_string(n));
  }
  if (static_cast<std::int64_t>(extra.edge_count()) * r >= n) {
    throw Error(Errc::too_many_extra_edges,
                std::to_string(extra.edge_count()) + " extra edges, need fewer than n/r");
  }
  std::vector<Vertex> A;
  for (Vertex v = 0; v < n; ++v) {
    if (split.degree(v) < n - 1) A.push_back(v);
  }
  const auto plan = PartitionedColouringPlan::make(n, r, A);
  require_independent(split, plan.independent);
  auto joined = std::make_shared<const Graph>(graph_union(split, extra));
  return EdgeColouring::from_function(joined, r, [&](const Edge& e) {
    return std::min(plan.part_of[e.u], plan.part_of[e.v]);
  });
}

std::optional<std::vector<Vertex>> find_large_independent_set(const Graph& g, int target) {
  const int n = g.n();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<Vertex> chosen;
  auto remove = [&](Vertex v) {
    alive[v] = 0;
    for (Vertex u : g.neighbours(v)) {
      if (alive[u]) --degree[u];
    }
  };
  for (;;) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (best < 0 || degree[v] < degree[best])) best = v;
    }
    if (best < 0) break;
    chosen.push_back(best);
    remove(best);
    for (Vertex u : g.neighbours(best)) {
      if (alive[u]) remove(u);
    }
  }
  if (static_cast<int>(chosen.size()) < target) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace biasham
