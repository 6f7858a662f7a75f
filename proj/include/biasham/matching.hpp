#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "biasham/graph.hpp"
#include "biasham/sequences.hpp"

namespace biasham {

/// Local adjacency lists over vertices 0..k-1.
using AdjacencyList = std::vector<std::vector<int>>;

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// Edmonds' blossom algorithm. Returns mate[v] (or -1). Augmentation stops as
/// soon as the matching reaches `cap` edges, so with a cap the result is only
/// guaranteed maximum when it is smaller than the cap.
std::vector<int> blossom_matching(const AdjacencyList& adj, std::size_t cap = kNoCap);

/// Maximal matching scanning edges in ascending (u, v) order.
Matching greedy_maximal_matching(const Graph& g);

/// Exact maximum-cardinality matching of g.
Matching maximum_matching(const Graph& g, std::size_t cap = kNoCap);

/// Maximum matching of the subgraph of g induced on `vertices`, keeping only
/// edges {x, y} for which keep(x, y) holds. Returned in g's labels.
template <class Keep>
Matching maximum_matching_in(const Graph& g, std::span<const Vertex> vertices, Keep&& keep,
                             std::size_t cap = kNoCap) {
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  AdjacencyList adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex x = vertices[i];
    for (Vertex y : g.neighbours(x)) {
      if (local[y] >= 0 && keep(x, y)) adj[i].push_back(local[y]);
    }
  }
  const std::vector<int> mate = blossom_matching(adj, cap);
  Matching out;
  for (std::size_t i = 0; i < mate.size(); ++i) {
    if (mate[i] > static_cast<int>(i)) {
      out.edges.push_back(make_edge(vertices[i], vertices[mate[i]]));
    }
  }
  return out;
}

}  // namespace biasham
