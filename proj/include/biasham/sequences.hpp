#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "biasham/graph.hpp"

namespace biasham {

/// Simple path x_1, ..., x_k given by its vertex order.
struct PathSeq {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  bool empty() const noexcept { return vertices.empty(); }
  std::size_t edge_count() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

/// Cycle [v_1, ..., v_t]; the closing edge v_t v_1 is implicit.
struct CycleSeq {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  Vertex at(std::size_t i) const { return vertices[i % vertices.size()]; }

  friend bool operator==(const CycleSeq&, const CycleSeq&) = default;
};

/// Set of pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }

  friend bool operator==(const Matching&, const Matching&) = default;
};

std::vector<Edge> path_edges(const PathSeq& p);
std::vector<Edge> cycle_edges(const CycleSeq& c);

bool all_distinct(std::span<const Vertex> vertices, int n);

/// Distinct vertices, consecutive ones adjacent in g.
bool is_valid_path(const Graph& g, const PathSeq& p);

/// At least 3 distinct vertices, cyclically consecutive ones adjacent in g.
bool is_valid_cycle(const Graph& g, const CycleSeq& c);

/// Pairwise vertex-disjoint edges, all present in g.
bool is_valid_matching(const Graph& g, const Matching& m);

/// Cycle in the same rotation class starting at its smallest vertex, with
/// the second vertex smaller than the last.
CycleSeq canonical_cycle(const CycleSeq& c);

}  // namespace biasham
