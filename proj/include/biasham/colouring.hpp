#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "biasham/graph.hpp"

namespace biasham {

using Colour = int;

/// Total map from the edges of a fixed graph to colours 1..r, indexed by
/// edge id. Shares ownership of its graph.
class EdgeColouring {
 public:
  /// Throws Errc::size_mismatch if the table length differs from e(g) and
  /// Errc::invalid_argument for r < 2 or out-of-range colours.
  EdgeColouring(std::shared_ptr<const Graph> graph, int r, std::vector<Colour> by_edge);

  static EdgeColouring uniform(std::shared_ptr<const Graph> graph, int r, Colour c);

  template <class ColourOf>
  static EdgeColouring from_function(std::shared_ptr<const Graph> graph, int r,
                                     ColourOf&& colour_of) {
    std::vector<Colour> table;
    table.reserve(graph->edge_count());
    for (const Edge& e : graph->edges()) table.push_back(colour_of(e));
    return EdgeColouring(std::move(graph), r, std::move(table));
  }

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
  int r() const noexcept { return r_; }

  /// Throws Errc::missing_edge when {a,b} is not an edge.
  Colour colour(Vertex a, Vertex b) const;
  Colour colour_of(std::size_t edge_id) const noexcept { return by_edge_[edge_id]; }
  std::span<const Colour> by_edge() const noexcept { return by_edge_; }

  /// Number of edges with colour c.
  std::size_t count(Colour c) const noexcept;

  /// The colouring restricted to `sub`, whose edges must all belong to
  /// graph(); Errc::missing_edge otherwise. Vertex labels are shared.
  EdgeColouring restricted_to(std::shared_ptr<const Graph> sub) const;

 private:
  std::shared_ptr<const Graph> graph_;
  int r_;
  std::vector<Colour> by_edge_;
};

/// Subgraph on the same vertex set holding only edges of colour c.
Graph colour_class(const EdgeColouring& chi, Colour c);

}  // namespace biasham
