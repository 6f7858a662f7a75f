#include "biasham/colouring.hpp"

#include <algorithm>
#include <string>

#include "biasham/error.hpp"

namespace biasham {

EdgeColouring::EdgeColouring(std::shared_ptr<const Graph> graph, int r,
                             std::vector<Colour> by_edge)
    : graph_(std::move(graph)), r_(r), by_edge_(std::move(by_edge)) {
  if (!graph_) throw Error(Errc::invalid_argument, "colouring without a graph");
  if (r_ < 2) throw Error(Errc::invalid_argument, "need at least two colours");
  if (by_edge_.size() != graph_->edge_count()) {
    throw Error(Errc::size_mismatch, "colour table has " + std::to_string(by_edge_.size()) +
                                         " entries for " +
                                         std::to_string(graph_->edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < by_edge_.size(); ++i) {
    if (by_edge_[i] < 1 || by_edge_[i] > r_) {
      throw Error(Errc::invalid_argument,
                  "colour " + std::to_string(by_edge_[i]) + " outside 1.." + std::to_string(r_),
                  static_cast<std::int64_t>(i));
    }
  }
}

EdgeColouring EdgeColouring::uniform(std::shared_ptr<const Graph> graph, int r, Colour c) {
  const std::size_t e = graph ? graph->edge_count() : 0;
  return EdgeColouring(std::move(graph), r, std::vector<Colour>(e, c));
}

Colour EdgeColouring::colour(Vertex a, Vertex b) const {
  return by_edge_[graph_->require_edge(a, b)];
}

std::size_t EdgeColouring::count(Colour c) const noexcept {
  return static_cast<std::size_t>(std::count(by_edge_.begin(), by_edge_.end(), c));
}

EdgeColouring EdgeColouring::restricted_to(std::shared_ptr<const Graph> sub) const {
  if (sub->n() != graph_->n()) {
    throw Error(Errc::size_mismatch, "restriction must keep the vertex set");
  }
  std::vector<Colour> table;
  table.reserve(sub->edge_count());
  for (const Edge& e : sub->edges()) table.push_back(colour(e.u, e.v));
  return EdgeColouring(std::move(sub), r_, std::move(table));
}

Graph colour_class(const EdgeColouring& chi, Colour c) {
  std::vector<Edge> out;
  const auto edges = chi.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (chi.colour_of(i) == c) out.push_back(edges[i]);
  }
  return Graph(chi.graph().n(), out);
}

}  // namespace biasham
