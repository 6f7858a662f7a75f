#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace biasham {

using Vertex = int;

/// Unordered pair stored with u < v. Build with make_edge.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

constexpr bool touches(const Edge& e, Vertex x) noexcept {
  return e.u == x || e.v == x;
}

/// Undirected simple graph on vertices 0..n-1. Immutable once built; edges are
/// kept sorted, and each edge's position in edges() is its edge id.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws Errc::invalid_graph on self-loops, duplicates or out-of-range
  /// endpoints. Edge orientation in the input does not matter.
  Graph(int n, std::span<const Edge> edges);

  /// Same as the constructor but silently collapses duplicate edges.
  static Graph collapsing(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbours(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  bool adjacent(Vertex a, Vertex b) const noexcept {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    return (rows_[row_offset(a) + (b >> 6)] >> (b & 63)) & 1U;
  }

  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const noexcept;

  /// Like edge_id but throws Errc::missing_edge.
  std::size_t require_edge(Vertex a, Vertex b) const;

  int common_neighbour_count(Vertex a, Vertex b) const noexcept;

  /// Bit row of v's neighbourhood; bit b of word b/64 is set iff a~b.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + row_offset(v), words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  /// Subgraph induced on `keep`, relabelled so that vertex i of the result is
  /// keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  /// Same vertex set, keeping only edges with both endpoints flagged.
  Graph restricted(const std::vector<bool>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_indices();
  std::size_t row_offset(Vertex v) const noexcept {
    return static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<Vertex> adj_;
  std::vector<std::size_t> adj_edge_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Incremental edge set used by generators before freezing into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int n() const noexcept { return n_; }
  bool has(Vertex a, Vertex b) const noexcept;
  /// Returns false if the edge already existed.
  bool add(Vertex a, Vertex b);
  void add_all(const Graph& g);
  int degree(Vertex v) const noexcept { return degree_[v]; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  Graph build() const;

 private:
  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degree_;
  std::vector<Edge> edges_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace biasham
