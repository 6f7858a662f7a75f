#include "biasham/sequences.hpp"

#include <algorithm>

namespace biasham {

std::vector<Edge> path_edges(const PathSeq& p) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    out.push_back(make_edge(p.vertices[i - 1], p.vertices[i]));
  }
  return out;
}

std::vector<Edge> cycle_edges(const CycleSeq& c) {
  std::vector<Edge> out;
  const std::size_t k = c.vertices.size();
  if (k < 2) return out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(make_edge(c.vertices[i], c.vertices[(i + 1) % k]));
  }
  return out;
}

bool all_distinct(std::span<const Vertex> vertices, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex x : vertices) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool is_valid_path(const Graph& g, const PathSeq& p) {
  if (!all_distinct(p.vertices, g.n())) return false;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    if (!g.adjacent(p.vertices[i - 1], p.vertices[i])) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, const CycleSeq& c) {
  const std::size_t k = c.vertices.size();
  if (k < 3 || !all_distinct(c.vertices, g.n())) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % k])) return false;
  }
  return true;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
  for (const Edge& e : m.edges) {
    if (!g.adjacent(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

CycleSeq canonical_cycle(const CycleSeq& c) {
  CycleSeq out = c;
  auto& v = out.vertices;
  if (v.size() < 3) return out;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  if (v[1] > v.back()) std::reverse(v.begin() + 1, v.end());
  return out;
}

}  // namespace biasham
