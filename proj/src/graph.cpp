#include "biasham/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "biasham/error.hpp"

namespace biasham {

namespace {

void check_endpoint(int n, Vertex x) {
  if (x < 0 || x >= n) {
    throw Error(Errc::invalid_graph, "vertex " + std::to_string(x) +
                                         " out of range for n=" + std::to_string(n));
  }
}

std::vector<Edge> canonical(int n, std::span<const Edge> input) {
  std::vector<Edge> out;
  out.reserve(input.size());
  for (const Edge& e : input) {
    check_endpoint(n, e.u);
    check_endpoint(n, e.v);
    if (e.u == e.v) {
      throw Error(Errc::invalid_graph, "self-loop at " + std::to_string(e.u));
    }
    out.push_back(make_edge(e.u, e.v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw Error(Errc::invalid_graph, "negative vertex count");
  build_indices();
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw Error(Errc::invalid_graph, "negative vertex count");
  edges_ = canonical(n, edges);
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(Errc::invalid_graph, "duplicate edge {" + std::to_string(dup->u) +
                                         "," + std::to_string(dup->v) + "}");
  }
  build_indices();
}

Graph Graph::collapsing(int n, std::vector<Edge> edges) {
  if (n < 0) throw Error(Errc::invalid_graph, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_ = canonical(n, edges);
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.build_indices();
  return g;
}

void Graph::build_indices() {
  const auto un = static_cast<std::size_t>(n_);
  std::vector<std::size_t> deg(un, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(un + 1, 0);
  for (std::size_t v = 0; v < un; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.assign(offsets_[un], 0);
  adj_edge_.assign(offsets_[un], 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every
  // adjacency list sorted as well.
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = id;
  }
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = id;
  }
  for (std::size_t v = 0; v < un; ++v) {
    // Lists for v hold neighbours > v (from pass 1) then neighbours < v
    // (pass 2); rotate so the whole list is ascending.
    auto first = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    auto split = std::find_if(first, last, [v](Vertex x) { return x < static_cast<Vertex>(v); });
    const auto shift = split - first;
    std::rotate(first, split, last);
    auto efirst = adj_edge_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto elast = adj_edge_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::rotate(efirst, efirst + shift, elast);
  }
  words_ = (un + 63) / 64;
  rows_.assign(un * words_, 0);
  for (const Edge& e : edges_) {
    rows_[row_offset(e.u) + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    rows_[row_offset(e.v) + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
  }
}

std::optional<std::size_t> Graph::edge_id(Vertex a, Vertex b) const noexcept {
  if (!adjacent(a, b)) return std::nullopt;
  auto nb = neighbours(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  return adj_edge_[offsets_[a] + static_cast<std::size_t>(it - nb.begin())];
}

std::size_t Graph::require_edge(Vertex a, Vertex b) const {
  auto id = edge_id(a, b);
  if (!id) {
    throw Error(Errc::missing_edge,
                "no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  return *id;
}

int Graph::common_neighbour_count(Vertex a, Vertex b) const noexcept {
  int total = 0;
  const std::uint64_t* ra = rows_.data() + row_offset(a);
  const std::uint64_t* rb = rows_.data() + row_offset(b);
  for (std::size_t w = 0; w < words_; ++w) total += std::popcount(ra[w] & rb[w]);
  return total;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_endpoint(n_, keep[i]);
    if (index[keep[i]] != -1) {
      throw Error(Errc::invalid_argument, "repeated vertex in induced()");
    }
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) out.push_back({index[e.u], index[e.v]});
  }
  return Graph(static_cast<int>(keep.size()), out);
}

Graph Graph::restricted(const std::vector<bool>& keep) const {
  if (keep.size() != static_cast<std::size_t>(n_)) {
    throw Error(Errc::size_mismatch, "restriction mask has wrong length");
  }
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (keep[e.u] && keep[e.v]) out.push_back(e);
  }
  return Graph(n_, out);
}

GraphBuilder::GraphBuilder(int n)
    : n_(n),
      words_((static_cast<std::size_t>(n) + 63) / 64),
      bits_(static_cast<std::size_t>(n) * words_, 0),
      degree_(static_cast<std::size_t>(n), 0) {
  if (n < 0) throw Error(Errc::invalid_graph, "negative vertex count");
}

bool GraphBuilder::has(Vertex a, Vertex b) const noexcept {
  return (bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1U;
}

bool GraphBuilder::add(Vertex a, Vertex b) {
  check_endpoint(n_, a);
  check_endpoint(n_, b);
  if (a == b) throw Error(Errc::invalid_graph, "self-loop at " + std::to_string(a));
  if (has(a, b)) return false;
  bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  bits_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
  ++degree_[a];
  ++degree_[b];
  edges_.push_back(make_edge(a, b));
  return true;
}

void GraphBuilder::add_all(const Graph& g) {
  if (g.n() != n_) throw Error(Errc::size_mismatch, "builder/graph vertex counts differ");
  for (const Edge& e : g.edges()) add(e.u, e.v);
}

Graph GraphBuilder::build() const { return Graph(n_, edges_); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::invalid_argument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

}  // namespace biasham
