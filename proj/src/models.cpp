#include "biasham/models.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "biasham/error.hpp"
#include "biasham/measures.hpp"

namespace biasham {

namespace {

std::int64_t pair_count(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

void check_n(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative vertex count");
}

}  // namespace

void PerturbationParams::validate() const {
  check_n(n);
  if (alpha <= Rational(0) || alpha > Rational(1)) {
    throw Error(Errc::invalid_argument, "alpha must lie in (0, 1]");
  }
  if (r < 2) throw Error(Errc::invalid_argument, "r must be at least 2");
  if (m.has_value() == p.has_value()) {
    throw Error(Errc::invalid_argument, "give exactly one of m and p");
  }
  if (m && (*m < 0 || *m > pair_count(n))) {
    throw Error(Errc::invalid_argument, "m must lie in [0, n(n-1)/2]");
  }
  if (p && !(*p >= 0.0 && *p <= 1.0)) {
    throw Error(Errc::invalid_argument, "p must lie in [0, 1]");
  }
}

Graph gnm(int n, std::int64_t m, const Seed& seed) {
  check_n(n);
  const std::int64_t total = pair_count(n);
  if (m < 0 || m > total) {
    throw Error(Errc::too_many_edges, "cannot place " + std::to_string(m) +
                                          " edges on " + std::to_string(n) + " vertices");
  }
  Rng rng = seed.rng();
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  for (std::int64_t j = total - m; j < total; ++j) {
    const auto t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j) + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::int64_t> indices(chosen.begin(), chosen.end());
  std::sort(indices.begin(), indices.end());
  // Pair index k enumerates (0,1), (0,2), ..., (0,n-1), (1,2), ...
  std::vector<Edge> edges;
  edges.reserve(indices.size());
  Vertex u = 0;
  std::int64_t row_start = 0;
  for (std::int64_t k : indices) {
    while (k >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.push_back({u, static_cast<Vertex>(u + 1 + (k - row_start))});
  }
  return Graph(n, edges);
}

Graph gnp(int n, double p, const Seed& seed) {
  check_n(n);
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::invalid_argument, "p must lie in [0, 1]");
  Rng rng = seed.rng();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

int split_independent_size(int n, const Rational& alpha) {
  check_n(n);
  if (alpha < Rational(0) || alpha > Rational(1)) {
    throw Error(Errc::invalid_argument, "alpha must lie in [0, 1]");
  }
  return n - static_cast<int>(ceil_mul(alpha, n));
}

Graph complete_split(int n, const Rational& alpha) {
  const int a = split_independent_size(n, alpha);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = std::max(u + 1, a); v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph random_min_degree_host(int n, const Rational& alpha, const Seed& seed) {
  check_n(n);
  const auto target = ceil_mul(alpha, n);
  if (alpha < Rational(0) || target > n - 1) {
    throw Error(Errc::invalid_argument, "need 0 <= alpha n <= n - 1");
  }
  const double density = std::min(1.0, alpha.to_double() + 0.05);
  Graph base = gnp(n, density, seed.child("host"));
  if (min_degree(base) >= target) return base;
  GraphBuilder b(n);
  b.add_all(base);
  Rng rng = seed.child("fill").rng();
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v) {
    while (b.degree(v) < target) {
      order.clear();
      for (Vertex u = 0; u < n; ++u) {
        if (u != v && !b.has(u, v)) order.push_back(u);
      }
      rng.shuffle(std::span<Vertex>(order));
      const auto best = std::min_element(order.begin(), order.end(), [&](Vertex x, Vertex y) {
        return b.degree(x) < b.degree(y);
      });
      b.add(v, *best);
    }
  }
  return b.build();
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) {
    throw Error(Errc::size_mismatch, "union of graphs on " + std::to_string(a.n()) + " and " +
                                         std::to_string(b.n()) + " vertices");
  }
  std::vector<Edge> edges;
  edges.reserve(a.edge_count() + b.edge_count());
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                 std::back_inserter(edges));
  return Graph(a.n(), edges);
}

std::vector<Graph> sprinkle(int n, std::span<const double> probabilities, const Seed& seed) {
  std::vector<Graph> out;
  out.reserve(probabilities.size());
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    out.push_back(gnp(n, probabilities[i], seed.child("sprinkle", i)));
  }
  return out;
}

}  // namespace biasham
