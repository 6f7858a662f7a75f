#include "biasham/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "biasham/error.hpp"

namespace biasham {

namespace {

void check_guard(int n, int limit, const char* what) {
  if (n > limit || n > 63) {
    throw Error(Errc::guard_exceeded, std::string(what) + " limited to n <= " +
                                          std::to_string(std::min(limit, 63)));
  }
}

// Depth-first enumeration of canonical Hamilton cycles. on_push/on_pop see
// every tree edge so callers can keep running totals; at_cycle sees the full
// vertex order and returns false to stop.
template <class OnPush, class OnPop, class AtCycle>
class HamiltonWalk {
 public:
  HamiltonWalk(const Graph& g, OnPush& push, OnPop& pop, AtCycle& at)
      : g_(g), n_(g.n()), path_(static_cast<std::size_t>(n_)), push_(push), pop_(pop), at_(at) {}

  void run() {
    if (n_ < 3) return;
    path_[0] = 0;
    descend(1, std::uint64_t{1});
  }

 private:
  bool descend(int depth, std::uint64_t used) {
    const Vertex v = path_[depth - 1];
    if (depth == n_) {
      if (path_[1] < path_[n_ - 1] && g_.adjacent(v, 0)) {
        push_(v, 0);
        const bool go_on = at_(std::span<const Vertex>(path_));
        pop_(v, 0);
        return go_on;
      }
      return true;
    }
    for (Vertex u : g_.neighbours(v)) {
      if ((used >> u) & 1U) continue;
      path_[depth] = u;
      push_(v, u);
      const bool go_on = descend(depth + 1, used | (std::uint64_t{1} << u));
      pop_(v, u);
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> path_;
  OnPush& push_;
  OnPop& pop_;
  AtCycle& at_;
};

template <class OnPush, class OnPop, class AtCycle>
void walk(const Graph& g, OnPush push, OnPop pop, AtCycle at) {
  HamiltonWalk<OnPush, OnPop, AtCycle>(g, push, pop, at).run();
}

// Colour of {a,b} looked up through a dense table, faster than edge_id in
// the inner loop.
std::vector<Colour> colour_table(const EdgeColouring& chi) {
  const int n = chi.graph().n();
  std::vector<Colour> table(static_cast<std::size_t>(n) * n, 0);
  const auto edges = chi.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    table[edges[i].u * n + edges[i].v] = chi.colour_of(i);
    table[edges[i].v * n + edges[i].u] = chi.colour_of(i);
  }
  return table;
}

}  // namespace

void for_each_hamilton_cycle(const Graph& g,
                             const std::function<bool(std::span<const Vertex>)>& visit,
                             const OracleGuard& guard) {
  check_guard(g.n(), guard.max_n_hamilton, "Hamilton cycle enumeration");
  walk(g, [](Vertex, Vertex) {}, [](Vertex, Vertex) {}, visit);
}

std::vector<CycleSeq> enumerate_hamilton_cycles(const Graph& g, const OracleGuard& guard) {
  std::vector<CycleSeq> out;
  for_each_hamilton_cycle(
      g,
      [&](std::span<const Vertex> c) {
        out.push_back(CycleSeq{{c.begin(), c.end()}});
        return true;
      },
      guard);
  return out;
}

std::uint64_t count_hamilton_cycles(const Graph& g, const OracleGuard& guard) {
  check_guard(g.n(), guard.max_n_hamilton, "Hamilton cycle enumeration");
  std::uint64_t count = 0;
  walk(g, [](Vertex, Vertex) {}, [](Vertex, Vertex) {}, [&](std::span<const Vertex>) {
    ++count;
    return true;
  });
  return count;
}

ColourProfile colour_profile(const EdgeColouring& chi, const OracleGuard& guard) {
  const Graph& g = chi.graph();
  const int n = g.n();
  const int r = chi.r();
  check_guard(n, guard.max_n_hamilton, "Hamilton cycle enumeration");
  const std::vector<Colour> table = colour_table(chi);
  std::vector<int> counts(static_cast<std::size_t>(r) + 1, 0);
  ColourProfile profile;
  profile.min_count.assign(static_cast<std::size_t>(r), n + 1);
  profile.max_count.assign(static_cast<std::size_t>(r), -1);
  int best_count = -1;
  walk(
      g, [&](Vertex a, Vertex b) { ++counts[table[a * n + b]]; },
      [&](Vertex a, Vertex b) { --counts[table[a * n + b]]; },
      [&](std::span<const Vertex> c) {
        ++profile.cycles;
        int top = 0;
        for (int k = 1; k <= r; ++k) {
          profile.min_count[k - 1] = std::min(profile.min_count[k - 1], counts[k]);
          profile.max_count[k - 1] = std::max(profile.max_count[k - 1], counts[k]);
          top = std::max(top, counts[k]);
        }
        if (top > best_count) {
          best_count = top;
          profile.argmax.vertices.assign(c.begin(), c.end());
        }
        return true;
      });
  if (profile.cycles == 0) {
    throw Error(Errc::no_hamilton_cycle, "graph has no Hamilton cycle");
  }
  profile.max_bias = Rational(static_cast<std::int64_t>(r) * best_count - n, r);
  return profile;
}

BiasOptimum max_bias_fixed_colouring(const EdgeColouring& chi, const OracleGuard& guard) {
  ColourProfile profile = colour_profile(chi, guard);
  BiasOptimum out;
  out.bias = profile.max_bias;
  out.cycle = std::move(profile.argmax);
  out.report = colour_bias(out.cycle, chi);
  return out;
}

Rational exact_hr_tiny(const Graph& g, int r, const OracleGuard& guard) {
  if (r < 2) throw Error(Errc::invalid_argument, "r must be at least 2");
  const std::size_t e = g.edge_count();
  // r^e <= 2^limit, checked without overflow.
  double bits = static_cast<double>(e) * std::log2(static_cast<double>(r));
  if (bits > guard.max_colourings_exponent + 1e-9) {
    throw Error(Errc::guard_exceeded, "r^e(g) exceeds 2^" +
                                          std::to_string(guard.max_colourings_exponent));
  }
  // Each Hamilton cycle as its list of edge ids.
  std::vector<std::vector<std::size_t>> cycles;
  for_each_hamilton_cycle(
      g,
      [&](std::span<const Vertex> c) {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < c.size(); ++i) {
          ids.push_back(*g.edge_id(c[i], c[(i + 1) % c.size()]));
        }
        cycles.push_back(std::move(ids));
        return true;
      },
      guard);
  if (cycles.empty()) throw Error(Errc::no_hamilton_cycle, "graph has no Hamilton cycle");
  const int n = g.n();
  std::vector<Colour> colour(e, 1);
  std::vector<int> prefix_max(e + 1, 0);  // prefix_max[k] = max colour among edges < k
  std::vector<int> counts(static_cast<std::size_t>(r) + 1);
  int best = std::numeric_limits<int>::max();
  auto evaluate = [&] {
    int worst = 0;
    for (const auto& ids : cycles) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t id : ids) ++counts[colour[id]];
      worst = std::max(worst, *std::max_element(counts.begin() + 1, counts.end()));
      if (worst >= best) break;
    }
    best = std::min(best, worst);
  };
  // Depth-first over restricted growth strings.
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == e) {
      evaluate();
      return;
    }
    const int limit = std::min(r, prefix_max[k] + 1);
    for (int c = 1; c <= limit; ++c) {
      colour[k] = c;
      prefix_max[k + 1] = std::max(prefix_max[k], c);
      assign(k + 1);
    }
  };
  assign(0);
  return Rational(static_cast<std::int64_t>(r) * best - n, r);
}

PathSeq longest_path_exact(const Graph& g, const OracleGuard& guard) {
  const int n = g.n();
  if (n > guard.max_n_path || n > 20) {
    throw Error(Errc::guard_exceeded, "exact longest path limited to n <= " +
                                          std::to_string(std::min(guard.max_n_path, 20)));
  }
  if (n == 0) return {};
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  // ends[mask] = set of v such that some path covers exactly mask and ends at v.
  std::vector<std::uint32_t> ends(masks, 0);
  std::size_t best_mask = 1;
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1U << v;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    if (std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
    while (e) {
      const int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = adj[v] & ~static_cast<std::uint32_t>(mask);
      while (ext) {
        const int u = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (std::size_t{1} << u)] |= 1U << u;
      }
    }
  }
  std::vector<Vertex> rev;
  std::size_t mask = best_mask;
  int v = std::countr_zero(ends[mask]);
  for (;;) {
    rev.push_back(v);
    const std::size_t rest = mask & ~(std::size_t{1} << v);
    if (!rest) break;
    const std::uint32_t cand = ends[rest] & adj[v];
    v = std::countr_zero(cand);
    mask = rest;
  }
  std::reverse(rev.begin(), rev.end());
  return PathSeq{std::move(rev)};
}

Matching max_matching_exact(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(g.n()));
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(
      static_cast<std::size_t>(g.n()));
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  Matching m;
  const auto none = boost::graph_traits<BoostGraph>::null_vertex();
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] != none && mate[v] > v) {
      m.edges.push_back(make_edge(static_cast<Vertex>(v), static_cast<Vertex>(mate[v])));
    }
  }
  return m;
}

}  // namespace biasham
