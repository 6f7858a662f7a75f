#include "biasham/matching.hpp"

#include <numeric>

namespace biasham {

namespace {

// Blossom-contraction search for an augmenting path from a single root, in
// the BFS formulation with base[] tracking contracted blossoms.
class BlossomSearch {
 public:
  explicit BlossomSearch(const AdjacencyList& adj)
      : adj_(adj),
        n_(adj.size()),
        mate_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        queue_(n_),
        in_tree_(n_, 0),
        in_blossom_(n_, 0),
        lca_mark_(n_, 0) {}

  std::vector<int>& mate() { return mate_; }

  bool augment_from(int root) {
    const int end = find_path(root);
    if (end < 0) return false;
    for (int v = end; v != -1;) {
      const int pv = parent_[v];
      const int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
    return true;
  }

 private:
  int lca(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    for (;;) {
      a = base_[a];
      lca_mark_[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    std::size_t head = 0;
    std::size_t tail = 0;
    in_tree_[root] = 1;
    queue_[tail++] = root;
    while (head < tail) {
      const int v = queue_[head++];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue_[tail++] = static_cast<int>(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          const int next = mate_[to];
          in_tree_[next] = 1;
          queue_[tail++] = next;
        }
      }
    }
    return -1;
  }

  const AdjacencyList& adj_;
  std::size_t n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<int> queue_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> lca_mark_;
};

}  // namespace

std::vector<int> blossom_matching(const AdjacencyList& adj, std::size_t cap) {
  BlossomSearch search(adj);
  std::vector<int>& mate = search.mate();
  std::size_t size = 0;
  // Greedy start; augmentation below makes it maximum.
  for (std::size_t v = 0; v < adj.size() && size < cap; ++v) {
    if (mate[v] != -1) continue;
    for (int to : adj[v]) {
      if (mate[to] == -1 && to != static_cast<int>(v)) {
        mate[v] = to;
        mate[to] = static_cast<int>(v);
        ++size;
        break;
      }
    }
  }
  for (std::size_t v = 0; v < adj.size() && size < cap; ++v) {
    if (mate[v] == -1 && search.augment_from(static_cast<int>(v))) ++size;
  }
  return mate;
}

Matching greedy_maximal_matching(const Graph& g) {
  std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
  Matching m;
  for (const Edge& e : g.edges()) {
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = true;
      m.edges.push_back(e);
    }
  }
  return m;
}

Matching maximum_matching(const Graph& g, std::size_t cap) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
  std::iota(all.begin(), all.end(), 0);
  return maximum_matching_in(g, all, [](Vertex, Vertex) { return true; }, cap);
}

}  // namespace biasham
