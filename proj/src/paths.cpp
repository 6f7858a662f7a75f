#include "biasham/paths.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "biasham/error.hpp"
#include "biasham/measures.hpp"

namespace biasham {

std::size_t PathForest::edge_count() const noexcept {
  std::size_t total = 0;
  for (const PathSeq& p : paths) total += p.edge_count();
  return total;
}

std::vector<Edge> PathForest::edges() const {
  std::vector<Edge> out;
  for (const PathSeq& p : paths) {
    auto e = path_edges(p);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

bool is_valid_forest(const Graph& g, const PathForest& forest) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (const PathSeq& p : forest.paths) {
    if (p.empty() || !is_valid_path(g, p)) return false;
    for (Vertex v : p.vertices) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

namespace {

// Stack-based DFS over the available vertices. The stack is always a path;
// its largest size is recorded when the top vertex is finished.
class DfsSearch {
 public:
  DfsSearch(const Graph& g, std::vector<char> available)
      : g_(g), state_(std::move(available)), cursor_(state_.size(), 0) {
    for (char& s : state_) s = s ? kFresh : kDone;
  }

  void explore(Vertex start) {
    if (state_[start] != kFresh) return;
    state_[start] = kOnStack;
    stack_.push_back(start);
    while (!stack_.empty()) {
      const Vertex v = stack_.back();
      const auto nb = g_.neighbours(v);
      std::size_t& i = cursor_[v];
      while (i < nb.size() && state_[nb[i]] != kFresh) ++i;
      if (i < nb.size()) {
        const Vertex u = nb[i];
        state_[u] = kOnStack;
        stack_.push_back(u);
      } else {
        if (stack_.size() > best_.size()) best_ = stack_;
        state_[v] = kDone;
        stack_.pop_back();
      }
    }
  }

  void explore_all() {
    for (Vertex v = 0; v < g_.n(); ++v) explore(v);
  }

  PathSeq result() && { return PathSeq{std::move(best_)}; }

 private:
  static constexpr char kFresh = 0;
  static constexpr char kOnStack = 1;
  static constexpr char kDone = 2;

  const Graph& g_;
  std::vector<char> state_;
  std::vector<std::size_t> cursor_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> best_;
};

}  // namespace

PathSeq dfs_long_path(const Graph& g, int /*k*/) {
  DfsSearch search(g, std::vector<char>(static_cast<std::size_t>(g.n()), 1));
  search.explore_all();
  return std::move(search).result();
}

PathSeq dfs_long_path_from(const Graph& g, Vertex root, const std::vector<char>& available) {
  if (root < 0 || root >= g.n() || available.size() != static_cast<std::size_t>(g.n()) ||
      !available[root]) {
    throw Error(Errc::invalid_argument, "root must be an available vertex", root);
  }
  DfsSearch search(g, available);
  search.explore(root);
  return std::move(search).result();
}

namespace {

// One colour's attempt: a DFS path in the colour class, then greedy growth
// at both ends.
class MonoPathGrower {
 public:
  MonoPathGrower(const EdgeColouring& chi, Colour c, int budget)
      : chi_(chi), g_(chi.graph()), c_(c), budget_(budget), klass_(colour_class(chi, c)),
        used_(static_cast<std::size_t>(g_.n()), 0) {}

  NearMonoPath run() {
    path_ = dfs_long_path(klass_).vertices;
    for (Vertex v : path_) used_[v] = 1;
    if (path_.empty()) return {};
    bool grew = true;
    while (grew) {
      grew = extend_tail();
      std::reverse(path_.begin(), path_.end());
      grew = extend_tail() || grew;
      std::reverse(path_.begin(), path_.end());
      if (!grew && bridges_ < budget_) grew = bridge_longer_end();
    }
    return NearMonoPath{PathSeq{path_}, c_, bridges_};
  }

 private:
  std::vector<char> free_mask() const {
    std::vector<char> mask(used_.size());
    for (std::size_t v = 0; v < used_.size(); ++v) mask[v] = used_[v] ? 0 : 1;
    return mask;
  }

  void append(const std::vector<Vertex>& segment, std::size_t from) {
    for (std::size_t i = from; i < segment.size(); ++i) {
      path_.push_back(segment[i]);
      used_[segment[i]] = 1;
    }
  }

  bool extend_tail() {
    const Vertex x = path_.back();
    std::vector<char> mask = free_mask();
    mask[x] = 1;
    const PathSeq seg = dfs_long_path_from(klass_, x, mask);
    if (seg.size() < 2) return false;
    append(seg.vertices, 1);
    return true;
  }

  // Longest same-colour segment reachable from the tail over one off-colour
  // edge.
  PathSeq best_bridge() const {
    const Vertex x = path_.back();
    const std::vector<char> mask = free_mask();
    PathSeq best;
    for (Vertex y : g_.neighbours(x)) {
      if (used_[y] || chi_.colour(x, y) == c_) continue;
      PathSeq seg = dfs_long_path_from(klass_, y, mask);
      if (seg.size() > best.size()) best = std::move(seg);
    }
    return best;
  }

  bool bridge_longer_end() {
    const PathSeq at_tail = best_bridge();
    std::reverse(path_.begin(), path_.end());
    const PathSeq at_head = best_bridge();
    const bool use_head = at_head.size() > at_tail.size();
    if (!use_head) std::reverse(path_.begin(), path_.end());
    const PathSeq& seg = use_head ? at_head : at_tail;
    if (!seg.empty()) {
      append(seg.vertices, 0);
      ++bridges_;
    }
    if (use_head) std::reverse(path_.begin(), path_.end());
    return !seg.empty();
  }

  const EdgeColouring& chi_;
  const Graph& g_;
  Colour c_;
  int budget_;
  Graph klass_;
  std::vector<char> used_;
  std::vector<Vertex> path_;
  int bridges_ = 0;
};

int off_colour_edges(const EdgeColouring& chi, const PathSeq& p, Colour c) {
  int off = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (chi.colour(p.vertices[i - 1], p.vertices[i]) != c) ++off;
  }
  return off;
}

}  // namespace

NearMonoPath near_monochromatic_path(const EdgeColouring& chi, std::size_t target_len, int K) {
  const Graph& g = chi.graph();
  if (target_len > static_cast<std::size_t>(g.n())) {
    throw Error(Errc::invalid_argument, "target length exceeds the vertex count");
  }
  if (K < 0) throw Error(Errc::invalid_argument, "negative off-colour budget");
  NearMonoPath best;
  bool have = false;
  for (Colour c = 1; c <= chi.r(); ++c) {
    NearMonoPath candidate = MonoPathGrower(chi, c, K).run();
    const bool better = !have || candidate.path.size() > best.path.size() ||
                        (candidate.path.size() == best.path.size() &&
                         candidate.off_colour < best.off_colour);
    if (better) {
      best = std::move(candidate);
      have = true;
    }
  }
  if (best.path.size() < target_len) {
    throw Error(Errc::target_unreachable,
                "longest near-monochromatic path has " + std::to_string(best.path.size()) +
                    " vertices, target " + std::to_string(target_len));
  }
  best.path.vertices.resize(target_len);
  best.off_colour = off_colour_edges(chi, best.path, best.colour);
  return best;
}

namespace {

std::optional<CycleSeq> close_some_window(const Graph& g, const PathSeq& p, int t) {
  const std::size_t len = p.size();
  const auto ut = static_cast<std::size_t>(t);
  if (len < ut) return std::nullopt;
  std::vector<char> inside(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t s = 0; s + ut <= len; ++s) {
    for (std::size_t i = s; i < s + ut; ++i) inside[p.vertices[i]] = 1;
    const Vertex v1 = p.vertices[s];
    const Vertex vt = p.vertices[s + ut - 1];
    for (Vertex v0 : g.neighbours(v1)) {
      if (!inside[v0] && g.adjacent(v0, vt)) {
        CycleSeq cycle;
        cycle.vertices.push_back(v0);
        cycle.vertices.insert(cycle.vertices.end(), p.vertices.begin() + static_cast<std::ptrdiff_t>(s),
                              p.vertices.begin() + static_cast<std::ptrdiff_t>(s + ut));
        return cycle;
      }
    }
    for (std::size_t i = s; i < s + ut; ++i) inside[p.vertices[i]] = 0;
  }
  return std::nullopt;
}

}  // namespace

CycleSeq monochromatic_cycle(const EdgeColouring& chi, int t) {
  const Graph& g = chi.graph();
  if (t < 2 || t + 1 > g.n()) {
    throw Error(Errc::invalid_argument, "need 2 <= t <= n - 1 (t=" + std::to_string(t) + ")");
  }
  Colour star = 1;
  for (Colour c = 2; c <= chi.r(); ++c) {
    if (chi.count(c) > chi.count(star)) star = c;
  }
  const Graph klass = colour_class(chi, star);
  const PathSeq first = dfs_long_path(klass);
  bool found_path = first.size() >= static_cast<std::size_t>(t);
  if (auto cycle = close_some_window(g, first, t)) return *cycle;
  const std::vector<char> all(static_cast<std::size_t>(g.n()), 1);
  for (Vertex root = 0; root < g.n(); ++root) {
    const PathSeq p = dfs_long_path_from(klass, root, all);
    if (p.size() < static_cast<std::size_t>(t)) continue;
    found_path = true;
    if (auto cycle = close_some_window(g, p, t)) return *cycle;
  }
  if (!found_path) {
    throw Error(Errc::no_path, "no monochromatic path on " + std::to_string(t) +
                                   " vertices in colour " + std::to_string(star));
  }
  throw Error(Errc::no_closing_vertex, "no found path has endpoints with a common outside neighbour");
}

namespace {

struct Placed {
  int block;
  bool reversed;
};

class ForestCycleBuilder {
 public:
  ForestCycleBuilder(const Graph& g, const PathForest& J) : g_(g) {
    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    for (const PathSeq& p : J.paths) {
      blocks_.push_back(p.vertices);
      for (Vertex v : p.vertices) covered[v] = 1;
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!covered[v]) blocks_.push_back({v});
    }
  }

  CycleSeq run(std::size_t budget) {
    initial_order();
    std::size_t moves = 0;
    for (;;) {
      bool any_gap = false;
      bool repaired = false;
      for (std::size_t i = 0; i < order_.size() && !repaired; ++i) {
        if (joined(i)) continue;
        any_gap = true;
        repaired = repair(i);
      }
      if (!any_gap) break;
      if (!repaired || ++moves > budget) {
        throw Error(Errc::search_exhausted, "gap repair stalled after " + std::to_string(moves) +
                                                " moves");
      }
    }
    CycleSeq cycle;
    for (const Placed& p : order_) {
      const auto& b = blocks_[p.block];
      if (p.reversed) {
        cycle.vertices.insert(cycle.vertices.end(), b.rbegin(), b.rend());
      } else {
        cycle.vertices.insert(cycle.vertices.end(), b.begin(), b.end());
      }
    }
    return cycle;
  }

 private:
  Vertex first(const Placed& p) const {
    return p.reversed ? blocks_[p.block].back() : blocks_[p.block].front();
  }
  Vertex last(const Placed& p) const {
    return p.reversed ? blocks_[p.block].front() : blocks_[p.block].back();
  }

  bool joined(std::size_t i) const {
    return g_.adjacent(last(order_[i]), first(order_[(i + 1) % order_.size()]));
  }

  void initial_order() {
    const std::size_t q = blocks_.size();
    std::vector<char> placed(q, 0);
    order_.push_back({0, false});
    placed[0] = 1;
    for (std::size_t step = 1; step < q; ++step) {
      const Vertex end = last(order_.back());
      Placed next{-1, false};
      for (std::size_t b = 0; b < q && next.block < 0; ++b) {
        if (placed[b]) continue;
        if (g_.adjacent(end, blocks_[b].front())) {
          next = {static_cast<int>(b), false};
        } else if (g_.adjacent(end, blocks_[b].back())) {
          next = {static_cast<int>(b), true};
        }
      }
      if (next.block < 0) {
        for (std::size_t b = 0; b < q; ++b) {
          if (!placed[b]) {
            next = {static_cast<int>(b), false};
            break;
          }
        }
      }
      placed[next.block] = 1;
      order_.push_back(next);
    }
  }

  // Gap after position i. Rotate so the gap closes the sequence
  // B_0 ... B_{q-1} (x = last of B_{q-1}, y = first of B_0) and look for a
  // boundary j with x ~ last(B_j) and y ~ first(B_{j+1}); reversing
  // B_{j+1..q-1} removes the gap without creating a new one.
  bool repair(std::size_t i) {
    const std::size_t q = order_.size();
    std::vector<Placed> seq;
    seq.reserve(q);
    for (std::size_t k = 1; k <= q; ++k) seq.push_back(order_[(i + k) % q]);
    const Vertex x = last(seq[q - 1]);
    const Vertex y = first(seq[0]);
    for (std::size_t j = 0; j + 1 < q; ++j) {
      if (g_.adjacent(x, last(seq[j])) && g_.adjacent(y, first(seq[j + 1]))) {
        std::reverse(seq.begin() + static_cast<std::ptrdiff_t>(j + 1), seq.end());
        for (std::size_t k = j + 1; k < q; ++k) seq[k].reversed = !seq[k].reversed;
        order_ = std::move(seq);
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<Placed> order_;
};

}  // namespace

CycleSeq posa_hamilton_with_forest(const Graph& g, const PathForest& J, const PosaOptions& options) {
  const int n = g.n();
  if (!is_valid_forest(g, J)) {
    throw Error(Errc::invalid_argument, "J is not a path forest of the host graph");
  }
  if (n < 3) throw Error(Errc::precondition_violated, "need at least 3 vertices");
  const auto ell = static_cast<int>(J.edge_count());
  if (!options.relaxed) {
    if (ell > n - 2) {
      throw Error(Errc::precondition_violated,
                  "forest has " + std::to_string(ell) + " edges, at most n - 2 allowed");
    }
    const int needed = (n + ell + 1) / 2;
    if (min_degree(g) < needed) {
      throw Error(Errc::precondition_violated, "min degree " + std::to_string(min_degree(g)) +
                                                   " below (n + l)/2 = " + std::to_string(needed));
    }
  }
  const std::size_t budget =
      options.max_moves ? options.max_moves : 50 * static_cast<std::size_t>(n);
  CycleSeq cycle = ForestCycleBuilder(g, J).run(budget);
  if (!is_hamilton_cycle(g, cycle)) {
    throw Error(Errc::search_exhausted, "internal: assembled sequence is not a Hamilton cycle");
  }
  return cycle;
}

namespace {

void require_disjoint(const PathSeq& a, const PathSeq& b) {
  std::vector<Vertex> all = a.vertices;
  all.insert(all.end(), b.vertices.begin(), b.vertices.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(Errc::invalid_argument, "paths share a vertex");
  }
}

}  // namespace

WindowJoin connect_windows(const PathSeq& pa, const PathSeq& pb, const Graph& R, int window) {
  if (window < 1 || static_cast<std::size_t>(window) > std::min(pa.size(), pb.size())) {
    throw Error(Errc::invalid_argument, "window must lie in [1, min path length]");
  }
  require_disjoint(pa, pb);
  const auto w = static_cast<std::size_t>(window);
  const std::size_t tail = pa.size() - w;
  for (std::size_t d = 0; d <= 2 * (w - 1); ++d) {
    for (std::size_t j = 0; j <= std::min(d, w - 1); ++j) {
      if (d - j > w - 1) continue;
      const std::size_t i = w - 1 - (d - j);
      const Vertex a = pa.vertices[tail + i];
      const Vertex b = pb.vertices[j];
      if (!R.adjacent(a, b)) continue;
      WindowJoin out;
      out.joined.vertices.assign(pa.vertices.begin(),
                                 pa.vertices.begin() + static_cast<std::ptrdiff_t>(tail + i + 1));
      out.joined.vertices.insert(out.joined.vertices.end(),
                                 pb.vertices.begin() + static_cast<std::ptrdiff_t>(j),
                                 pb.vertices.end());
      out.discarded.assign(pa.vertices.begin() + static_cast<std::ptrdiff_t>(tail + i + 1),
                           pa.vertices.end());
      out.discarded.insert(out.discarded.end(), pb.vertices.begin(),
                           pb.vertices.begin() + static_cast<std::ptrdiff_t>(j));
      return out;
    }
  }
  throw Error(Errc::no_connecting_edge, "no edge between the windows");
}

WindowClose close_windows(const PathSeq& p, const Graph& R, int window) {
  if (window < 1 || p.size() < 2 * static_cast<std::size_t>(window) + 1) {
    throw Error(Errc::invalid_argument, "path too short for two disjoint windows");
  }
  const auto w = static_cast<std::size_t>(window);
  const std::size_t tail = p.size() - w;
  for (std::size_t d = 0; d <= 2 * (w - 1); ++d) {
    for (std::size_t j = 0; j <= std::min(d, w - 1); ++j) {
      if (d - j > w - 1) continue;
      const std::size_t i = w - 1 - (d - j);
      if (!R.adjacent(p.vertices[tail + i], p.vertices[j])) continue;
      WindowClose out;
      out.cycle.vertices.assign(p.vertices.begin() + static_cast<std::ptrdiff_t>(j),
                                p.vertices.begin() + static_cast<std::ptrdiff_t>(tail + i + 1));
      out.discarded.assign(p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(j));
      out.discarded.insert(out.discarded.end(),
                           p.vertices.begin() + static_cast<std::ptrdiff_t>(tail + i + 1),
                           p.vertices.end());
      return out;
    }
  }
  throw Error(Errc::no_connecting_edge, "no edge closes the path");
}

}  // namespace biasham
