#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "biasham/colouring.hpp"
#include "biasham/graph.hpp"
#include "biasham/sequences.hpp"

namespace biasham {

/// Vertex-disjoint paths. Single-vertex paths are allowed and contribute no
/// edges.
struct PathForest {
  std::vector<PathSeq> paths;

  std::size_t edge_count() const noexcept;
  std::vector<Edge> edges() const;
};

/// Disjoint paths, each valid in g.
bool is_valid_forest(const Graph& g, const PathForest& forest);

struct NearMonoPath {
  PathSeq path;
  Colour colour = 1;
  int off_colour = 0;  // edges of path whose colour differs from `colour`
};

/// Depth-first search keeping the stack of the current branch; returns the
/// deepest stack seen. Neighbours are tried in ascending order and new roots
/// are the lowest unvisited vertex. If g is k-joined the result has at least
/// n - 2k vertices; k is only the caller's claim and does not steer the
/// search. Empty graph on n > 0 vertices gives a single vertex.
PathSeq dfs_long_path(const Graph& g, int k = 0);

/// The same search restricted to vertices with available[v] != 0 and run
/// from `root` only, so the path starts at root (root must be available).
PathSeq dfs_long_path_from(const Graph& g, Vertex root, const std::vector<char>& available);

/// Longest path found by per-colour DFS in each colour class, greedily
/// extended at both ends: first along same-colour edges, then across at most
/// K off-colour bridge edges. The best candidate (longest, then fewer bridges,
/// then lower colour) is cut to target_len vertices. Throws
/// Errc::target_unreachable when no candidate reaches target_len and
/// Errc::invalid_argument when target_len > n.
NearMonoPath near_monochromatic_path(const EdgeColouring& chi, std::size_t target_len, int K);

/// Colour c* with the most edges (smallest on ties), a c*-monochromatic path
/// v_1..v_t and a vertex v_0 adjacent to v_1 and v_t outside the path. The
/// returned cycle is [v_0, v_1, ..., v_t]; only its two edges at v_0 may
/// have colours other than c*. Throws Errc::no_path when no c*-path on t
/// vertices is found and Errc::no_closing_vertex when no found path closes.
CycleSeq monochromatic_cycle(const EdgeColouring& chi, int t);

struct PosaOptions {
  /// Skip the minimum-degree precondition; the search may then end in
  /// Errc::search_exhausted.
  bool relaxed = false;
  /// Repair budget; 0 means 50 n.
  std::size_t max_moves = 0;
};

/// Hamilton cycle of g containing every edge of J. Each forest path is a
/// block entered and left only at its ends; blocks are put in a cyclic order
/// and every gap between consecutive blocks is repaired by reversing a run
/// of blocks, choosing the lowest-index boundary that works. Requires
/// n >= 3, edges(J) <= n - 2 and min degree >= ceil((n + edges(J)) / 2),
/// otherwise Errc::precondition_violated (unless relaxed). Errc::invalid_argument
/// if J is not a forest of g.
CycleSeq posa_hamilton_with_forest(const Graph& g, const PathForest& J,
                                   const PosaOptions& options = {});

struct WindowJoin {
  PathSeq joined;
  std::vector<Vertex> discarded;
};

/// Joins pa to pb through an R-edge between one of the last `window`
/// vertices of pa and one of the first `window` vertices of pb, choosing the
/// edge that discards the fewest vertices. With offsets i (into pa's window)
/// and j (into pb's) the discard count is (window - 1 - i) + j. Throws
/// Errc::no_connecting_edge, or Errc::invalid_argument for overlapping paths
/// or a window outside [1, min(|pa|, |pb|)].
WindowJoin connect_windows(const PathSeq& pa, const PathSeq& pb, const Graph& R, int window);

struct WindowClose {
  CycleSeq cycle;
  std::vector<Vertex> discarded;
};

/// Closes a path into a cycle through an R-edge between its last `window`
/// and first `window` vertices, fewest discards first. The windows must not
/// overlap and the remaining cycle must keep at least 3 vertices.
WindowClose close_windows(const PathSeq& p, const Graph& R, int window);

}  // namespace biasham
