#pragma once

#include <optional>
#include <span>
#include <vector>

#include "biasham/colouring.hpp"
#include "biasham/graph.hpp"

namespace biasham {

/// Independent set A split into parts A_1..A_{r-1} of n/2r vertices each,
/// taken from A in sorted order. Vertices of A beyond the parts fall under
/// colour r together with B = V \ A.
struct PartitionedColouringPlan {
  int n = 0;
  int r = 2;
  std::vector<Vertex> independent;          // A, sorted
  std::vector<std::vector<Vertex>> parts;   // A_1..A_{r-1}
  std::vector<Colour> part_of;              // part_of[v] = i for v in A_i, else r

  /// Throws Errc::indivisible_n unless 2r | n, Errc::set_too_small unless
  /// |A| >= (r-1) n / 2r, Errc::invalid_argument for a malformed A.
  static PartitionedColouringPlan make(int n, int r, std::span<const Vertex> A);
};

/// Colour i on every edge meeting A_i, colour r on the rest. Every Hamilton
/// cycle of g then has n/r edges of each colour when |A| = (r-1) n / 2r.
/// Throws Errc::not_independent if A spans an edge of g, plus the plan errors.
EdgeColouring balanced_colouring(const Graph& g, int r, std::span<const Vertex> A);

/// Colouring of split ∪ extra. A is the set of split-vertices that are not
/// adjacent to everything; it is partitioned as in balanced_colouring. Extra
/// edges between two parts A_i and A_j take colour min(i, j). Throws
/// Errc::too_many_extra_edges when e(extra) >= n/r, Errc::size_mismatch,
/// Errc::not_independent if A is not independent in split, and the plan
/// errors.
EdgeColouring critical_colouring(const Graph& split, const Graph& extra, int r);

/// Greedy independent set: repeatedly take a vertex of minimum remaining
/// degree (lowest index on ties) and delete its neighbourhood. Not exact;
/// returns nullopt when the greedy set is smaller than target.
std::optional<std::vector<Vertex>> find_large_independent_set(const Graph& g, int target);

}  // namespace biasham
