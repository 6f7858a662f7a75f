#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biasham/colouring.hpp"
#include "biasham/graph.hpp"
#include "biasham/rational.hpp"
#include "biasham/sequences.hpp"

namespace biasham {

/// Majority colour of a cycle and its excess over an even split.
struct BiasReport {
  Colour colour = 1;
  int count = 0;
  /// bias = bias_numerator / bias_denominator = count - length/r, with the
  /// denominator fixed to r (not reduced).
  std::int64_t bias_numerator = 0;
  std::int64_t bias_denominator = 1;
  std::vector<int> per_colour;  // per_colour[c-1] = edges of colour c

  Rational bias() const { return Rational(bias_numerator, bias_denominator); }
};

/// Colour counts of the cycle's edges with the majority colour (smallest id
/// on ties). The length used in count - length/r is the number of cycle
/// edges, which is n for a Hamilton cycle. Throws Errc::invalid_cycle.
BiasReport colour_bias(const CycleSeq& cycle, const EdgeColouring& chi);

/// Minimum degree; 0 for the empty vertex set.
int min_degree(const Graph& g);

bool is_hamilton_cycle(const Graph& g, const CycleSeq& c);

/// Y(G): edges sharing an endpoint with at least one other edge.
std::size_t non_isolated_edge_count(const Graph& g);

struct KJoinedResult {
  bool joined = true;
  /// Two disjoint k-sets spanning no edge, when joined is false.
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> witness;
};

inline constexpr int kDefaultJoinedGuard = 16;

/// Exact test that every two disjoint k-sets span an edge. Exhaustive over
/// k-subsets for n <= guard; k = 1 is decided at any size (it means
/// completeness). Otherwise throws Errc::guard_exceeded.
KJoinedResult is_k_joined(const Graph& g, int k, int guard = kDefaultJoinedGuard);

/// Exact maximum matching of g[U] using only edges whose colour differs
/// from c.
Matching max_matching_avoiding_colour(const EdgeColouring& chi, Colour c,
                                      std::span<const Vertex> U);

/// 1[chi(vx)=c] + 1[chi(vy)=c] - 1[chi(xy)=c]. Throws Errc::missing_edge if
/// any of vx, vy, xy is absent.
int f_c(Vertex v, Vertex x, Vertex y, const EdgeColouring& chi, Colour c);

/// Whether {x,y} is c-good for v, i.e. f_c(v, x, y) <= 0.
bool is_c_good(Vertex v, const Edge& xy, const EdgeColouring& chi, Colour c);

}  // namespace biasham
