#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "biasham/colouring.hpp"
#include "biasham/graph.hpp"
#include "biasham/measures.hpp"
#include "biasham/rational.hpp"
#include "biasham/sequences.hpp"

namespace biasham {

/// Size limits past which the brute-force routines refuse to run.
struct OracleGuard {
  int max_n_hamilton = 12;
  int max_n_path = 16;
  int max_colourings_exponent = 20;  // r^e(g) <= 2^this
};

/// Calls visit once per Hamilton cycle, in canonical form (starts at 0,
/// second vertex < last vertex), in lexicographic order. Stops early when
/// visit returns false. Throws Errc::guard_exceeded above the guard.
void for_each_hamilton_cycle(const Graph& g,
                             const std::function<bool(std::span<const Vertex>)>& visit,
                             const OracleGuard& guard = {});

std::vector<CycleSeq> enumerate_hamilton_cycles(const Graph& g, const OracleGuard& guard = {});

std::uint64_t count_hamilton_cycles(const Graph& g, const OracleGuard& guard = {});

/// Extremes of the per-colour edge counts over all Hamilton cycles.
struct ColourProfile {
  std::uint64_t cycles = 0;
  std::vector<int> min_count;  // index c-1
  std::vector<int> max_count;
  Rational max_bias;
  CycleSeq argmax;  // first cycle (canonical order) attaining max_bias
};

/// Throws Errc::no_hamilton_cycle when g has none.
ColourProfile colour_profile(const EdgeColouring& chi, const OracleGuard& guard = {});

struct BiasOptimum {
  Rational bias;
  CycleSeq cycle;
  BiasReport report;
};

/// Maximum colour bias over all Hamilton cycles. Throws
/// Errc::no_hamilton_cycle and Errc::guard_exceeded.
BiasOptimum max_bias_fixed_colouring(const EdgeColouring& chi, const OracleGuard& guard = {});

/// min over r-colourings of the maximum bias, enumerating colourings as
/// restricted growth strings (one representative per colour permutation).
Rational exact_hr_tiny(const Graph& g, int r, const OracleGuard& guard = {});

/// A maximum-vertex simple path by dynamic programming over vertex subsets.
PathSeq longest_path_exact(const Graph& g, const OracleGuard& guard = {});

/// Maximum-cardinality matching computed with Boost's Edmonds
/// implementation, independent of the library's own blossom code.
Matching max_matching_exact(const Graph& g);

}  // namespace biasham
