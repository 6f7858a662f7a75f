#pragma once

// Exhaustive reference implementations used only by the tests. They share
// the Graph type with the library but none of its algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "biasham/colouring.hpp"
#include "biasham/graph.hpp"

namespace brute {

using biasham::Colour;
using biasham::EdgeColouring;
using biasham::Graph;
using biasham::Vertex;

/// Seeded G(n, p) drawn with a plain std::mt19937_64 stream.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Random r-colouring of g, uniform per edge.
EdgeColouring random_colouring(const Graph& g, int r, std::uint64_t seed);

/// Maximum matching size by memoised recursion over vertex subsets (n <= 22).
int max_matching_size(const Graph& g);

/// Maximum matching size of g[U] using only edges whose colour is not c.
int max_matching_avoiding(const EdgeColouring& chi, Colour c, const std::vector<Vertex>& U);

/// Hamilton cycle count by dynamic programming over subsets (n <= 16).
std::uint64_t hamilton_cycle_count(const Graph& g);

/// Independence number by exhaustive branching (n <= 30).
int independence_number(const Graph& g);

/// Walks all pairs of disjoint k-sets.
bool k_joined(const Graph& g, int k);

/// Longest path vertex count by exhaustive DFS from every vertex.
int longest_path_vertices(const Graph& g);

/// Structural characterisation of c-goodness: xy inside the non-c
/// neighbourhood, or exactly one of vx, vy coloured c and xy coloured c.
bool c_good_structural(Colour vx, Colour vy, Colour xy, Colour c);

/// X_c membership from the definition: maximum matching of G[N(v)] minus
/// the edges inside N_c(v) has fewer than 8t edges.
bool in_Xc(const EdgeColouring& chi, Colour c, int t, Vertex v);

/// Y_c membership: the non-c edges between N_c(v) and its complement in N(v)
/// carry a matching of at least 4t edges.
bool in_Yc(const EdgeColouring& chi, Colour c, int t, Vertex v);

}  // namespace brute

namespace brute {

/// Seeded graph on n vertices with minimum degree at least `min_deg`:
/// G(n, p) plus random edges at deficient vertices.
Graph random_dense_graph(int n, double p, int min_deg, std::uint64_t seed);

/// Random path forest of g with exactly `edges` edges (or fewer if g runs
/// out of room), built from random walks.
std::vector<std::vector<Vertex>> random_forest(const Graph& g, int edges, std::uint64_t seed);

}  // namespace brute
