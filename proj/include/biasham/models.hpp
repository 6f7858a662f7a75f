#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "biasham/graph.hpp"
#include "biasham/random.hpp"
#include "biasham/rational.hpp"

namespace biasham {

/// Host plus random-edge budget of a perturbed graph. Exactly one of m and
/// p is expected to be set.
struct PerturbationParams {
  int n = 0;
  Rational alpha{1, 2};
  std::optional<std::int64_t> m;
  std::optional<double> p;
  int r = 2;

  /// Throws Errc::invalid_argument describing the first bad field.
  void validate() const;
};

/// Uniform m-subset of the C(n,2) vertex pairs, drawn with Floyd's sampling
/// over pair indices. Throws Errc::too_many_edges when m > C(n,2).
Graph gnm(int n, std::int64_t m, const Seed& seed);

/// Every pair independently with probability p.
Graph gnp(int n, double p, const Seed& seed);

/// Size of the independent side A of complete_split(n, alpha): n - ceil(alpha n).
int split_independent_size(int n, const Rational& alpha);

/// A = {0, ..., |A|-1} independent, B = the rest adjacent to every vertex,
/// with |B| = ceil(alpha n).
Graph complete_split(int n, const Rational& alpha);

/// gnp at density min(1, alpha + 0.05), then greedy edge additions to any
/// vertex of degree below ceil(alpha n), partnering each with the
/// lowest-degree non-neighbours (random tie-break).
Graph random_min_degree_host(int n, const Rational& alpha, const Seed& seed);

/// Edge-set union. Throws Errc::size_mismatch for different vertex counts.
Graph graph_union(const Graph& a, const Graph& b);

/// k independent gnp draws, draw i taken from seed.child("sprinkle", i).
std::vector<Graph> sprinkle(int n, std::span<const double> probabilities, const Seed& seed);

}  // namespace biasham
