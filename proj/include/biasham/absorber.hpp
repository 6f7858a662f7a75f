#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "biasham/colouring.hpp"
#include "biasham/error.hpp"
#include "biasham/graph.hpp"
#include "biasham/measures.hpp"
#include "biasham/random.hpp"
#include "biasham/sequences.hpp"

namespace biasham {

/// Constants of the perturbed-graph construction. Random rounds R_i have
/// edge probability c_i / n.
struct PipelineParams {
  double alpha = 0.3;
  int r = 2;
  double epsilon = 0.2;
  double c1 = 0.3;   // absorbing matching round
  double c2 = 40.0;  // connector and long-path round
  double c3 = 40.0;  // joining round
  int K = 10;        // off-colour budget of the near-monochromatic path
  double delta = 0.04;  // join window as a fraction of n
  int max_retries = 5;

  /// Defaults calibrated at n in [200, 1000].
  static PipelineParams desk(double alpha, int r);

  /// Throws Errc::invalid_argument naming the first bad field.
  void validate() const;

  /// Inequalities the asymptotic argument relies on that these constants
  /// break at size n. Informational only.
  std::vector<std::string> warnings(int n) const;

  int window(int n) const;
};

struct AbsorbingMatching {
  Matching matching;
  /// audit[x] = number of matching edges with both ends in N_host(x).
  std::vector<int> audit;
  double threshold = 0;  // epsilon^2 n
  int below_threshold = 0;
};

/// Greedy maximal matching of R in ascending edge order, with the per-vertex
/// count of its edges inside each host neighbourhood. Never fails; a missed
/// bound shows up in below_threshold. Errc::size_mismatch for different
/// vertex counts.
AbsorbingMatching absorbing_matching(const Graph& host, const Graph& R, double epsilon);

enum class ConnectorKind {
  host_two,    // b, z, a with z a common host neighbour
  mixed_three  // b, u, v, a with bu, va host edges and uv a random edge
};

struct AbsorberPath {
  PathSeq path;
  Matching core;  // oriented as laid out along the path
  std::vector<ConnectorKind> connectors;
};

/// Strings the edges of M into one path. Junction i joins b_i to a_{i+1}:
/// through an unused common host neighbour when the common neighbourhood
/// has at least alpha n / 2 vertices, otherwise through an unused R2 edge
/// between N(b_i) \ N(a_{i+1}) and N(a_{i+1}) \ N(b_i). If the preferred
/// connector is unavailable the other kind is tried, then the next edge
/// reversed. Connector vertices avoid V(M) and each other. Throws
/// Errc::connection_failed with the junction index as subject, or
/// Errc::invalid_argument for an empty or invalid M.
AbsorberPath build_absorber(const Graph& host, const Graph& R2, const Matching& M,
                            const PipelineParams& params);

/// Splices each x of U, in ascending order, into the lowest-index core edge
/// {y, z} that lies in N_host(x) and is still consecutive in the current
/// path, replacing y-z by y-x-z. Endpoints are kept. A_prime may be any path
/// that carries core edges. Throws Errc::absorption_failed with x as subject,
/// or Errc::invalid_argument when U meets A_prime.
PathSeq absorb(const PathSeq& A_prime, std::span<const Vertex> U, const AbsorberPath& absorber,
               const Graph& host);

/// Edge colours supplied on demand. The first answer for an edge is kept, so
/// an adaptive strategy still defines a colouring.
class ColourOracle {
 public:
  using Strategy = std::function<Colour(Edge)>;

  ColourOracle(int r, Strategy strategy);

  int r() const noexcept { return r_; }

  /// Throws Errc::invalid_argument if the strategy answers outside 1..r.
  Colour colour(Vertex a, Vertex b);

  /// Colours every edge of g.
  EdgeColouring colour_graph(std::shared_ptr<const Graph> g);

  std::size_t distinct_queries() const noexcept { return memo_.size(); }

 private:
  int r_;
  Strategy strategy_;
  std::unordered_map<std::uint64_t, Colour> memo_;
};

/// Independent uniform colour per edge, derived from the edge and seed only.
ColourOracle uniform_random_oracle(int r, const Seed& seed);

/// min(part_of[u], part_of[v]).
ColourOracle partition_oracle(std::vector<Colour> part_of, int r);

struct TranscriptLine {
  int attempt = 0;
  std::string step;
  std::string status;  // ok, failed or warning
  std::string detail;
};

using Transcript = std::vector<TranscriptLine>;

std::string to_text(const Transcript& transcript);

struct PipelineResult {
  CycleSeq cycle;
  BiasReport bias;
  Transcript transcript;
  int attempts = 0;
  /// host ∪ R1 ∪ R2 ∪ R3 of the successful attempt.
  Graph union_graph;
  std::size_t absorber_vertices = 0;
  std::size_t p1_vertices = 0;
  std::size_t absorbed = 0;
};

class PipelineFailed : public Error {
 public:
  PipelineFailed(Transcript transcript, std::string last_step);

  const Transcript& transcript() const noexcept { return transcript_; }
  const std::string& last_step() const noexcept { return last_step_; }

 private:
  Transcript transcript_;
  std::string last_step_;
};

/// Hamilton cycle of host ∪ R1 ∪ R2 ∪ R3 with the bias carried by a long
/// near-monochromatic path. Each attempt sprinkles fresh rounds from
/// seed.child("attempt", i); a failing step starts the next attempt, up to
/// 1 + max_retries attempts, after which PipelineFailed is thrown.
/// Errc::precondition_violated when min_degree(host) < alpha n.
PipelineResult perturbed_biased_hamilton(const Graph& host, ColourOracle& oracle,
                                         const PipelineParams& params, const Seed& seed);

}  // namespace biasham
