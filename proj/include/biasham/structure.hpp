#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "biasham/colouring.hpp"
#include "biasham/graph.hpp"
#include "biasham/measures.hpp"
#include "biasham/paths.hpp"
#include "biasham/sequences.hpp"

namespace biasham {

/// Vertices v for which every matching of G(v, c) = G[N(v)] minus the edges
/// inside N_c(v) has fewer than `threshold` edges.
std::vector<Vertex> x_set(const EdgeColouring& chi, Colour c, int threshold);

/// Vertices v whose bipartite graph between N_c(v) and N(v) \ N_c(v) has a
/// matching of at least `threshold` edges, none of colour c.
std::vector<Vertex> y_set(const EdgeColouring& chi, Colour c, int threshold);

/// x_set with threshold 8t.
std::vector<Vertex> compute_Xc(const EdgeColouring& chi, Colour c, int t);

/// y_set with threshold 4t.
std::vector<Vertex> compute_Yc(const EdgeColouring& chi, Colour c, int t);

/// Matching of at least `size` edges in G[N(v)], each c-good for v. Takes a
/// maximum matching of G(v, c) and drops its non-c edges across the
/// N_c(v) / rest boundary; if fewer than `size` edges survive, falls back to
/// a maximum matching of the c-good edges themselves. nullopt when both
/// fall short.
std::optional<Matching> c_good_matching(const EdgeColouring& chi, Colour c, Vertex v, int size);

/// Two triangles {z, e1.u, e1.v} and {z, e2.u, e2.v} meeting only at z.
struct Bowtie {
  Vertex center = 0;
  Edge side1;
  Edge side2;

  friend bool operator==(const Bowtie&, const Bowtie&) = default;
};

/// Type one: all four center edges have colour c and the side edges differ
/// in colour. Type two: the side edges differ in colour, one of them has
/// colour c, and neither center edge at that side has colour c.
enum class BowtieKind { one, two };

/// Five distinct vertices, both triangles present, and the kind's colour
/// pattern.
bool certify_bowtie(const EdgeColouring& chi, const Bowtie& bowtie, BowtieKind kind, Colour c);

struct BowtieSearch {
  std::vector<Bowtie> bowties;
  bool shortfall = false;  // fewer than the requested count
};

/// Greedy vertex-disjoint bowties, one attempt per vertex of centers_from in
/// the given order. Type one is centred at the vertex itself with both side
/// edges inside its c-neighbourhood. Type two uses the vertex y as a side
/// vertex: a c-edge yz, a centre w adjacent to both by non-c edges, and a
/// non-c side edge inside N(w). Every returned bowtie certifies.
BowtieSearch find_bowties(const EdgeColouring& chi, Colour c, BowtieKind kind,
                          std::span<const Vertex> centers_from, std::size_t count);

struct TwoCompletions {
  CycleSeq best;  // larger bias of h1 and h2, h1 on ties
  CycleSeq h1;
  CycleSeq h2;
};

/// Hamilton cycle of g minus the centres through every side edge, then
/// both ways of putting the centres back. h1 routes each centre through the
/// marked side edge (colour c for type two; for type one the most common
/// side colour c', whose bowties are the only ones used), h2 through the
/// other side edge. Errors from posa_hamilton_with_forest propagate.
TwoCompletions bowties_to_biased_hamilton(const EdgeColouring& chi,
                                          std::span<const Bowtie> bowties, BowtieKind kind,
                                          Colour c, const PosaOptions& options = {});

struct Attachment {
  Vertex v;
  Vertex x;
  Vertex y;
};

struct Assembly {
  CycleSeq best;
  CycleSeq h1;  // F ∪ H minus v_0 v_t
  CycleSeq h2;  // H with each x_i y_i replaced by x_i v_i y_i
  Colour c_star = 1;
  int f_sum = 0;       // sum of f_{c*}(v_i, x_i, y_i)
  int count_gap = 0;   // c*-edges of h1 minus those of h2
};

/// F = [v_0, ..., v_t] and H share exactly v_0, v_t and the edge v_0 v_t,
/// together cover V(g), and attach lists v_1..v_{t-1} (any order) each with a
/// distinct H-edge x y inside its neighbourhood. Checks the identity
/// count_gap = #c*(E(F) \ {v_0 v_t}) - [chi(v_0 v_t) = c*] - f_sum.
/// Throws Errc::structure_violation naming the broken condition.
Assembly two_cycle_assembly(const EdgeColouring& chi, const CycleSeq& F, const CycleSeq& H,
                            std::span<const Attachment> attach, Colour c_star);

/// Thresholds of the dichotomy. The paper set needs n >= 2^10 r^2 b; the
/// desk set keeps t : s = 4 : 1 and the 2 : 1 ratios between the X, Y and
/// witness thresholds at sizes a 16-vertex graph can meet.
struct ClassifierParams {
  int b = 1;
  int t = 4;
  int s = 1;
  int x_threshold = 2;
  int y_threshold = 1;
  int good_size = 1;
  int bowtie_trigger = 1;
  int bowties_one = 4;
  int bowties_two = 2;
  int witness_threshold = 4;
  bool relaxed_posa = true;

  static ClassifierParams paper(int b, int r);
  static ClassifierParams desk(int b, int r);
  void validate() const;
};

/// A set of ceil((r+1) n / 2r) vertices whose c*-free matchings are small.
struct StructureWitness {
  std::vector<Vertex> U;
  Colour c_star = 1;
  Matching max_free_matching;
  int threshold = 0;
};

struct BiasedCycle {
  CycleSeq cycle;
  BiasReport bias;
  std::string route;  // bowtie-one, bowtie-two or two-cycle
};

/// No route reached bias b and no witness was found; the cycle is the most
/// biased one seen.
struct BestEffortCycle {
  CycleSeq cycle;
  BiasReport bias;
};

using ClassifierOutcome = std::variant<BiasedCycle, StructureWitness, BestEffortCycle>;

std::string_view outcome_kind(const ClassifierOutcome& outcome);

/// The constructive routes in order (bowties of type one when |X_c*| reaches
/// the trigger, type two likewise for Y_c*, then the two-cycle assembly
/// with f-sum below s); the first cycle of bias >= b wins. Otherwise the
/// witness from the (v, c) whose c-free matching in N(v) is smallest, then a
/// best-effort cycle. Throws
/// Errc::precondition_violated when min degree < ceil((r+1) n / 2r).
ClassifierOutcome classify(const EdgeColouring& chi, const ClassifierParams& params);

struct OutcomeCheck {
  bool ok = true;
  std::string reason;
};

/// Rechecks a certificate from scratch: cycles for Hamiltonicity and bias,
/// witnesses for size, colour, and maximality with the Boost matcher.
OutcomeCheck verify_outcome(const EdgeColouring& chi, const ClassifierParams& params,
                            const ClassifierOutcome& outcome);

struct CriticalResult {
  CycleSeq cycle;
  BiasReport bias;
  std::string route;  // classify outcome kind
  std::optional<StructureWitness> witness;
  Matching M;  // maximum matching of (host ∪ R)[W], forced into the cycle
  int W_size = 0;
  int d = 0;  // cycle edges inside W
  int q = 0;  // cycle edges inside U not of colour c*
  int c_star_count = 0;
  int count_bound = 0;  // n - (2|W| - d + q)
  int q_bound = 0;      // 2 |max_free_matching|
};

/// Classifies the host's colouring; a biased cycle is returned as is. On a
/// witness (U, c*) the cycle is threaded through a maximum matching M of
/// (host ∪ R)[V \ U] and c*-edges are counted against n - (2|W| - d + q).
/// chi colours host ∪ R. Errc::precondition_violated when the host's min
/// degree is below ceil((r+1) n / 2r); errors from the cycle search propagate.
CriticalResult critical_biased_hamilton(const Graph& host, const Graph& R,
                                        const EdgeColouring& chi, const ClassifierParams& params);

}  // namespace biasham
