#include <doctest.h>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>

#include "biasham/adversary.hpp"
#include "biasham/error.hpp"
#include "biasham/measures.hpp"
#include "biasham/models.hpp"
#include "biasham/structure.hpp"
#include "brute.hpp"

using namespace biasham;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;
}

// Colour-class based subgraphs of G[N(v)], matched by exhaustive search.
int outer_size(const EdgeColouring& chi, Colour c, Vertex v) {
  const Graph& g = chi.graph();
  std::vector<Edge> keep;
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(v, e.u) || !g.adjacent(v, e.v)) continue;
    if (chi.colour(v, e.u) == c && chi.colour(v, e.v) == c) continue;
    keep.push_back(e);
  }
  return brute::max_matching_size(Graph(g.n(), keep));
}

int cross_size(const EdgeColouring& chi, Colour c, Vertex v) {
  const Graph& g = chi.graph();
  std::vector<Edge> keep;
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(v, e.u) || !g.adjacent(v, e.v)) continue;
    if ((chi.colour(v, e.u) == c) == (chi.colour(v, e.v) == c)) continue;
    if (chi.colour(e.u, e.v) == c) continue;
    keep.push_back(e);
  }
  return brute::max_matching_size(Graph(g.n(), keep));
}

EdgeColouring colour_table(int n, const std::vector<Edge>& edges, int r,
                           const std::vector<Colour>& colours) {
  auto g = std::make_shared<const Graph>(n, edges);
  std::vector<Colour> table(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    table[*g->edge_id(edges[i].u, edges[i].v)] = colours[i];
  }
  return EdgeColouring(g, r, std::move(table));
}

int count_colour(const CycleSeq& c, const EdgeColouring& chi, Colour col) {
  int k = 0;
  for (std::size_t i = 0; i < c.size(); ++i) k += chi.colour(c.at(i), c.at(i + 1)) == col;
  return k;
}

bool spans(const Graph& g, const CycleSeq& c) {
  if (std::cmp_not_equal(c.size(), g.n())) return false;
  std::set<Vertex> seen(c.vertices.begin(), c.vertices.end());
  if (std::cmp_not_equal(seen.size(), g.n())) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.adjacent(c.at(i), c.at(i + 1))) return false;
  }
  return true;
}

int witness_size(int n, int r) { return ((r + 1) * n + 2 * r - 1) / (2 * r); }

}  // namespace

TEST_CASE("X and Y sets match exhaustive matchings") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    const int n = 8 + static_cast<int>(seed % 7);
    const int r = 2 + static_cast<int>(seed % 2);
    const Graph g = brute::random_graph(n, 0.7, seed);
    const EdgeColouring chi = brute::random_colouring(g, r, seed * 31);
    for (Colour c = 1; c <= r; ++c) {
      for (int k = 1; k <= 4; ++k) {
        const auto X = x_set(chi, c, k);
        const auto Y = y_set(chi, c, k);
        for (Vertex v = 0; v < n; ++v) {
          CHECK((std::ranges::find(X, v) != X.end()) == (outer_size(chi, c, v) < k));
          CHECK((std::ranges::find(Y, v) != Y.end()) == (cross_size(chi, c, v) >= k));
          ++checked;
        }
      }
      const auto X1 = compute_Xc(chi, c, 1);
      const auto Y1 = compute_Yc(chi, c, 1);
      for (Vertex v = 0; v < n; ++v) {
        CHECK((std::ranges::find(X1, v) != X1.end()) == brute::in_Xc(chi, c, 1, v));
        CHECK((std::ranges::find(Y1, v) != Y1.end()) == brute::in_Yc(chi, c, 1, v));
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("c-good matchings exist outside X and Y") {
  int outside = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 10 + static_cast<int>(seed % 5);
    const Graph g = brute::random_graph(n, seed % 2 ? 0.8 : 0.5, seed + 100);
    const EdgeColouring chi = brute::random_colouring(g, 2, seed);
    for (int size = 1; size <= 2; ++size) {
      const auto X = x_set(chi, 1, 2 * size);
      const auto Y = y_set(chi, 1, size);
      for (Vertex v = 0; v < n; ++v) {
        const auto m = c_good_matching(chi, 1, v, size);
        const bool special = std::ranges::find(X, v) != X.end() || std::ranges::find(Y, v) != Y.end();
        if (!special) {
          ++outside;
          REQUIRE(m.has_value());
        }
        if (!m) continue;
        CHECK(std::cmp_greater_equal(m->size(), size));
        std::set<Vertex> hit;
        for (const Edge& e : m->edges) {
          REQUIRE(g.adjacent(e.u, e.v));
          REQUIRE(g.adjacent(v, e.u));
          REQUIRE(g.adjacent(v, e.v));
          CHECK(brute::c_good_structural(chi.colour(v, e.u), chi.colour(v, e.v),
                                         chi.colour(e.u, e.v), 1));
          CHECK(hit.insert(e.u).second);
          CHECK(hit.insert(e.v).second);
        }
      }
    }
  }
  CHECK(outside > 25);
}

TEST_CASE("bowtie certificates") {
  // Centre 0, sides 1-2 and 3-4 on K_5.
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 5; ++a) {
    for (Vertex b = a + 1; b < 5; ++b) edges.push_back(make_edge(a, b));
  }
  auto colours_with = [&](Colour centre, Colour s1, Colour s2) {
    std::vector<Colour> cs;
    for (const Edge& e : edges) {
      if (e.u == 0) cs.push_back(centre);
      else if (e == Edge{1, 2}) cs.push_back(s1);
      else if (e == Edge{3, 4}) cs.push_back(s2);
      else cs.push_back(1);
    }
    return colour_table(5, edges, 3, cs);
  };
  const Bowtie bt{0, {1, 2}, {3, 4}};
  CHECK(certify_bowtie(colours_with(1, 2, 3), bt, BowtieKind::one, 1));
  CHECK_FALSE(certify_bowtie(colours_with(1, 2, 2), bt, BowtieKind::one, 1));
  CHECK_FALSE(certify_bowtie(colours_with(2, 1, 3), bt, BowtieKind::one, 1));
  // Type two: side 1-2 coloured c = 1, its centre edges not.
  CHECK(certify_bowtie(colours_with(2, 1, 3), bt, BowtieKind::two, 1));
  CHECK_FALSE(certify_bowtie(colours_with(1, 1, 3), bt, BowtieKind::two, 1));
  CHECK_FALSE(certify_bowtie(colours_with(2, 2, 3), bt, BowtieKind::two, 1));
  CHECK_FALSE(certify_bowtie(colours_with(1, 2, 3), Bowtie{0, {1, 2}, {2, 4}}, BowtieKind::one, 1));
  const auto sparse = colour_table(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}}, 2, {1, 1, 1, 1, 2});
  CHECK_FALSE(certify_bowtie(sparse, bt, BowtieKind::one, 1));
}

TEST_CASE("greedy bowties are disjoint and certified") {
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 12 + static_cast<int>(seed % 6);
    const Graph g = brute::random_graph(n, 0.85, seed + 7);
    const EdgeColouring chi = brute::random_colouring(g, 2 + static_cast<int>(seed % 2), seed);
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (const BowtieKind kind : {BowtieKind::one, BowtieKind::two}) {
      const std::size_t want = 1 + seed % 3;
      const BowtieSearch s = find_bowties(chi, 1, kind, all, want);
      CHECK(s.bowties.size() <= want);
      CHECK(s.shortfall == (s.bowties.size() < want));
      std::set<Vertex> hit;
      for (const Bowtie& bt : s.bowties) {
        CHECK(certify_bowtie(chi, bt, kind, 1));
        for (Vertex v : {bt.center, bt.side1.u, bt.side1.v, bt.side2.u, bt.side2.v}) {
          CHECK(hit.insert(v).second);
        }
      }
      found += static_cast<int>(s.bowties.size());
    }
  }
  CHECK(found > 30);
}

TEST_CASE("type two bowtie on K9 shifts the c-count") {
  // Centre w = 0, c-side y z = 1 2, other side a b = 3 4.
  std::vector<Edge> edges;
  std::vector<Colour> cs;
  for (Vertex a = 0; a < 9; ++a) {
    for (Vertex b = a + 1; b < 9; ++b) {
      edges.push_back(make_edge(a, b));
      Colour c = (a + b) % 2 + 1;
      if (a == 1 && b == 2) c = 1;
      if (a == 0 && (b == 1 || b == 2)) c = 2;
      if (a == 3 && b == 4) c = 2;
      if (a == 0 && (b == 3 || b == 4)) c = 1;
      cs.push_back(c);
    }
  }
  const EdgeColouring chi = colour_table(9, edges, 2, cs);
  const std::vector<Bowtie> bts{{0, {1, 2}, {3, 4}}};
  REQUIRE(certify_bowtie(chi, bts[0], BowtieKind::two, 1));
  const TwoCompletions tc = bowties_to_biased_hamilton(chi, bts, BowtieKind::two, 1);
  const Graph& g = chi.graph();
  REQUIRE(spans(g, tc.h1));
  REQUIRE(spans(g, tc.h2));
  // h1 trades the c-edge 1-2 for two non-c edges, h2 trades 3-4 for two c-edges.
  const int gap = count_colour(tc.h2, chi, 1) - count_colour(tc.h1, chi, 1);
  CHECK(gap == 3);
  const Rational b1 = colour_bias(tc.h1, chi).bias();
  const Rational b2 = colour_bias(tc.h2, chi).bias();
  CHECK(std::max(b1, b2) >= Rational(3, 2));
  CHECK(colour_bias(tc.best, chi).bias() == std::max(b1, b2));
}

TEST_CASE("bowtie completions on random graphs") {
  int runs = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 16;
    const Graph g = brute::random_dense_graph(n, 0.9, 13, seed);
    const EdgeColouring chi = brute::random_colouring(g, 2, seed + 3);
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (const BowtieKind kind : {BowtieKind::one, BowtieKind::two}) {
      const BowtieSearch s = find_bowties(chi, 1, kind, all, 2);
      try {
        const TwoCompletions tc =
            bowties_to_biased_hamilton(chi, s.bowties, kind, 1, PosaOptions{true, 0});
        CHECK(spans(g, tc.h1));
        CHECK(spans(g, tc.h2));
        ++runs;
      } catch (const Error& e) {
        CHECK(e.code() == Errc::search_exhausted);
      }
    }
  }
  CHECK(runs >= 30);
}

TEST_CASE("no bowties gives a plain Hamilton cycle") {
  const auto chi = EdgeColouring::uniform(std::make_shared<const Graph>(complete_graph(7)), 2, 1);
  const TwoCompletions tc = bowties_to_biased_hamilton(chi, {}, BowtieKind::two, 1);
  CHECK(spans(chi.graph(), tc.h1));
  CHECK(tc.h1 == tc.h2);
}

TEST_CASE("two-cycle assembly on eight vertices") {
  std::vector<Edge> edges;
  std::vector<Colour> cs;
  for (Vertex a = 0; a < 8; ++a) {
    for (Vertex b = a + 1; b < 8; ++b) {
      edges.push_back(make_edge(a, b));
      cs.push_back((a * 3 + b) % 2 + 1);
    }
  }
  const EdgeColouring chi = colour_table(8, edges, 2, cs);
  const CycleSeq F{{0, 1, 2, 3}};
  const CycleSeq H{{3, 4, 5, 6, 7, 0}};
  const std::vector<Attachment> attach{{1, 4, 5}, {2, 6, 7}};
  const Assembly a = two_cycle_assembly(chi, F, H, attach, 1);
  CHECK(a.h1 == CycleSeq{{0, 7, 6, 5, 4, 3, 2, 1}});
  CHECK(a.h2 == CycleSeq{{3, 4, 1, 5, 6, 2, 7, 0}});
  int f = 0;
  for (const Attachment& at : attach) {
    f += (chi.colour(at.v, at.x) == 1) + (chi.colour(at.v, at.y) == 1) -
         (chi.colour(at.x, at.y) == 1);
  }
  CHECK(a.f_sum == f);
  CHECK(a.count_gap == count_colour(a.h1, chi, 1) - count_colour(a.h2, chi, 1));

  CHECK(code_of([&] { two_cycle_assembly(chi, F, H, std::vector<Attachment>{{1, 4, 5}}, 1); }) ==
        Errc::structure_violation);
  CHECK(code_of([&] {
          two_cycle_assembly(chi, F, H, std::vector<Attachment>{{1, 4, 5}, {2, 4, 5}}, 1);
        }) == Errc::structure_violation);
  CHECK(code_of([&] {
          two_cycle_assembly(chi, F, H, std::vector<Attachment>{{1, 4, 5}, {2, 4, 6}}, 1);
        }) == Errc::structure_violation);
  CHECK(code_of([&] { two_cycle_assembly(chi, F, CycleSeq{{3, 4, 0, 5, 6, 7}}, attach, 1); }) ==
        Errc::structure_violation);
  CHECK(code_of([&] { two_cycle_assembly(chi, F, CycleSeq{{2, 3, 4, 5, 6, 7, 0}}, attach, 1); }) ==
        Errc::structure_violation);
  CHECK(code_of([&] { two_cycle_assembly(chi, F, CycleSeq{{3, 4, 5, 6, 0}}, attach, 1); }) ==
        Errc::structure_violation);
  CHECK(code_of([&] {
          two_cycle_assembly(chi, CycleSeq{{0, 3}}, H, std::vector<Attachment>{}, 1);
        }) == Errc::structure_violation);
}

TEST_CASE("two-cycle count identity on random complete graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 5);
    const int r = 2 + static_cast<int>(rng() % 2);
    const int t = 2 + static_cast<int>(rng() % 3);
    const Graph g = complete_graph(n);
    const EdgeColouring chi = brute::random_colouring(g, r, rng());
    std::vector<Vertex> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    const CycleSeq F{{pi.begin(), pi.begin() + t + 1}};
    CycleSeq H{{pi[0]}};
    for (int i = t; i < n; ++i) H.vertices.push_back(pi[static_cast<std::size_t>(i)]);
    // Attach to distinct H-edges chosen at random.
    std::vector<std::size_t> slots(H.size());
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<Attachment> attach;
    for (int i = 1; i < t; ++i) {
      const std::size_t k = slots[static_cast<std::size_t>(i - 1)];
      attach.push_back({F.vertices[static_cast<std::size_t>(i)], H.at(k), H.at(k + 1)});
    }
    const Colour c = 1 + static_cast<Colour>(rng() % static_cast<std::uint64_t>(r));
    const Assembly a = two_cycle_assembly(chi, F, H, attach, c);
    REQUIRE(spans(g, a.h1));
    REQUIRE(spans(g, a.h2));
    int f = 0;
    for (const Attachment& at : attach) {
      f += (chi.colour(at.v, at.x) == c) + (chi.colour(at.v, at.y) == c) -
           (chi.colour(at.x, at.y) == c);
    }
    int in_f = 0;
    for (std::size_t i = 0; i + 1 < F.size(); ++i) {
      in_f += chi.colour(F.vertices[i], F.vertices[i + 1]) == c;
    }
    const int closing = chi.colour(F.vertices.front(), F.vertices.back()) == c;
    CHECK(count_colour(a.h1, chi, c) - count_colour(a.h2, chi, c) == in_f - closing - f);
    CHECK(a.count_gap == in_f - closing - f);
  }
}

TEST_CASE("classifier parameter sets") {
  const auto p = ClassifierParams::paper(1, 2);
  CHECK(p.t == 64);
  CHECK(p.s == 16);
  CHECK(p.x_threshold == 512);
  CHECK(p.y_threshold == 256);
  CHECK(p.witness_threshold == 1024);
  const auto d = ClassifierParams::desk(2, 3);
  CHECK(d.t == 4 * d.s);
  CHECK(d.x_threshold == 2 * d.y_threshold);
  CHECK(d.witness_threshold == 2 * d.x_threshold);
  ClassifierParams bad = d;
  bad.t = 1;
  CHECK(code_of([&] { bad.validate(); }) == Errc::invalid_argument);
}

TEST_CASE("classify certificates recheck independently") {
  std::map<std::string, int> kinds;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 8 + static_cast<int>(seed % 9);
    const int r = 2 + static_cast<int>(seed % 3 == 0);
    const int need = witness_size(n, r);
    const Graph g = brute::random_dense_graph(n, 0.8, need, seed);
    const EdgeColouring chi = brute::random_colouring(g, r, seed * 7 + 1);
    const ClassifierParams params = ClassifierParams::desk(1, r);
    const ClassifierOutcome out = classify(chi, params);
    ++kinds[std::string(outcome_kind(out))];
    const OutcomeCheck check = verify_outcome(chi, params, out);
    CHECK_MESSAGE(check.ok, check.reason);
    if (const auto* w = std::get_if<StructureWitness>(&out)) {
      CHECK(std::cmp_equal(w->U.size(), need));
      const int best = brute::max_matching_avoiding(chi, w->c_star, w->U);
      CHECK(std::cmp_equal(w->max_free_matching.size(), best));
      CHECK(best < params.witness_threshold);
    } else if (const auto* hit = std::get_if<BiasedCycle>(&out)) {
      CHECK(spans(g, hit->cycle));
      CHECK(hit->bias.bias() >= Rational(1));
    } else {
      CHECK(spans(g, std::get<BestEffortCycle>(out).cycle));
    }
  }
  MESSAGE("biased ", kinds["biased-cycle"], " witness ", kinds["witness"], " best-effort ",
          kinds["best-effort"]);
  CHECK(kinds["biased-cycle"] > 0);
}

TEST_CASE("monochromatic colouring yields an empty witness") {
  const auto g = std::make_shared<const Graph>(complete_graph(12));
  const auto chi = EdgeColouring::uniform(g, 2, 2);
  const ClassifierOutcome out = classify(chi, ClassifierParams::desk(1, 2));
  const auto* w = std::get_if<StructureWitness>(&out);
  REQUIRE(w != nullptr);
  CHECK(w->c_star == 2);
  CHECK(w->max_free_matching.empty());
  CHECK(w->U.size() == 9);
  CHECK(verify_outcome(chi, ClassifierParams::desk(1, 2), out).ok);
}

TEST_CASE("classify needs the degree condition") {
  const auto chi = EdgeColouring::uniform(std::make_shared<const Graph>(cycle_graph(10)), 2, 1);
  CHECK(code_of([&] { classify(chi, ClassifierParams::desk(1, 2)); }) ==
        Errc::precondition_violated);
}

TEST_CASE("tampered certificates fail the recheck") {
  const auto g = std::make_shared<const Graph>(complete_graph(12));
  const auto params = ClassifierParams::desk(1, 2);
  const auto chi = EdgeColouring::from_function(g, 2, [](const Edge& e) {
    return (e.u < 3 && e.v < 3) ? Colour{1} : Colour{2};
  });
  const ClassifierOutcome out = classify(chi, params);
  REQUIRE(std::holds_alternative<StructureWitness>(out));
  StructureWitness w = std::get<StructureWitness>(out);
  CHECK(verify_outcome(chi, params, w).ok);
  StructureWitness shrunk = w;
  shrunk.U.pop_back();
  CHECK_FALSE(verify_outcome(chi, params, shrunk).ok);
  StructureWitness emptied = w;
  if (!emptied.max_free_matching.empty()) {
    emptied.max_free_matching.edges.pop_back();
    CHECK_FALSE(verify_outcome(chi, params, emptied).ok);
  }
  StructureWitness recoloured = w;
  recoloured.c_star = 3 - w.c_star;
  CHECK_FALSE(verify_outcome(chi, params, recoloured).ok);

  const CycleSeq h{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
  BestEffortCycle good{h, colour_bias(h, chi)};
  CHECK(verify_outcome(chi, params, good).ok);
  BestEffortCycle wrong = good;
  wrong.bias.count += 1;
  CHECK_FALSE(verify_outcome(chi, params, wrong).ok);
  BiasedCycle weak{h, colour_bias(h, chi), "two-cycle"};
  weak.bias = colour_bias(h, chi);
  CHECK(verify_outcome(chi, params, weak).ok == (weak.bias.bias() >= Rational(1)));
}

TEST_CASE("critical construction on twelve vertices") {
  const int n = 12;
  const Graph host = complete_split(n, Rational(3, 4));
  const Graph R(n, std::vector<Edge>{{0, 1}, {1, 2}});
  const EdgeColouring chi = critical_colouring(host, R, 2);
  const CriticalResult res = critical_biased_hamilton(host, R, chi, ClassifierParams::desk(1, 2));
  REQUIRE(res.witness.has_value());
  CHECK(res.route == "witness");
  CHECK(res.witness->c_star == 2);
  CHECK(res.witness->U == std::vector<Vertex>{3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(res.M.size() == 1);
  CHECK(res.W_size == 3);
  CHECK(spans(graph_union(host, R), res.cycle));
  CHECK(res.d >= 1);
  CHECK(res.q == 0);
  CHECK(res.c_star_count >= res.count_bound);
  CHECK(res.bias.bias() >= Rational(res.d - res.q));
}

TEST_CASE("critical construction with random extra edges") {
  int held = 0;
  const int trials = 10;
  for (std::uint64_t seed = 1; seed <= trials; ++seed) {
    const int n = 80;
    const Graph host = complete_split(n, Rational(3, 4));
    std::vector<Vertex> A;
    for (Vertex v = 0; v < n; ++v) {
      if (host.degree(v) < n - 1) A.push_back(v);
    }
    const Graph R = gnm(n, 8, Seed(seed, "extra"));
    const auto both = std::make_shared<const Graph>(graph_union(host, R));
    const EdgeColouring on_host = balanced_colouring(host, 2, A);
    std::mt19937_64 rng(seed);
    const EdgeColouring chi = EdgeColouring::from_function(both, 2, [&](const Edge& e) {
      if (host.adjacent(e.u, e.v)) return on_host.colour(e.u, e.v);
      return static_cast<Colour>(1 + rng() % 2);
    });
    const CriticalResult res = critical_biased_hamilton(host, R, chi, ClassifierParams::desk(1, 2));
    REQUIRE(spans(*both, res.cycle));
    if (res.witness) {
      CHECK(res.c_star_count >= res.count_bound);
      CHECK(res.q <= res.q_bound + 2 * static_cast<int>(R.edge_count()));
    }
    held += res.bias.bias() >= Rational(res.d - res.q);
  }
  CHECK(held * 10 >= trials * 9);
}

TEST_CASE("critical construction rejects a sparse host") {
  const Graph host = cycle_graph(12);
  const auto chi = EdgeColouring::uniform(std::make_shared<const Graph>(host), 2, 1);
  CHECK(code_of([&] {
          critical_biased_hamilton(host, Graph(12), chi, ClassifierParams::desk(1, 2));
        }) == Errc::precondition_violated);
}
