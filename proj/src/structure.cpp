#include "biasham/structure.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>

#include "biasham/error.hpp"
#include "biasham/matching.hpp"
#include "biasham/models.hpp"
#include "biasham/oracle.hpp"

namespace biasham {

namespace {

int alpha_size(int n, int r) { return ((r + 1) * n + 2 * r - 1) / (2 * r); }

std::vector<char> colour_side(const EdgeColouring& chi, Colour c, Vertex v) {
  const Graph& g = chi.graph();
  std::vector<char> in_c(static_cast<std::size_t>(g.n()), 0);
  for (Vertex x : g.neighbours(v)) in_c[x] = chi.colour(v, x) == c;
  return in_c;
}

// Maximum matching of G(v, c).
Matching outer_matching(const EdgeColouring& chi, Colour c, Vertex v, std::size_t cap) {
  const auto in_c = colour_side(chi, c, v);
  return maximum_matching_in(
      chi.graph(), chi.graph().neighbours(v),
      [&](Vertex x, Vertex y) { return !(in_c[x] && in_c[y]); }, cap);
}

// Maximum non-c matching of B(v, c).
Matching cross_matching(const EdgeColouring& chi, Colour c, Vertex v, std::size_t cap) {
  const auto in_c = colour_side(chi, c, v);
  return maximum_matching_in(
      chi.graph(), chi.graph().neighbours(v),
      [&](Vertex x, Vertex y) { return in_c[x] != in_c[y] && chi.colour(x, y) != c; }, cap);
}

int colour_count(const CycleSeq& cycle, const EdgeColouring& chi, Colour c) {
  int k = 0;
  for (const Edge& e : cycle_edges(cycle)) k += chi.colour(e.u, e.v) == c;
  return k;
}

bool same_report(const BiasReport& a, const BiasReport& b) {
  return a.colour == b.colour && a.count == b.count && a.bias_numerator == b.bias_numerator &&
         a.bias_denominator == b.bias_denominator && a.per_colour == b.per_colour;
}

// Puts z between the consecutive cycle vertices p and q.
void insert_between(std::vector<Vertex>& cycle, Vertex p, Vertex q, Vertex z) {
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % len];
    if ((a == p && b == q) || (a == q && b == p)) {
      cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), z);
      return;
    }
  }
  throw Error(Errc::structure_violation, "side edge missing from the cycle", z);
}

// Hamilton cycle of g[keep] through the given edges, in g's labels.
CycleSeq cycle_on(const Graph& g, std::span<const Vertex> keep, std::span<const Edge> through,
                  const PosaOptions& options) {
  const Graph sub = g.induced(keep);
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  PathForest forest;
  for (const Edge& e : through) forest.paths.push_back(PathSeq{{local[e.u], local[e.v]}});
  CycleSeq h = posa_hamilton_with_forest(sub, forest, options);
  for (Vertex& v : h.vertices) v = keep[v];
  return h;
}

bool more_biased(const BiasReport& a, const BiasReport& b) { return a.bias() > b.bias(); }

}  // namespace

std::vector<Vertex> x_set(const EdgeColouring& chi, Colour c, int threshold) {
  std::vector<Vertex> out;
  const auto cap = static_cast<std::size_t>(std::max(threshold, 0));
  for (Vertex v = 0; v < chi.graph().n(); ++v) {
    if (outer_matching(chi, c, v, cap).size() < cap) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> y_set(const EdgeColouring& chi, Colour c, int threshold) {
  std::vector<Vertex> out;
  const auto cap = static_cast<std::size_t>(std::max(threshold, 0));
  for (Vertex v = 0; v < chi.graph().n(); ++v) {
    if (cross_matching(chi, c, v, cap).size() >= cap) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> compute_Xc(const EdgeColouring& chi, Colour c, int t) {
  return x_set(chi, c, 8 * t);
}

std::vector<Vertex> compute_Yc(const EdgeColouring& chi, Colour c, int t) {
  return y_set(chi, c, 4 * t);
}

std::optional<Matching> c_good_matching(const EdgeColouring& chi, Colour c, Vertex v, int size) {
  const auto in_c = colour_side(chi, c, v);
  Matching kept;
  for (const Edge& e : outer_matching(chi, c, v, kNoCap).edges) {
    if (in_c[e.u] != in_c[e.v] && chi.colour(e.u, e.v) != c) continue;
    kept.edges.push_back(e);
  }
  if (std::cmp_greater_equal(kept.size(), size)) return kept;
  Matching direct = maximum_matching_in(
      chi.graph(), chi.graph().neighbours(v),
      [&](Vertex x, Vertex y) {
        if (!in_c[x] && !in_c[y]) return true;
        return in_c[x] != in_c[y] && chi.colour(x, y) == c;
      });
  if (std::cmp_greater_equal(direct.size(), size)) return direct;
  return std::nullopt;
}

bool certify_bowtie(const EdgeColouring& chi, const Bowtie& bowtie, BowtieKind kind, Colour c) {
  const Graph& g = chi.graph();
  const Vertex z = bowtie.center;
  const Vertex vs[5] = {z, bowtie.side1.u, bowtie.side1.v, bowtie.side2.u, bowtie.side2.v};
  if (!all_distinct(vs, g.n())) return false;
  for (const Edge& e : {bowtie.side1, bowtie.side2}) {
    if (!g.adjacent(e.u, e.v) || !g.adjacent(z, e.u) || !g.adjacent(z, e.v)) return false;
  }
  const Colour a = chi.colour(bowtie.side1.u, bowtie.side1.v);
  const Colour b = chi.colour(bowtie.side2.u, bowtie.side2.v);
  if (a == b) return false;
  if (kind == BowtieKind::one) {
    for (int i = 1; i < 5; ++i) {
      if (chi.colour(z, vs[i]) != c) return false;
    }
    return true;
  }
  for (const Edge& e : {bowtie.side1, bowtie.side2}) {
    if (chi.colour(e.u, e.v) == c && chi.colour(z, e.u) != c && chi.colour(z, e.v) != c) {
      return true;
    }
  }
  return false;
}

BowtieSearch find_bowties(const EdgeColouring& chi, Colour c, BowtieKind kind,
                          std::span<const Vertex> centers_from, std::size_t count) {
  const Graph& g = chi.graph();
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<char> used(n, 0);
  BowtieSearch out;

  auto type_one = [&](Vertex x) -> std::optional<Bowtie> {
    std::vector<char> in_nc(n, 0);
    for (Vertex y : g.neighbours(x)) in_nc[y] = !used[y] && chi.colour(x, y) == c;
    std::vector<Edge> inside;
    std::vector<int> per_colour(static_cast<std::size_t>(chi.r()) + 1, 0);
    for (Vertex a : g.neighbours(x)) {
      if (!in_nc[a]) continue;
      for (Vertex b : g.neighbours(a)) {
        if (b > a && in_nc[b]) {
          inside.push_back(make_edge(a, b));
          ++per_colour[chi.colour(a, b)];
        }
      }
    }
    if (std::ranges::count_if(per_colour, [](int k) { return k > 0; }) < 2) return std::nullopt;
    for (const Edge& e1 : inside) {
      const Colour c1 = chi.colour(e1.u, e1.v);
      for (const Edge& e2 : inside) {
        if (touches(e2, e1.u) || touches(e2, e1.v)) continue;
        if (chi.colour(e2.u, e2.v) != c1) return Bowtie{x, e1, e2};
      }
    }
    return std::nullopt;
  };

  // Non-c edges inside N(w), built once per w.
  std::vector<std::optional<std::vector<Edge>>> off_edges(n);
  auto off_inside = [&](Vertex w) -> const std::vector<Edge>& {
    auto& slot = off_edges[w];
    if (!slot) {
      slot.emplace();
      const auto row = g.row(w);
      for (Vertex a : g.neighbours(w)) {
        for (Vertex b : g.neighbours(a)) {
          if (b > a && ((row[b >> 6] >> (b & 63)) & 1U) && chi.colour(a, b) != c) {
            slot->push_back(make_edge(a, b));
          }
        }
      }
    }
    return *slot;
  };

  auto type_two = [&](Vertex y) -> std::optional<Bowtie> {
    for (Vertex z : g.neighbours(y)) {
      if (used[z] || chi.colour(y, z) != c) continue;
      for (Vertex w : g.neighbours(y)) {
        if (w == z || used[w] || !g.adjacent(z, w)) continue;
        if (chi.colour(y, w) == c || chi.colour(z, w) == c) continue;
        for (const Edge& ab : off_inside(w)) {
          if (used[ab.u] || used[ab.v] || touches(ab, y) || touches(ab, z)) continue;
          return Bowtie{w, make_edge(y, z), ab};
        }
      }
    }
    return std::nullopt;
  };

  for (Vertex x : centers_from) {
    if (out.bowties.size() >= count) break;
    if (used[x]) continue;
    const auto found = kind == BowtieKind::one ? type_one(x) : type_two(x);
    if (!found) continue;
    for (Vertex v : {found->center, found->side1.u, found->side1.v, found->side2.u,
                     found->side2.v}) {
      used[v] = 1;
    }
    out.bowties.push_back(*found);
  }
  out.shortfall = out.bowties.size() < count;
  return out;
}

TwoCompletions bowties_to_biased_hamilton(const EdgeColouring& chi,
                                          std::span<const Bowtie> bowties, BowtieKind kind,
                                          Colour c, const PosaOptions& options) {
  const Graph& g = chi.graph();
  for (const Bowtie& bt : bowties) {
    if (!certify_bowtie(chi, bt, kind, c)) {
      throw Error(Errc::invalid_argument, "bowtie does not certify", bt.center);
    }
  }
  auto side_colour = [&](const Edge& e) { return chi.colour(e.u, e.v); };

  // The marked side goes to h1.
  Colour marked = c;
  if (kind == BowtieKind::one && !bowties.empty()) {
    std::vector<int> tally(static_cast<std::size_t>(chi.r()) + 1, 0);
    for (const Bowtie& bt : bowties) {
      ++tally[side_colour(bt.side1)];
      ++tally[side_colour(bt.side2)];
    }
    marked = static_cast<Colour>(std::ranges::max_element(tally.begin() + 1, tally.end()) -
                                 tally.begin());
  }
  std::vector<Bowtie> chosen;
  for (const Bowtie& bt : bowties) {
    if (side_colour(bt.side1) == marked) {
      chosen.push_back(bt);
    } else if (side_colour(bt.side2) == marked) {
      chosen.push_back(Bowtie{bt.center, bt.side2, bt.side1});
    }
  }

  std::vector<char> centre(static_cast<std::size_t>(g.n()), 0);
  for (const Bowtie& bt : chosen) centre[bt.center] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!centre[v]) keep.push_back(v);
  }
  std::vector<Edge> sides;
  for (const Bowtie& bt : chosen) {
    sides.push_back(bt.side1);
    sides.push_back(bt.side2);
  }
  const CycleSeq h = cycle_on(g, keep, sides, options);

  TwoCompletions out{h, h, h};
  for (const Bowtie& bt : chosen) {
    insert_between(out.h1.vertices, bt.side1.u, bt.side1.v, bt.center);
    insert_between(out.h2.vertices, bt.side2.u, bt.side2.v, bt.center);
  }
  const bool second = more_biased(colour_bias(out.h2, chi), colour_bias(out.h1, chi));
  out.best = second ? out.h2 : out.h1;
  return out;
}

Assembly two_cycle_assembly(const EdgeColouring& chi, const CycleSeq& F, const CycleSeq& H,
                            std::span<const Attachment> attach, Colour c_star) {
  const Graph& g = chi.graph();
  auto violation = [](const std::string& what, std::int64_t subject = -1) {
    return Error(Errc::structure_violation, what, subject);
  };
  if (F.size() < 3) throw violation("F needs at least three vertices");
  if (!is_valid_cycle(g, F)) throw violation("F is not a cycle of the graph");
  if (!is_valid_cycle(g, H)) throw violation("H is not a cycle of the graph");
  const std::size_t t = F.size() - 1;
  const Vertex v0 = F.vertices.front();
  const Vertex vt = F.vertices.back();

  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> f_index(n, -1);
  std::vector<char> in_h(n, 0);
  for (std::size_t i = 0; i < F.size(); ++i) f_index[F.vertices[i]] = static_cast<int>(i);
  for (Vertex v : H.vertices) in_h[v] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_f = f_index[v] >= 0;
    const bool end = static_cast<Vertex>(v) == v0 || static_cast<Vertex>(v) == vt;
    if (in_f && in_h[v] != end) throw violation("F and H must share exactly v_0 and v_t", v);
    if (!in_f && !in_h[v]) throw violation("F and H must cover every vertex", v);
  }

  // H as a path from v_0 to v_t avoiding the shared edge.
  std::vector<Vertex> hp = H.vertices;
  std::ranges::rotate(hp, std::ranges::find(hp, v0));
  if (hp.back() != vt) {
    if (hp[1] != vt) throw violation("H must contain the edge v_0 v_t");
    std::reverse(hp.begin() + 1, hp.end());
  }

  std::map<Edge, Vertex> at_edge;
  std::vector<char> seen(n, 0);
  if (attach.size() != t - 1) throw violation("need one attachment per interior vertex of F");
  std::set<Edge> h_edges;
  for (const Edge& e : cycle_edges(H)) h_edges.insert(e);
  int f_sum = 0;
  for (const Attachment& a : attach) {
    const int i = a.v >= 0 && a.v < g.n() ? f_index[a.v] : -1;
    if (i < 1 || std::cmp_greater_equal(i, t) || seen[a.v]) {
      throw violation("attachments must list v_1..v_{t-1} once each", a.v);
    }
    seen[a.v] = 1;
    const Edge xy = make_edge(a.x, a.y);
    if (!h_edges.contains(xy)) throw violation("attachment edge is not an edge of H", a.v);
    if (!at_edge.emplace(xy, a.v).second) throw violation("attachment edges must be distinct", a.v);
    if (!g.adjacent(a.v, a.x) || !g.adjacent(a.v, a.y)) {
      throw violation("attached vertex must see both ends of its edge", a.v);
    }
    f_sum += f_c(a.v, a.x, a.y, chi, c_star);
  }

  Assembly out;
  out.c_star = c_star;
  out.f_sum = f_sum;
  out.h1.vertices = hp;
  for (std::size_t i = t - 1; i >= 1; --i) out.h1.vertices.push_back(F.vertices[i]);
  for (std::size_t i = 0; i < H.size(); ++i) {
    const Vertex a = H.vertices[i];
    out.h2.vertices.push_back(a);
    const auto it = at_edge.find(make_edge(a, H.at(i + 1)));
    if (it != at_edge.end()) out.h2.vertices.push_back(it->second);
  }
  out.count_gap = colour_count(out.h1, chi, c_star) - colour_count(out.h2, chi, c_star);

  int f_colour = 0;
  for (const Edge& e : cycle_edges(F)) f_colour += chi.colour(e.u, e.v) == c_star;
  const int shared = chi.colour(v0, vt) == c_star;
  const int expected = (f_colour - shared) - shared - f_sum;
  if (out.count_gap != expected) throw violation("c*-count identity failed");

  const bool second = more_biased(colour_bias(out.h2, chi), colour_bias(out.h1, chi));
  out.best = second ? out.h2 : out.h1;
  return out;
}

ClassifierParams ClassifierParams::paper(int b, int r) {
  ClassifierParams p;
  p.b = b;
  p.t = 32 * r * b;
  p.s = p.t / 4;
  p.x_threshold = 8 * p.t;
  p.y_threshold = 4 * p.t;
  p.good_size = 4 * p.t;
  p.bowtie_trigger = std::max(1, p.s / 4);
  p.bowties_one = p.s / 4;
  p.bowties_two = p.s / 4;
  p.witness_threshold = 512 * r * b;
  p.relaxed_posa = false;
  return p;
}

ClassifierParams ClassifierParams::desk(int b, int r) {
  ClassifierParams p;
  p.b = b;
  p.t = 4 * b;
  p.s = b;
  p.x_threshold = 2 * b;
  p.y_threshold = b;
  p.good_size = b;
  p.bowtie_trigger = std::max(1, (p.s + 3) / 4);
  p.bowties_one = 2 * r * b;
  p.bowties_two = 2 * b;
  p.witness_threshold = 4 * b;
  p.relaxed_posa = true;
  return p;
}

void ClassifierParams::validate() const {
  auto bad = [](const char* field) {
    return Error(Errc::invalid_argument, std::string("classifier parameter out of range: ") + field);
  };
  if (b < 1) throw bad("b");
  if (t < 2) throw bad("t");
  if (s < 0) throw bad("s");
  if (x_threshold < 1) throw bad("x_threshold");
  if (y_threshold < 1) throw bad("y_threshold");
  if (good_size < 1) throw bad("good_size");
  if (bowtie_trigger < 1) throw bad("bowtie_trigger");
  if (bowties_one < 0) throw bad("bowties_one");
  if (bowties_two < 0) throw bad("bowties_two");
  if (witness_threshold < 1) throw bad("witness_threshold");
}

std::string_view outcome_kind(const ClassifierOutcome& outcome) {
  switch (outcome.index()) {
    case 0: return "biased-cycle";
    case 1: return "witness";
    default: return "best-effort";
  }
}

ClassifierOutcome classify(const EdgeColouring& chi, const ClassifierParams& params) {
  params.validate();
  const Graph& g = chi.graph();
  const int n = g.n();
  const int r = chi.r();
  const int need = alpha_size(n, r);
  if (n < 3 || min_degree(g) < need) {
    throw Error(Errc::precondition_violated, "minimum degree below ceil((r+1) n / 2r)");
  }
  const PosaOptions posa{params.relaxed_posa, 0};

  std::optional<BestEffortCycle> best;
  auto consider = [&](const CycleSeq& cycle, const char* route,
                      bool route_holds) -> std::optional<BiasedCycle> {
    BiasReport report = colour_bias(cycle, chi);
    if (route_holds && report.bias() >= Rational(params.b)) {
      return BiasedCycle{cycle, std::move(report), route};
    }
    if (!best || more_biased(report, best->bias)) best = BestEffortCycle{cycle, std::move(report)};
    return std::nullopt;
  };

  std::vector<int> per_colour(static_cast<std::size_t>(r) + 1, 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) ++per_colour[chi.colour_of(i)];
  const auto c_star = static_cast<Colour>(
      std::ranges::max_element(per_colour.begin() + 1, per_colour.end()) - per_colour.begin());

  const std::vector<Vertex> X = x_set(chi, c_star, params.x_threshold);
  const std::vector<Vertex> Y = y_set(chi, c_star, params.y_threshold);

  struct BowtieRoute {
    const std::vector<Vertex>* centres;
    BowtieKind kind;
    int count;
    const char* name;
  };
  for (const BowtieRoute route : {BowtieRoute{&X, BowtieKind::one, params.bowties_one, "bowtie-one"},
                                  BowtieRoute{&Y, BowtieKind::two, params.bowties_two, "bowtie-two"}}) {
    if (std::cmp_less(route.centres->size(), params.bowtie_trigger)) continue;
    const BowtieSearch found = find_bowties(chi, c_star, route.kind, *route.centres,
                                            static_cast<std::size_t>(route.count));
    if (found.shortfall) continue;
    try {
      const TwoCompletions done =
          bowties_to_biased_hamilton(chi, found.bowties, route.kind, c_star, posa);
      if (auto hit = consider(done.best, route.name, true)) return *hit;
    } catch (const Error&) {
    }
  }

  // Two-cycle route: F from the most common colour, attachments per interior vertex.
  try {
    const CycleSeq F = monochromatic_cycle(chi, params.t);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<char> special(static_cast<std::size_t>(n), 0);
    for (Vertex v : F.vertices) used[v] = 1;
    for (Vertex v : X) special[v] = 1;
    for (Vertex v : Y) special[v] = 1;
    std::vector<Attachment> attach;
    for (std::size_t i = 1; i + 1 < F.size(); ++i) {
      const Vertex v = F.vertices[i];
      std::optional<Edge> pick;
      if (!special[v]) {
        if (const auto good = c_good_matching(chi, c_star, v, params.good_size)) {
          for (const Edge& e : good->edges) {
            if (!used[e.u] && !used[e.v]) {
              pick = e;
              break;
            }
          }
        }
      }
      if (!pick) {
        int low = 3;
        for (Vertex x : g.neighbours(v)) {
          if (used[x]) continue;
          for (Vertex y : g.neighbours(v)) {
            if (y <= x || used[y] || !g.adjacent(x, y)) continue;
            const int f = f_c(v, x, y, chi, c_star);
            if (f < low) {
              low = f;
              pick = make_edge(x, y);
            }
          }
        }
      }
      if (!pick) throw Error(Errc::search_exhausted, "no attachment edge", v);
      used[pick->u] = used[pick->v] = 1;
      attach.push_back(Attachment{v, pick->u, pick->v});
    }
    std::vector<Vertex> keep;
    std::vector<char> interior(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i + 1 < F.size(); ++i) interior[F.vertices[i]] = 1;
    for (Vertex v = 0; v < n; ++v) {
      if (!interior[v]) keep.push_back(v);
    }
    std::vector<Edge> through{make_edge(F.vertices.front(), F.vertices.back())};
    for (const Attachment& a : attach) through.push_back(make_edge(a.x, a.y));
    const CycleSeq H = cycle_on(g, keep, through, posa);
    const Assembly assembled = two_cycle_assembly(chi, F, H, attach, c_star);
    if (auto hit = consider(assembled.best, "two-cycle", assembled.f_sum < params.s)) return *hit;
  } catch (const Error&) {
  }

  // Witness from the (v, c) with the smallest c-free matching in N(v).
  const auto thr = static_cast<std::size_t>(params.witness_threshold);
  std::size_t low = thr;
  Vertex at = -1;
  Colour with = 1;
  for (Vertex v = 0; v < n && low > 0; ++v) {
    for (Colour c = 1; c <= r && low > 0; ++c) {
      auto free_of_c = [&](Vertex x, Vertex y) { return chi.colour(x, y) != c; };
      const std::size_t size = maximum_matching_in(g, g.neighbours(v), free_of_c, low).size();
      if (size < low) {
        low = size;
        at = v;
        with = c;
      }
    }
  }
  if (at >= 0) {
    // Trim N(v) to the witness size, dropping matched vertices first.
    std::vector<Vertex> U(g.neighbours(at).begin(), g.neighbours(at).end());
    while (std::cmp_greater(U.size(), need)) {
      const Matching m = max_matching_avoiding_colour(chi, with, U);
      Vertex drop = U.back();
      if (!m.empty()) {
        drop = 0;
        for (const Edge& e : m.edges) drop = std::max({drop, e.u, e.v});
      }
      U.erase(std::ranges::find(U, drop));
    }
    Matching m = max_matching_avoiding_colour(chi, with, U);
    if (m.size() < thr) return StructureWitness{U, with, std::move(m), params.witness_threshold};
  }

  if (!best) {
    const CycleSeq h = posa_hamilton_with_forest(g, PathForest{}, PosaOptions{true, 0});
    best = BestEffortCycle{h, colour_bias(h, chi)};
  }
  return *best;
}

OutcomeCheck verify_outcome(const EdgeColouring& chi, const ClassifierParams& params,
                            const ClassifierOutcome& outcome) {
  const Graph& g = chi.graph();
  auto fail = [](std::string why) { return OutcomeCheck{false, std::move(why)}; };
  auto check_cycle = [&](const CycleSeq& cycle, const BiasReport& claimed) -> OutcomeCheck {
    if (!is_hamilton_cycle(g, cycle)) return fail("not a Hamilton cycle");
    if (!same_report(colour_bias(cycle, chi), claimed)) return fail("bias report differs");
    return {};
  };

  if (const auto* hit = std::get_if<BiasedCycle>(&outcome)) {
    OutcomeCheck check = check_cycle(hit->cycle, hit->bias);
    if (check.ok && hit->bias.bias() < Rational(params.b)) return fail("bias below b");
    return check;
  }
  if (const auto* effort = std::get_if<BestEffortCycle>(&outcome)) {
    return check_cycle(effort->cycle, effort->bias);
  }

  const auto& w = std::get<StructureWitness>(outcome);
  const int n = g.n();
  if (std::cmp_not_equal(w.U.size(), alpha_size(n, chi.r()))) return fail("witness set has the wrong size");
  if (!all_distinct(w.U, n)) return fail("witness set repeats or leaves the vertex range");
  if (w.c_star < 1 || w.c_star > chi.r()) return fail("witness colour out of range");
  if (w.threshold != params.witness_threshold) return fail("witness threshold differs");
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < w.U.size(); ++i) local[w.U[i]] = static_cast<int>(i);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (const Edge& e : w.max_free_matching.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) return fail("matching edge out of range");
    if (local[e.u] < 0 || local[e.v] < 0) return fail("matching edge leaves the witness set");
    if (!g.adjacent(e.u, e.v)) return fail("matching edge missing from the graph");
    if (chi.colour(e.u, e.v) == w.c_star) return fail("matching uses colour c*");
    if (hit[e.u] || hit[e.v]) return fail("matching edges overlap");
    hit[e.u] = hit[e.v] = 1;
  }
  if (std::cmp_greater_equal(w.max_free_matching.size(), w.threshold)) {
    return fail("matching reaches the threshold");
  }
  std::vector<Edge> free_edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0 && chi.colour(e.u, e.v) != w.c_star) {
      free_edges.push_back(make_edge(local[e.u], local[e.v]));
    }
  }
  const Graph sub(static_cast<int>(w.U.size()), free_edges);
  if (max_matching_exact(sub).size() != w.max_free_matching.size()) {
    return fail("matching is not maximum");
  }
  return {};
}

CriticalResult critical_biased_hamilton(const Graph& host, const Graph& R,
                                        const EdgeColouring& chi, const ClassifierParams& params) {
  const int n = host.n();
  if (R.n() != n || chi.graph().n() != n) {
    throw Error(Errc::size_mismatch, "host, random graph and colouring differ in size");
  }
  const int r = chi.r();
  if (n < 3 || min_degree(host) < alpha_size(n, r)) {
    throw Error(Errc::precondition_violated, "host minimum degree below ceil((r+1) n / 2r)");
  }
  const Graph both = graph_union(host, R);
  for (const Edge& e : both.edges()) {
    if (!chi.graph().adjacent(e.u, e.v)) {
      throw Error(Errc::invalid_argument, "colouring does not cover host and random edges");
    }
  }
  const EdgeColouring on_host = chi.restricted_to(std::make_shared<const Graph>(host));
  ClassifierOutcome outcome = classify(on_host, params);

  CriticalResult out;
  out.route = std::string(outcome_kind(outcome));
  if (auto* hit = std::get_if<BiasedCycle>(&outcome)) {
    out.cycle = std::move(hit->cycle);
  } else if (auto* effort = std::get_if<BestEffortCycle>(&outcome)) {
    out.cycle = std::move(effort->cycle);
  } else {
    StructureWitness& w = std::get<StructureWitness>(outcome);
    std::vector<char> in_u(static_cast<std::size_t>(n), 0);
    for (Vertex v : w.U) in_u[v] = 1;
    std::vector<Vertex> W;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_u[v]) W.push_back(v);
    }
    out.M = maximum_matching_in(both, W, [](Vertex, Vertex) { return true; });
    // Keep the forest within what the degree condition carries.
    const auto room = static_cast<std::size_t>(std::max(0, 2 * min_degree(both) - n));
    if (out.M.size() > room) out.M.edges.resize(room);
    PathForest forest;
    for (const Edge& e : out.M.edges) forest.paths.push_back(PathSeq{{e.u, e.v}});
    out.cycle = posa_hamilton_with_forest(both, forest);

    out.W_size = static_cast<int>(W.size());
    for (const Edge& e : cycle_edges(out.cycle)) {
      const Colour c = chi.colour(e.u, e.v);
      if (!in_u[e.u] && !in_u[e.v]) ++out.d;
      if (in_u[e.u] && in_u[e.v] && c != w.c_star) ++out.q;
      out.c_star_count += c == w.c_star;
    }
    out.count_bound = n - (2 * out.W_size - out.d + out.q);
    out.q_bound = 2 * static_cast<int>(w.max_free_matching.size());
    if (out.c_star_count < out.count_bound) {
      throw Error(Errc::structure_violation, "c*-count below n - (2|W| - d + q)");
    }
    out.witness = std::move(w);
  }
  out.bias = colour_bias(out.cycle, chi);
  return out;
}

}  // namespace biasham
