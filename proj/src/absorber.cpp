#include "biasham/absorber.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>

#include "biasham/matching.hpp"
#include "biasham/models.hpp"
#include "biasham/paths.hpp"

namespace biasham {

PipelineParams PipelineParams::desk(double alpha, int r) {
  PipelineParams p;
  p.alpha = alpha;
  p.r = r;
  return p;
}

void PipelineParams::validate() const {
  auto bad = [](const std::string& what) { throw Error(Errc::invalid_argument, what); };
  if (!(alpha > 0 && alpha <= 1)) bad("alpha must lie in (0, 1]");
  if (r < 2) bad("r must be at least 2");
  if (!(epsilon > 0 && epsilon < 1)) bad("epsilon must lie in (0, 1)");
  if (!(c1 > 0) || !(c2 > 0) || !(c3 > 0)) bad("sprinkle constants must be positive");
  if (K < 0) bad("K must be non-negative");
  if (!(delta > 0 && delta < 0.5)) bad("delta must lie in (0, 1/2)");
  if (max_retries < 0) bad("max_retries must be non-negative");
}

std::vector<std::string> PipelineParams::warnings(int n) const {
  std::vector<std::string> out;
  const double eps_bound = std::ldexp(alpha * alpha, -14);
  if (epsilon >= eps_bound) {
    std::ostringstream s;
    s << "epsilon=" << epsilon << " is not below 2^-14 alpha^2=" << eps_bound;
    out.push_back(s.str());
  }
  if (2 * std::exp(1.0) / delta >= std::exp(c3 * delta / 2)) {
    std::ostringstream s;
    s << "2e/delta=" << 2 * std::exp(1.0) / delta << " is not below exp(c3 delta/2)="
      << std::exp(c3 * delta / 2) << ", so R3 need not be delta n-joined";
    out.push_back(s.str());
  }
  if (K >= epsilon * n) {
    std::ostringstream s;
    s << "K=" << K << " is not below epsilon n=" << epsilon * n;
    out.push_back(s.str());
  }
  return out;
}

int PipelineParams::window(int n) const {
  return std::max(1, static_cast<int>(std::ceil(delta * n - 1e-9)));
}

AbsorbingMatching absorbing_matching(const Graph& host, const Graph& R, double epsilon) {
  if (host.n() != R.n()) throw Error(Errc::size_mismatch, "host and R differ in vertex count");
  AbsorbingMatching out;
  out.matching = greedy_maximal_matching(R);
  out.threshold = epsilon * epsilon * host.n();
  out.audit.assign(static_cast<std::size_t>(host.n()), 0);
  for (Vertex x = 0; x < host.n(); ++x) {
    for (const Edge& e : out.matching.edges) {
      if (host.adjacent(x, e.u) && host.adjacent(x, e.v)) ++out.audit[x];
    }
    if (out.audit[x] < out.threshold) ++out.below_threshold;
  }
  return out;
}

namespace {

class AbsorberBuilder {
 public:
  AbsorberBuilder(const Graph& host, const Graph& R2, double alpha)
      : host_(host), R2_(R2), used_(static_cast<std::size_t>(host.n()), 0),
        common_needed_(alpha * host.n() / 2) {}

  AbsorberPath run(const Matching& M) {
    for (const Edge& e : M.edges) used_[e.u] = used_[e.v] = 1;
    AbsorberPath out;
    out.path.vertices = {M.edges[0].u, M.edges[0].v};
    out.core.edges.push_back(M.edges[0]);
    for (std::size_t i = 0; i + 1 < M.size(); ++i) {
      const Vertex b = out.path.back();
      Edge next = M.edges[i + 1];
      auto link = connect(b, next.u);
      if (!link) {
        std::swap(next.u, next.v);
        link = connect(b, next.u);
      }
      if (!link) {
        throw Error(Errc::connection_failed,
                    "no unused connector at junction " + std::to_string(i),
                    static_cast<std::int64_t>(i));
      }
      for (Vertex v : link->first) {
        used_[v] = 1;
        out.path.vertices.push_back(v);
      }
      out.connectors.push_back(link->second);
      out.path.vertices.push_back(next.u);
      out.path.vertices.push_back(next.v);
      out.core.edges.push_back(next);
    }
    return out;
  }

 private:
  using Link = std::pair<std::vector<Vertex>, ConnectorKind>;

  std::optional<Link> connect(Vertex b, Vertex a) const {
    const bool prefer_two = host_.common_neighbour_count(b, a) >= common_needed_;
    auto two = [&]() -> std::optional<Link> {
      for (Vertex z : host_.neighbours(b)) {
        if (!used_[z] && host_.adjacent(z, a)) return Link{{z}, ConnectorKind::host_two};
      }
      return std::nullopt;
    };
    auto three = [&]() -> std::optional<Link> {
      for (Vertex u : host_.neighbours(b)) {
        if (used_[u] || host_.adjacent(u, a)) continue;
        for (Vertex v : R2_.neighbours(u)) {
          if (!used_[v] && host_.adjacent(v, a) && !host_.adjacent(v, b)) {
            return Link{{u, v}, ConnectorKind::mixed_three};
          }
        }
      }
      return std::nullopt;
    };
    if (prefer_two) {
      if (auto l = two()) return l;
      return three();
    }
    if (auto l = three()) return l;
    return two();
  }

  const Graph& host_;
  const Graph& R2_;
  std::vector<char> used_;
  double common_needed_;
};

}  // namespace

AbsorberPath build_absorber(const Graph& host, const Graph& R2, const Matching& M,
                            const PipelineParams& params) {
  params.validate();
  if (host.n() != R2.n()) throw Error(Errc::size_mismatch, "host and R2 differ in vertex count");
  if (M.empty()) throw Error(Errc::invalid_argument, "empty core matching");
  std::vector<Vertex> ends;
  for (const Edge& e : M.edges) {
    if (e.u == e.v) throw Error(Errc::invalid_argument, "matching edge is a loop");
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  if (!all_distinct(ends, host.n())) {
    throw Error(Errc::invalid_argument, "M is not a matching on the host's vertices");
  }
  return AbsorberBuilder(host, R2, params.alpha).run(M);
}

PathSeq absorb(const PathSeq& A_prime, std::span<const Vertex> U, const AbsorberPath& absorber,
               const Graph& host) {
  const int n = host.n();
  if (!all_distinct(A_prime.vertices, n)) {
    throw Error(Errc::invalid_argument, "A' repeats a vertex or leaves the vertex range");
  }
  std::vector<Vertex> order(U.begin(), U.end());
  std::sort(order.begin(), order.end());
  if (!all_distinct(order, n)) throw Error(Errc::invalid_argument, "U is not a vertex set");
  if (order.empty()) return A_prime;

  constexpr Vertex kNone = -1;
  std::vector<Vertex> next(static_cast<std::size_t>(n), kNone);
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < A_prime.size(); ++i) {
    on_path[A_prime.vertices[i]] = 1;
    if (i + 1 < A_prime.size()) next[A_prime.vertices[i]] = A_prime.vertices[i + 1];
  }
  for (Vertex x : order) {
    if (on_path[x]) throw Error(Errc::invalid_argument, "U meets A'", x);
  }

  for (Vertex x : order) {
    bool done = false;
    for (const Edge& e : absorber.core.edges) {
      if (!host.adjacent(x, e.u) || !host.adjacent(x, e.v)) continue;
      Vertex y = kNone;
      if (next[e.u] == e.v) {
        y = e.u;
      } else if (next[e.v] == e.u) {
        y = e.v;
      }
      if (y == kNone) continue;
      next[x] = next[y];
      next[y] = x;
      on_path[x] = 1;
      done = true;
      break;
    }
    if (!done) {
      throw Error(Errc::absorption_failed, "no eligible core edge left for vertex " +
                                               std::to_string(x), x);
    }
  }
  PathSeq out;
  out.vertices.reserve(A_prime.size() + order.size());
  for (Vertex v = A_prime.front(); v != kNone; v = next[v]) out.vertices.push_back(v);
  return out;
}

ColourOracle::ColourOracle(int r, Strategy strategy) : r_(r), strategy_(std::move(strategy)) {
  if (r < 2) throw Error(Errc::invalid_argument, "r must be at least 2");
  if (!strategy_) throw Error(Errc::invalid_argument, "empty colour strategy");
}

Colour ColourOracle::colour(Vertex a, Vertex b) {
  const Edge e = make_edge(a, b);
  const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const Colour c = strategy_(e);
  if (c < 1 || c > r_) {
    throw Error(Errc::invalid_argument, "strategy returned colour " + std::to_string(c));
  }
  memo_.emplace(key, c);
  return c;
}

EdgeColouring ColourOracle::colour_graph(std::shared_ptr<const Graph> g) {
  std::vector<Colour> table;
  table.reserve(g->edge_count());
  for (const Edge& e : g->edges()) table.push_back(colour(e.u, e.v));
  return EdgeColouring(std::move(g), r_, std::move(table));
}

ColourOracle uniform_random_oracle(int r, const Seed& seed) {
  const Seed stream = seed.child("colour");
  return ColourOracle(r, [stream, r](Edge e) {
    const std::uint64_t index = (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
    return static_cast<Colour>(stream.rng(index).below(static_cast<std::uint64_t>(r))) + 1;
  });
}

ColourOracle partition_oracle(std::vector<Colour> part_of, int r) {
  return ColourOracle(r, [parts = std::move(part_of)](Edge e) {
    return std::min(parts.at(static_cast<std::size_t>(e.u)), parts.at(static_cast<std::size_t>(e.v)));
  });
}

std::string to_text(const Transcript& transcript) {
  std::ostringstream out;
  for (const TranscriptLine& line : transcript) {
    out << line.attempt << ' ' << line.step << ' ' << line.status;
    if (!line.detail.empty()) out << ' ' << line.detail;
    out << '\n';
  }
  return out.str();
}

PipelineFailed::PipelineFailed(Transcript transcript, std::string last_step)
    : Error(Errc::pipeline_failed, "every attempt failed, last at step " + last_step),
      transcript_(std::move(transcript)),
      last_step_(std::move(last_step)) {}

namespace {

std::vector<Vertex> complement(int n, const std::vector<char>& taken) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!taken[v]) out.push_back(v);
  }
  return out;
}

PathSeq relabel(const PathSeq& p, const std::vector<Vertex>& labels) {
  PathSeq out;
  out.vertices.reserve(p.size());
  for (Vertex v : p.vertices) out.vertices.push_back(labels[v]);
  return out;
}

class Attempt {
 public:
  Attempt(const Graph& host, ColourOracle& oracle, const PipelineParams& params, int index,
          Transcript& transcript)
      : host_(host), oracle_(oracle), params_(params), index_(index), transcript_(transcript),
        n_(host.n()) {}

  const std::string& step() const noexcept { return step_; }

  PipelineResult run(const Seed& seed) {
    begin("sprinkle");
    const double scale = 1.0 / n_;
    const std::vector<double> probs = {std::min(1.0, params_.c1 * scale),
                                       std::min(1.0, params_.c2 * scale),
                                       std::min(1.0, params_.c3 * scale)};
    const std::vector<Graph> rounds = sprinkle(n_, probs, seed);
    const Graph& R1 = rounds[0];
    const Graph& R2 = rounds[1];
    const Graph& R3 = rounds[2];
    ok("e(R1)=" + std::to_string(R1.edge_count()) + " Y(R1)=" +
       std::to_string(non_isolated_edge_count(R1)) + " e(R2)=" + std::to_string(R2.edge_count()) +
       " e(R3)=" + std::to_string(R3.edge_count()));

    begin("absorbing_matching");
    const AbsorbingMatching am = absorbing_matching(host_, R1, params_.epsilon);
    if (am.matching.empty()) throw Error(Errc::search_exhausted, "R1 has no edges");
    ok("|M|=" + std::to_string(am.matching.size()) + " min_audit=" +
       std::to_string(*std::min_element(am.audit.begin(), am.audit.end())));
    if (am.below_threshold > 0) {
      warn(std::to_string(am.below_threshold) + " vertices have fewer than epsilon^2 n=" +
           std::to_string(am.threshold) + " matching edges in their neighbourhood");
    }

    begin("absorber");
    const AbsorberPath A = build_absorber(host_, R2, am.matching, params_);
    const auto two = std::count(A.connectors.begin(), A.connectors.end(), ConnectorKind::host_two);
    ok("v(A)=" + std::to_string(A.path.size()) + " two=" + std::to_string(two) + " three=" +
       std::to_string(A.connectors.size() - static_cast<std::size_t>(two)));
    const double vA = static_cast<double>(A.path.size());
    if (vA < params_.epsilon * n_ / 8 || vA > 4 * params_.epsilon * n_) {
      warn("v(A) outside [epsilon n/8, 4 epsilon n]");
    }

    begin("near_mono_path");
    std::vector<char> taken(static_cast<std::size_t>(n_), 0);
    for (Vertex v : A.path.vertices) taken[v] = 1;
    const std::vector<Vertex> outside_A = complement(n_, taken);
    auto sub = std::make_shared<const Graph>(R2.induced(outside_A));
    const EdgeColouring sub_chi = EdgeColouring::from_function(
        sub, params_.r, [&](const Edge& e) { return oracle_.colour(outside_A[e.u], outside_A[e.v]); });
    const double share = 2.0 / (params_.r + 1) - std::pow(params_.epsilon, 3);
    const auto target = static_cast<std::size_t>(
        std::max(0.0, std::floor(share * static_cast<double>(outside_A.size()))));
    const NearMonoPath near = near_monochromatic_path(sub_chi, target, params_.K);
    const PathSeq P1 = relabel(near.path, outside_A);
    ok("v(P1)=" + std::to_string(P1.size()) + " colour=" + std::to_string(near.colour) +
       " off_colour=" + std::to_string(near.off_colour));

    begin("long_path");
    for (Vertex v : P1.vertices) taken[v] = 1;
    const std::vector<Vertex> rest = complement(n_, taken);
    PathSeq P2;
    if (!rest.empty()) P2 = relabel(dfs_long_path(R2.induced(rest)), rest);
    ok("v(P2)=" + std::to_string(P2.size()) + " uncovered=" +
       std::to_string(rest.size() - P2.size()));

    begin("connect");
    const Graph joins = graph_union(host_, R3);
    const int w = params_.window(n_);
    PathSeq chain = A.path;
    std::size_t discarded = 0;
    for (const PathSeq* seg : {&P1, static_cast<const PathSeq*>(&P2)}) {
      if (seg->empty()) continue;
      const int wi = std::min({w, static_cast<int>(chain.size()), static_cast<int>(seg->size())});
      WindowJoin j = connect_windows(chain, *seg, joins, wi);
      discarded += j.discarded.size();
      chain = std::move(j.joined);
    }
    ok("window=" + std::to_string(w) + " discarded=" + std::to_string(discarded));

    begin("close");
    const int wc = std::min(w, static_cast<int>((chain.size() - 1) / 2));
    if (wc < 1) throw Error(Errc::no_connecting_edge, "chain too short to close");
    WindowClose closed = close_windows(chain, joins, wc);
    ok("discarded=" + std::to_string(closed.discarded.size()));

    begin("absorb");
    std::fill(taken.begin(), taken.end(), 0);
    for (Vertex v : closed.cycle.vertices) taken[v] = 1;
    const std::vector<Vertex> T = complement(n_, taken);
    const PathSeq linear = absorb(PathSeq{closed.cycle.vertices}, T, A, host_);
    ok("|T|=" + std::to_string(T.size()));

    begin("verify");
    PipelineResult result;
    result.union_graph = graph_union(graph_union(host_, R1), graph_union(R2, R3));
    result.cycle = CycleSeq{linear.vertices};
    if (!is_hamilton_cycle(result.union_graph, result.cycle)) {
      throw Error(Errc::invalid_cycle, "assembled sequence is not a Hamilton cycle");
    }
    auto cycle_graph_ptr = std::make_shared<const Graph>(n_, cycle_edges(result.cycle));
    result.bias = colour_bias(result.cycle, oracle_.colour_graph(std::move(cycle_graph_ptr)));
    ok("bias=" + std::to_string(result.bias.bias_numerator) + "/" +
       std::to_string(result.bias.bias_denominator) + " colour=" +
       std::to_string(result.bias.colour));
    result.absorber_vertices = A.path.size();
    result.p1_vertices = P1.size();
    result.absorbed = T.size();
    return result;
  }

 private:
  void begin(std::string step) { step_ = std::move(step); }
  void ok(std::string detail) { transcript_.push_back({index_, step_, "ok", std::move(detail)}); }
  void warn(std::string detail) {
    transcript_.push_back({index_, step_, "warning", std::move(detail)});
  }

  const Graph& host_;
  ColourOracle& oracle_;
  const PipelineParams& params_;
  int index_;
  Transcript& transcript_;
  int n_;
  std::string step_;
};

}  // namespace

PipelineResult perturbed_biased_hamilton(const Graph& host, ColourOracle& oracle,
                                         const PipelineParams& params, const Seed& seed) {
  params.validate();
  if (oracle.r() != params.r) throw Error(Errc::invalid_argument, "oracle and params disagree on r");
  const int n = host.n();
  if (n < 3) throw Error(Errc::invalid_argument, "need at least 3 vertices");
  const int needed = static_cast<int>(std::ceil(params.alpha * n - 1e-9));
  if (min_degree(host) < needed) {
    throw Error(Errc::precondition_violated, "min degree " + std::to_string(min_degree(host)) +
                                                 " below alpha n = " + std::to_string(needed));
  }
  Transcript transcript;
  for (std::string& w : params.warnings(n)) transcript.push_back({0, "params", "warning", std::move(w)});
  std::string last_step;
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    Attempt run(host, oracle, params, attempt, transcript);
    try {
      PipelineResult result = run.run(seed.child("attempt", static_cast<std::uint64_t>(attempt)));
      result.attempts = attempt + 1;
      result.transcript = std::move(transcript);
      return result;
    } catch (const Error& e) {
      if (e.code() == Errc::invalid_argument && run.step() == "sprinkle") throw;
      last_step = run.step();
      transcript.push_back({attempt, last_step, "failed", e.what()});
    }
  }
  throw PipelineFailed(std::move(transcript), last_step);
}

}  // namespace biasham
