#include "biasham/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include "biasham/adversary.hpp"
#include "biasham/error.hpp"
#include "biasham/measures.hpp"
#include "biasham/models.hpp"
#include "biasham/oracle.hpp"
#include "biasham/random.hpp"

namespace biasham {

std::string_view to_string(ExperimentMode mode) noexcept {
  switch (mode) {
    case ExperimentMode::pipeline: return "pipeline";
    case ExperimentMode::critical: return "critical";
    case ExperimentMode::classify: return "classify";
    case ExperimentMode::adversary_audit: return "adversary-audit";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  auto bad = [](const std::string& key, const std::string& why) {
    return Error(Errc::config_invalid, key + ": " + why);
  };
  if (n < 3) throw bad("n", "need at least 3 vertices");
  if (r < 2) throw bad("r", "need at least 2 colours");
  if (!(alpha > Rational(0)) || alpha > Rational(1)) throw bad("alpha", "must lie in (0, 1]");
  if (m < 0 || m > static_cast<std::int64_t>(n) * (n - 1) / 2) throw bad("m", "out of range");
  if (trials < 0) throw bad("trials", "must be non-negative");
  if (adversary != "uniform" && adversary != "partition") {
    throw bad("adversary", "expected uniform or partition");
  }
  const bool split_host = mode == ExperimentMode::critical || mode == ExperimentMode::adversary_audit;
  if (split_host && n % (2 * r) != 0) throw bad("n", "must be divisible by 2r");
  if (mode == ExperimentMode::adversary_audit) {
    if (n > OracleGuard{}.max_n_hamilton) throw bad("n", "above the oracle guard");
    if (m * r >= n) throw bad("m", "need fewer than n/r extra edges");
  }
  try {
    PipelineParams p = pipeline;
    p.alpha = alpha.to_double();
    p.r = r;
    p.validate();
    classifier.validate();
  } catch (const Error& e) {
    throw Error(Errc::config_invalid, e.what());
  }
}

namespace {

struct Entry {
  std::string value;
  std::int64_t line;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <class T>
T parse_number(const Entry& e, const std::string& key) {
  T value{};
  const char* end = e.value.data() + e.value.size();
  const auto [ptr, ec] = std::from_chars(e.value.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(Errc::config_invalid, key + ": not a number: " + e.value, e.line);
  }
  return value;
}

double parse_real(const Entry& e, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(e.value, &used);
    if (used == e.value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::config_invalid, key + ": not a number: " + e.value, e.line);
}

bool parse_flag(const Entry& e, const std::string& key) {
  if (e.value == "1" || e.value == "true") return true;
  if (e.value == "0" || e.value == "false") return false;
  throw Error(Errc::config_invalid, key + ": expected 0 or 1", e.line);
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
  std::map<std::string, Entry> entries;
  std::string raw;
  std::int64_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::config_invalid, "expected key=value: " + line, line_no);
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw Error(Errc::config_invalid, "empty key or value: " + line, line_no);
    }
    if (!entries.emplace(key, Entry{value, line_no}).second) {
      throw Error(Errc::config_invalid, "repeated key " + key, line_no);
    }
  }

  ExperimentConfig cfg;
  auto take = [&](const std::string& key) -> std::optional<Entry> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    Entry e = it->second;
    entries.erase(it);
    return e;
  };

  if (auto e = take("mode")) {
    if (e->value == "pipeline") cfg.mode = ExperimentMode::pipeline;
    else if (e->value == "critical") cfg.mode = ExperimentMode::critical;
    else if (e->value == "classify") cfg.mode = ExperimentMode::classify;
    else if (e->value == "adversary-audit") cfg.mode = ExperimentMode::adversary_audit;
    else throw Error(Errc::config_invalid, "mode: unknown mode " + e->value, e->line);
  }
  if (auto e = take("n")) cfg.n = parse_number<int>(*e, "n");
  if (auto e = take("r")) cfg.r = parse_number<int>(*e, "r");
  if (cfg.mode != ExperimentMode::pipeline) cfg.alpha = Rational(cfg.r + 1, 2 * cfg.r);
  if (auto e = take("alpha")) {
    try {
      cfg.alpha = Rational::parse(e->value);
    } catch (const Error&) {
      throw Error(Errc::config_invalid, "alpha: not a rational: " + e->value, e->line);
    }
  }
  if (auto e = take("m")) cfg.m = parse_number<std::int64_t>(*e, "m");
  if (auto e = take("adversary")) cfg.adversary = e->value;
  if (auto e = take("seed")) cfg.master_seed = parse_number<std::uint64_t>(*e, "seed");
  if (auto e = take("trials")) cfg.trials = parse_number<int>(*e, "trials");
  if (auto e = take("emit_timings")) cfg.emit_timings = parse_flag(*e, "emit_timings");
  if (auto e = take("out")) cfg.out = e->value;

  cfg.pipeline = PipelineParams::desk(cfg.alpha.to_double(), cfg.r);
  if (auto e = take("epsilon")) cfg.pipeline.epsilon = parse_real(*e, "epsilon");
  if (auto e = take("c1")) cfg.pipeline.c1 = parse_real(*e, "c1");
  if (auto e = take("c2")) cfg.pipeline.c2 = parse_real(*e, "c2");
  if (auto e = take("c3")) cfg.pipeline.c3 = parse_real(*e, "c3");
  if (auto e = take("K")) cfg.pipeline.K = parse_number<int>(*e, "K");
  if (auto e = take("delta")) cfg.pipeline.delta = parse_real(*e, "delta");
  if (auto e = take("max_retries")) cfg.pipeline.max_retries = parse_number<int>(*e, "max_retries");

  int b = 1;
  if (auto e = take("b")) b = parse_number<int>(*e, "b");
  if (b < 1) throw Error(Errc::config_invalid, "b: must be at least 1");
  cfg.classifier = ClassifierParams::desk(b, cfg.r);
  if (auto e = take("thresholds")) {
    if (e->value == "paper") cfg.classifier = ClassifierParams::paper(b, cfg.r);
    else if (e->value != "desk") throw Error(Errc::config_invalid, "thresholds: expected desk or paper", e->line);
  }
  const std::pair<const char*, int ClassifierParams::*> ints[] = {
      {"t", &ClassifierParams::t},
      {"s", &ClassifierParams::s},
      {"x_threshold", &ClassifierParams::x_threshold},
      {"y_threshold", &ClassifierParams::y_threshold},
      {"good_size", &ClassifierParams::good_size},
      {"bowtie_trigger", &ClassifierParams::bowtie_trigger},
      {"bowties_one", &ClassifierParams::bowties_one},
      {"bowties_two", &ClassifierParams::bowties_two},
      {"witness_threshold", &ClassifierParams::witness_threshold},
  };
  for (const auto& [key, field] : ints) {
    if (auto e = take(key)) cfg.classifier.*field = parse_number<int>(*e, key);
  }
  if (auto e = take("relaxed_posa")) cfg.classifier.relaxed_posa = parse_flag(*e, "relaxed_posa");

  if (!entries.empty()) {
    const auto& [key, e] = *entries.begin();
    throw Error(Errc::config_invalid, "unknown key " + key, e.line);
  }
  cfg.pipeline.alpha = cfg.alpha.to_double();
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return parse_experiment_config(in);
}

CriticalInstance critical_instance(int n, int r, std::int64_t m, const Seed& seed) {
  Graph host = complete_split(n, Rational(r + 1, 2 * r));
  std::vector<Vertex> A;
  for (Vertex v = 0; v < n; ++v) {
    if (host.degree(v) < n - 1) A.push_back(v);
  }
  Graph R = gnm(n, m, seed.child("extra"));
  const auto both = std::make_shared<const Graph>(graph_union(host, R));
  const EdgeColouring on_host = balanced_colouring(host, r, A);
  Rng rng = seed.child("colour").rng();
  std::vector<Colour> table;
  for (const Edge& e : both->edges()) {
    table.push_back(host.adjacent(e.u, e.v) ? on_host.colour(e.u, e.v)
                                            : static_cast<Colour>(rng.below(r) + 1));
  }
  EdgeColouring chi(both, r, std::move(table));
  return CriticalInstance{std::move(host), std::move(R), std::move(chi)};
}

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  return stream_hash(master, "trial", static_cast<std::uint64_t>(trial));
}

namespace {

void set_bias(TrialRecord& rec, const BiasReport& bias) {
  rec.bias_numerator = bias.bias_numerator;
  rec.bias_denominator = bias.bias_denominator;
}

// Bias of a Hamilton cycle counted from scratch against a colour lookup.
std::optional<BiasReport> recount(const Graph& g, const CycleSeq& cycle, int r,
                                  const std::function<Colour(Vertex, Vertex)>& colour) {
  if (!is_hamilton_cycle(g, cycle)) return std::nullopt;
  std::vector<int> counts(static_cast<std::size_t>(r), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) ++counts[colour(cycle.at(i), cycle.at(i + 1)) - 1];
  const auto top = std::ranges::max_element(counts);
  BiasReport rep;
  rep.colour = static_cast<Colour>(top - counts.begin()) + 1;
  rep.count = *top;
  rep.bias_numerator = static_cast<std::int64_t>(*top) * r - static_cast<std::int64_t>(cycle.size());
  rep.bias_denominator = r;
  rep.per_colour = counts;
  return rep;
}

bool same_bias(const std::optional<BiasReport>& a, const BiasReport& b) {
  return a && a->bias_numerator == b.bias_numerator && a->bias_denominator == b.bias_denominator;
}

void pipeline_trial(const ExperimentConfig& cfg, const Seed& seed, TrialRecord& rec) {
  const Graph host = random_min_degree_host(cfg.n, cfg.alpha, seed.child("host"));
  std::vector<Colour> parts(static_cast<std::size_t>(cfg.n));
  for (int v = 0; v < cfg.n; ++v) parts[static_cast<std::size_t>(v)] = v * cfg.r / cfg.n + 1;
  ColourOracle oracle = cfg.adversary == "uniform"
                            ? uniform_random_oracle(cfg.r, seed.child("adversary"))
                            : partition_oracle(parts, cfg.r);
  PipelineParams params = cfg.pipeline;
  params.alpha = cfg.alpha.to_double();
  params.r = cfg.r;
  try {
    const PipelineResult res = perturbed_biased_hamilton(host, oracle, params, seed.child("pipeline"));
    rec.outcome = "ok";
    rec.attempts = res.attempts;
    set_bias(rec, res.bias);
    const auto again = recount(res.union_graph, res.cycle, cfg.r,
                               [&](Vertex a, Vertex b) { return oracle.colour(a, b); });
    rec.verified = same_bias(again, res.bias);
  } catch (const PipelineFailed& e) {
    rec.outcome = "failed:" + e.last_step();
    rec.attempts = params.max_retries + 1;
  }
}

void critical_trial(const ExperimentConfig& cfg, const Seed& seed, TrialRecord& rec) {
  const CriticalInstance inst = critical_instance(cfg.n, cfg.r, cfg.m, seed);
  const Graph& host = inst.host;
  const Graph& R = inst.R;
  const EdgeColouring& chi = inst.chi;
  const Graph* both = &chi.graph();
  const CriticalResult res = critical_biased_hamilton(host, R, chi, cfg.classifier);
  rec.outcome = res.route;
  rec.attempts = 1;
  set_bias(rec, res.bias);
  const auto again = recount(*both, res.cycle, cfg.r, [&](Vertex a, Vertex b) { return chi.colour(a, b); });
  rec.verified = same_bias(again, res.bias);
  if (res.witness) {
    std::vector<char> in_u(static_cast<std::size_t>(cfg.n), 0);
    for (Vertex v : res.witness->U) in_u[v] = 1;
    int d = 0, q = 0, hits = 0;
    for (std::size_t i = 0; i < res.cycle.size(); ++i) {
      const Vertex a = res.cycle.at(i), b = res.cycle.at(i + 1);
      const bool star = chi.colour(a, b) == res.witness->c_star;
      d += !in_u[a] && !in_u[b];
      q += in_u[a] && in_u[b] && !star;
      hits += star;
    }
    const int W = cfg.n - static_cast<int>(res.witness->U.size());
    const int bound = cfg.n - (2 * W - d + q);
    rec.d = d;
    rec.q = q;
    rec.count_bound = bound;
    rec.verified = rec.verified && d == res.d && q == res.q && hits >= bound;
  }
}

void classify_trial(const ExperimentConfig& cfg, const Seed& seed, TrialRecord& rec) {
  const auto host = std::make_shared<const Graph>(
      random_min_degree_host(cfg.n, cfg.alpha, seed.child("host")));
  Rng rng = seed.child("colour").rng();
  std::vector<Colour> table;
  for (std::size_t i = 0; i < host->edge_count(); ++i) {
    table.push_back(static_cast<Colour>(rng.below(cfg.r) + 1));
  }
  const EdgeColouring chi(host, cfg.r, std::move(table));
  const ClassifierOutcome out = classify(chi, cfg.classifier);
  rec.outcome = std::string(outcome_kind(out));
  rec.attempts = 1;
  if (const auto* hit = std::get_if<BiasedCycle>(&out)) set_bias(rec, hit->bias);
  if (const auto* effort = std::get_if<BestEffortCycle>(&out)) set_bias(rec, effort->bias);
  rec.verified = verify_outcome(chi, cfg.classifier, out).ok;
}

void audit_trial(const ExperimentConfig& cfg, const Seed& seed, TrialRecord& rec) {
  const Graph host = complete_split(cfg.n, cfg.alpha);
  const Graph extra = gnm(cfg.n, cfg.m, seed.child("extra"));
  const EdgeColouring chi = critical_colouring(host, extra, cfg.r);
  const BiasOptimum best = max_bias_fixed_colouring(chi);
  rec.outcome = "ok";
  rec.attempts = 1;
  set_bias(rec, best.report);
  rec.max_bias = best.bias;
  const auto again = recount(chi.graph(), best.cycle, cfg.r,
                             [&](Vertex a, Vertex b) { return chi.colour(a, b); });
  rec.verified = same_bias(again, best.report) && best.bias == best.report.bias();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& cfg, int trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = trial_seed(cfg.master_seed, trial);
  const Seed seed(rec.seed, "trial");
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (cfg.mode) {
      case ExperimentMode::pipeline: pipeline_trial(cfg, seed, rec); break;
      case ExperimentMode::critical: critical_trial(cfg, seed, rec); break;
      case ExperimentMode::classify: classify_trial(cfg, seed, rec); break;
      case ExperimentMode::adversary_audit: audit_trial(cfg, seed, rec); break;
    }
  } catch (const Error& e) {
    rec.outcome = "failed:" + std::string(to_string(e.code()));
    rec.verified = false;
  } catch (const std::exception&) {
    rec.outcome = "failed:exception";
    rec.verified = false;
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string to_csv(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "# schema=" << kCsvSchema << " mode=" << to_string(cfg.mode) << " n=" << cfg.n
      << " r=" << cfg.r << " alpha=" << cfg.alpha.str() << " m=" << cfg.m
      << " seed=" << cfg.master_seed << " trials=" << cfg.trials << '\n';
  out << "trial,seed,outcome,bias_num,bias_den,verified,attempts,d,q,count_bound,max_bias";
  if (cfg.emit_timings) out << ",time_ms";
  out << '\n';
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  std::vector<double> biases;
  int successes = 0;
  for (const TrialRecord& rec : records) {
    out << rec.trial << ',' << rec.seed << ',' << rec.outcome << ',' << rec.bias_numerator << ','
        << rec.bias_denominator << ',' << (rec.verified ? 1 : 0) << ',' << rec.attempts << ','
        << opt(rec.d) << ',' << opt(rec.q) << ',' << opt(rec.count_bound) << ','
        << (rec.max_bias ? rec.max_bias->str() : std::string());
    if (cfg.emit_timings) out << ',' << fixed(rec.millis, 3);
    out << '\n';
    if (!rec.outcome.starts_with("failed")) {
      ++successes;
      biases.push_back(static_cast<double>(rec.bias_numerator) /
                       static_cast<double>(rec.bias_denominator));
    }
  }
  std::ranges::sort(biases);
  auto quantile = [&](double p) {
    if (biases.empty()) return std::string("nan");
    const auto k = static_cast<std::size_t>(p * static_cast<double>(biases.size() - 1) + 0.5);
    return fixed(biases[k], 4);
  };
  const double fraction = records.empty() ? 0.0 : static_cast<double>(successes) / records.size();
  out << "# summary trials=" << records.size() << " successes=" << successes
      << " success_fraction=" << fixed(fraction, 4) << " bias_q25=" << quantile(0.25)
      << " bias_q50=" << quantile(0.5) << " bias_q75=" << quantile(0.75) << '\n';
  return out.str();
}

ExperimentResult run_experiment(const ExperimentConfig& config, int jobs) {
  config.validate();
  ExperimentResult result;
  result.records.resize(static_cast<std::size_t>(config.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.trials; i = next++) {
      result.records[static_cast<std::size_t>(i)] = run_trial(config, i);
    }
  };
  const int threads = std::clamp(jobs, 1, std::max(1, config.trials));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  result.csv = to_csv(config, result.records);
  if (config.out) {
    std::ofstream out(*config.out, std::ios::binary);
    if (!out || !(out << result.csv) || !out.flush()) {
      throw Error(Errc::io_error, "cannot write " + config.out->string());
    }
  }
  return result;
}

}  // namespace biasham
