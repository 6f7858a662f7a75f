// Command-line front end. Graph and colouring files use the text formats of
// biasham/io.hpp; "-" or an empty --out means standard output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "biasham/absorber.hpp"
#include "biasham/adversary.hpp"
#include "biasham/error.hpp"
#include "biasham/experiment.hpp"
#include "biasham/io.hpp"
#include "biasham/matching.hpp"
#include "biasham/measures.hpp"
#include "biasham/models.hpp"
#include "biasham/oracle.hpp"
#include "biasham/paths.hpp"
#include "biasham/structure.hpp"

using namespace biasham;

namespace {

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw Error(Errc::io_error, "cannot write " + out);
}

std::vector<Vertex> parse_vertices(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument, "bad vertex list: " + text);
    }
  }
  return out;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

std::string bias_line(const BiasReport& b) {
  std::string s = "bias " + b.bias().str() + " colour " + std::to_string(b.colour) + " counts";
  for (int c : b.per_colour) s += " " + std::to_string(c);
  return s + "\n";
}

std::vector<Vertex> split_side(const Graph& g) {
  std::vector<Vertex> A;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) < g.n() - 1) A.push_back(v);
  }
  return A;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles with a majority colour: generators, searches and exact checks"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  std::string config_path;
  std::string graph_path, coloured_path, extra_path;
  std::string model = "gnp", scheme = "random", mode, cycle_text, forest_text;
  std::string alpha_text = "1/2", adversary = "uniform", thresholds = "desk";
  int n = 10, r = 2, target = 0, K = 0, b = 1;
  std::int64_t m = 0;
  double p = 0.5;
  bool relaxed = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "master seed");
    sub->add_option("--out", out, "output path");
  };

  auto* gen = app.add_subcommand("generate", "write a graph");
  add_common(gen);
  gen->add_option("--model", model)->check(CLI::IsMember({"gnp", "gnm", "split", "min-host", "complete", "cycle"}));
  gen->add_option("--n", n);
  gen->add_option("--p", p);
  gen->add_option("--m", m);
  gen->add_option("--alpha", alpha_text);

  auto* col = app.add_subcommand("colour", "colour a graph");
  add_common(col);
  col->add_option("--graph", graph_path)->required();
  col->add_option("--r", r);
  col->add_option("--scheme", scheme)->check(CLI::IsMember({"random", "balanced", "critical"}));
  col->add_option("--extra", extra_path, "extra edges for the critical scheme");

  auto* bias = app.add_subcommand("bias", "colour bias of a cycle");
  bias->add_option("--coloured", coloured_path)->required();
  bias->add_option("--cycle", cycle_text, "comma-separated vertices")->required();

  auto* path = app.add_subcommand("find-path", "long path search");
  add_common(path);
  path->add_option("--graph", graph_path);
  path->add_option("--coloured", coloured_path);
  path->add_option("--target", target, "near-monochromatic target length");
  path->add_option("--K", K, "off-colour budget");

  auto* posa = app.add_subcommand("posa", "Hamilton cycle through a path forest");
  add_common(posa);
  posa->add_option("--graph", graph_path)->required();
  posa->add_option("--forest", forest_text, "paths like 0,1,2;5,6");
  posa->add_flag("--relaxed", relaxed);

  auto* pipe = app.add_subcommand("pipeline", "biased Hamilton cycle in a perturbed graph");
  add_common(pipe);
  pipe->add_option("--graph", graph_path, "host graph (default: random host)");
  pipe->add_option("--n", n);
  pipe->add_option("--alpha", alpha_text);
  pipe->add_option("--r", r);
  pipe->add_option("--adversary", adversary)->check(CLI::IsMember({"uniform", "partition"}));

  auto* cls = app.add_subcommand("classify", "biased cycle or structure witness");
  cls->add_option("--coloured", coloured_path)->required();
  cls->add_option("--b", b);
  cls->add_option("--thresholds", thresholds)->check(CLI::IsMember({"desk", "paper"}));

  auto* crit = app.add_subcommand("critical", "cycle on the extremal host plus random edges");
  add_common(crit);
  crit->add_option("--n", n);
  crit->add_option("--r", r);
  crit->add_option("--m", m);
  crit->add_option("--b", b);

  auto* orc = app.add_subcommand("oracle", "exact small-n answers");
  orc->add_option("--mode", mode)->required()->check(CLI::IsMember({"hamilton", "bias", "hr", "path", "matching"}));
  orc->add_option("--graph", graph_path);
  orc->add_option("--coloured", coloured_path);
  orc->add_option("--r", r);

  auto* exp = app.add_subcommand("experiment", "batch of seeded trials");
  exp->add_option("--config", config_path)->required();
  exp->add_option("--jobs", jobs);
  auto* seed_opt = exp->add_option("--seed", seed, "overrides the config seed");
  auto* out_opt = exp->add_option("--out", out, "overrides the config output");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ostringstream text;
    if (gen->parsed()) {
      const Seed s(seed, "generate");
      Graph g;
      if (model == "gnp") g = gnp(n, p, s);
      else if (model == "gnm") g = gnm(n, m, s);
      else if (model == "split") g = complete_split(n, Rational::parse(alpha_text));
      else if (model == "min-host") g = random_min_degree_host(n, Rational::parse(alpha_text), s);
      else if (model == "complete") g = complete_graph(n);
      else g = cycle_graph(n);
      emit(out, to_text(g));
    } else if (col->parsed()) {
      const auto g = std::make_shared<const Graph>(load_graph(graph_path));
      if (scheme == "balanced") {
        emit(out, to_text(balanced_colouring(*g, r, split_side(*g))));
      } else if (scheme == "critical") {
        const Graph extra = extra_path.empty() ? Graph(g->n()) : load_graph(extra_path);
        emit(out, to_text(critical_colouring(*g, extra, r)));
      } else {
        Rng rng = Seed(seed, "colour").rng();
        emit(out, to_text(EdgeColouring::from_function(g, r, [&](const Edge&) {
          return static_cast<Colour>(rng.below(r) + 1);
        })));
      }
    } else if (bias->parsed()) {
      const EdgeColouring chi = load_coloured_graph(coloured_path);
      const CycleSeq c{parse_vertices(cycle_text)};
      std::cout << bias_line(colour_bias(c, chi))
                << "hamilton " << (is_hamilton_cycle(chi.graph(), c) ? 1 : 0) << "\n";
    } else if (path->parsed()) {
      if (!coloured_path.empty()) {
        const EdgeColouring chi = load_coloured_graph(coloured_path);
        const NearMonoPath found = near_monochromatic_path(chi, static_cast<std::size_t>(target), K);
        text << "colour " << found.colour << " off_colour " << found.off_colour << "\n"
             << "path " << join(found.path.vertices) << "\n";
      } else {
        const PathSeq found = dfs_long_path(load_graph(graph_path));
        text << "path " << join(found.vertices) << "\n";
      }
      emit(out, text.str());
    } else if (posa->parsed()) {
      const Graph g = load_graph(graph_path);
      PathForest forest;
      std::stringstream in(forest_text);
      std::string item;
      while (std::getline(in, item, ';')) {
        if (!item.empty()) forest.paths.push_back(PathSeq{parse_vertices(item)});
      }
      const CycleSeq c = posa_hamilton_with_forest(g, forest, PosaOptions{relaxed, 0});
      emit(out, "cycle " + join(c.vertices) + "\n");
    } else if (pipe->parsed()) {
      const Rational alpha = Rational::parse(alpha_text);
      const Graph host = graph_path.empty()
                             ? random_min_degree_host(n, alpha, Seed(seed, "host"))
                             : load_graph(graph_path);
      std::vector<Colour> parts(static_cast<std::size_t>(host.n()));
      for (Vertex v = 0; v < host.n(); ++v) parts[static_cast<std::size_t>(v)] = v * r / host.n() + 1;
      ColourOracle oracle = adversary == "uniform" ? uniform_random_oracle(r, Seed(seed, "adversary"))
                                                   : partition_oracle(parts, r);
      try {
        const PipelineResult res = perturbed_biased_hamilton(
            host, oracle, PipelineParams::desk(alpha.to_double(), r), Seed(seed, "pipeline"));
        text << to_text(res.transcript) << bias_line(res.bias) << "cycle " << join(res.cycle.vertices)
             << "\n";
      } catch (const PipelineFailed& e) {
        text << to_text(e.transcript()) << "failed " << e.last_step() << "\n";
      }
      emit(out, text.str());
    } else if (cls->parsed()) {
      const EdgeColouring chi = load_coloured_graph(coloured_path);
      const ClassifierParams params =
          thresholds == "paper" ? ClassifierParams::paper(b, chi.r()) : ClassifierParams::desk(b, chi.r());
      const ClassifierOutcome outcome = classify(chi, params);
      std::cout << "outcome " << outcome_kind(outcome) << "\n";
      if (const auto* w = std::get_if<StructureWitness>(&outcome)) {
        std::cout << "c_star " << w->c_star << "\nU " << join(w->U) << "\nmatching "
                  << w->max_free_matching.size() << "\n";
      } else {
        const auto& [cycle, report] = std::holds_alternative<BiasedCycle>(outcome)
            ? std::pair{std::get<BiasedCycle>(outcome).cycle, std::get<BiasedCycle>(outcome).bias}
            : std::pair{std::get<BestEffortCycle>(outcome).cycle, std::get<BestEffortCycle>(outcome).bias};
        std::cout << bias_line(report) << "cycle " << join(cycle.vertices) << "\n";
      }
      const OutcomeCheck check = verify_outcome(chi, params, outcome);
      std::cout << "verified " << (check.ok ? 1 : 0) << (check.ok ? "" : " " + check.reason) << "\n";
    } else if (crit->parsed()) {
      const CriticalInstance inst = critical_instance(n, r, m, Seed(seed, "critical"));
      const CriticalResult res = critical_biased_hamilton(inst.host, inst.R, inst.chi,
                                                          ClassifierParams::desk(b, r));
      text << "route " << res.route << "\n" << bias_line(res.bias);
      if (res.witness) {
        text << "c_star " << res.witness->c_star << " W " << res.W_size << " d " << res.d << " q "
             << res.q << " count " << res.c_star_count << " bound " << res.count_bound << "\n";
      }
      text << "cycle " << join(res.cycle.vertices) << "\n";
      emit(out, text.str());
    } else if (orc->parsed()) {
      if (mode == "bias") {
        const BiasOptimum best = max_bias_fixed_colouring(load_coloured_graph(coloured_path));
        std::cout << "max_bias " << best.bias.str() << "\ncycle " << join(best.cycle.vertices) << "\n";
      } else {
        const Graph g = load_graph(graph_path);
        if (mode == "hamilton") std::cout << "cycles " << count_hamilton_cycles(g) << "\n";
        else if (mode == "hr") std::cout << "h_r " << exact_hr_tiny(g, r).str() << "\n";
        else if (mode == "path") std::cout << "path " << join(longest_path_exact(g).vertices) << "\n";
        else std::cout << "matching " << max_matching_exact(g).size() << "\n";
      }
    } else if (exp->parsed()) {
      ExperimentConfig cfg = load_experiment_config(config_path);
      if (seed_opt->count()) cfg.master_seed = seed;
      if (out_opt->count()) cfg.out = out == "-" ? std::nullopt : std::optional<std::filesystem::path>(out);
      const ExperimentResult res = run_experiment(cfg, jobs);
      if (!cfg.out) std::cout << res.csv;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    const Errc c = e.code();
    return c == Errc::config_invalid || c == Errc::io_error || c == Errc::parse_error ? 2 : 1;
  }
  return 0;
}
