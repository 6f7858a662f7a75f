#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "biasham/absorber.hpp"
#include "biasham/rational.hpp"
#include "biasham/structure.hpp"

namespace biasham {

enum class ExperimentMode { pipeline, critical, classify, adversary_audit };

std::string_view to_string(ExperimentMode mode) noexcept;

/// One batch of seeded trials. Read from key=value lines; see README for the
/// keys each mode uses.
struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::pipeline;
  int n = 300;
  Rational alpha{3, 10};  // host density; critical and classify use (r+1)/2r
  int r = 2;
  std::int64_t m = 0;     // extra random edges (critical, adversary-audit)
  std::string adversary = "uniform";  // pipeline: uniform or partition
  PipelineParams pipeline;
  ClassifierParams classifier;
  std::uint64_t master_seed = 1;
  int trials = 10;
  bool emit_timings = false;
  std::optional<std::filesystem::path> out;

  /// Throws Errc::config_invalid naming the offending key.
  void validate() const;
};

/// '#' starts a comment; blank lines are skipped. Unknown keys, repeated
/// keys and malformed values are Errc::config_invalid with the line number
/// as subject. The result is validated.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string outcome;  // mode-specific kind, or failed:<step>
  std::int64_t bias_numerator = 0;
  std::int64_t bias_denominator = 1;
  bool verified = false;
  int attempts = 0;
  std::optional<int> d, q, count_bound;
  std::optional<Rational> max_bias;
  double millis = 0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::string csv;
};

/// complete_split(n, (r+1)/2r) with the balanced colouring, plus m random
/// edges coloured uniformly from seed.child("colour").
struct CriticalInstance {
  Graph host;
  Graph R;
  EdgeColouring chi;
};

CriticalInstance critical_instance(int n, int r, std::int64_t m, const Seed& seed);

/// Seed of trial i: stream_hash(master, "trial", i).
std::uint64_t trial_seed(std::uint64_t master, int trial);

/// One trial in isolation. Failures become records, never exceptions.
TrialRecord run_trial(const ExperimentConfig& config, int trial);

/// All trials on up to `jobs` threads, rows in trial order. Writes the CSV
/// to config.out when set (Errc::io_error on failure).
ExperimentResult run_experiment(const ExperimentConfig& config, int jobs = 1);

/// Schema comment, header, one row per record, summary comment.
std::string to_csv(const ExperimentConfig& config, const std::vector<TrialRecord>& records);

inline constexpr std::string_view kCsvSchema = "biasham-trials/1";

}  // namespace biasham
