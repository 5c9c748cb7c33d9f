#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walkcanon/graph.hpp"

namespace walkcanon {

enum class ExperimentKind {
  W3Discrete,    // fraction of samples whose (w1,w2,w3) rows are all distinct
  W2Discrete,    // same for (w1,w2)
  EqualW2Pairs,  // count of vertex pairs sharing (w1,w2), per sample
  WmCrSweep,     // walk-matrix discreteness vs color-refinement discreteness
};

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> experiment_from_string(std::string_view name);

struct ExperimentConfig {
  int n = 0;
  double p = 0.5;
  int samples = 0;
  std::uint64_t seed = 0;
  ExperimentKind experiment = ExperimentKind::W3Discrete;
  int workers = 1;  // sample-level pool; never affects output bytes
};

// One row per sample.  Only the fields of the configured experiment are
// meaningful; everything here is reproducible from (config, index) alone.
struct SampleRecord {
  int index = 0;
  std::uint64_t seed = 0;
  bool discrete = false;           // W3Discrete / W2Discrete
  std::uint64_t equal_pairs = 0;   // EqualW2Pairs
  bool wm_discrete = false;        // WmCrSweep
  bool cr_discrete = false;        // WmCrSweep
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<SampleRecord> records;
  double total_seconds = 0.0;  // wall clock; excluded from determinism checks

  // "experiment-report/1" JSON: config echo, per-sample records, aggregates
  // (success fraction with a Wilson 95% interval, or mean/variance against
  // the reference curve, or the 2x2 discreteness cells).  Timing sits in its
  // own block so the rest of the document is byte-stable across runs and
  // worker counts; pass include_timing=false to drop it entirely.
  std::string to_json(bool include_timing = true) const;
  // index,seed,outcome columns only — byte-identical for equal configs.
  std::string to_csv() const;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

// Per-sample measurement kernels, exposed for exhaustive-enumeration checks.
bool sample_w3_discrete(const Graph& g);
bool sample_w2_discrete(const Graph& g);
std::uint64_t count_equal_w2_pairs(const Graph& g);

// Wilson 95% score interval for successes/trials.
std::pair<double, double> wilson_interval(int successes, int trials);

}  // namespace walkcanon
