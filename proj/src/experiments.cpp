#include "walkcanon/experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "walkcanon/refine.hpp"
#include "walkcanon/rng.hpp"
#include "walkcanon/walks.hpp"

namespace walkcanon {

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::W3Discrete: return "w3";
    case ExperimentKind::W2Discrete: return "w2";
    case ExperimentKind::EqualW2Pairs: return "pairs";
    case ExperimentKind::WmCrSweep: return "wmcr";
  }
  return "?";
}

std::optional<ExperimentKind> experiment_from_string(std::string_view name) {
  if (name == "w3") return ExperimentKind::W3Discrete;
  if (name == "w2") return ExperimentKind::W2Discrete;
  if (name == "pairs") return ExperimentKind::EqualW2Pairs;
  if (name == "wmcr") return ExperimentKind::WmCrSweep;
  return std::nullopt;
}

bool sample_w3_discrete(const Graph& g) {
  return canonize_walk3(g).outcome == CanonOutcome::Discrete;
}

namespace {

// Rows sorted lexicographically; equal (w1,w2) pairs sit adjacent.
std::vector<int> sorted_by_w2_rows(const WalkSignature& sig) {
  std::vector<int> idx(sig.n);
  for (int i = 0; i < sig.n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::ranges::lexicographical_compare(sig.row(a), sig.row(b));
  });
  return idx;
}

}  // namespace

bool sample_w2_discrete(const Graph& g) {
  const WalkSignature sig = walk_signature(g, 2);
  const auto idx = sorted_by_w2_rows(sig);
  for (int i = 0; i + 1 < sig.n; ++i)
    if (std::ranges::equal(sig.row(idx[i]), sig.row(idx[i + 1]))) return false;
  return true;
}

std::uint64_t count_equal_w2_pairs(const Graph& g) {
  const WalkSignature sig = walk_signature(g, 2);
  const auto idx = sorted_by_w2_rows(sig);
  std::uint64_t pairs = 0;
  std::uint64_t run = 1;
  for (int i = 1; i <= sig.n; ++i) {
    if (i < sig.n && std::ranges::equal(sig.row(idx[i - 1]), sig.row(idx[i]))) {
      ++run;
    } else {
      pairs += run * (run - 1) / 2;
      run = 1;
    }
  }
  return pairs;
}

std::pair<double, double> wilson_interval(int successes, int trials) {
  if (trials <= 0) throw std::domain_error("interval needs at least one trial");
  if (successes < 0 || successes > trials)
    throw std::domain_error("successes must lie in [0, trials]");
  constexpr double z = 1.959963984540054;  // two-sided 95%
  const double nt = trials;
  const double phat = successes / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (phat + z2 / (2.0 * nt)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

SampleRecord run_one(const ExperimentConfig& cfg, int index) {
  SampleRecord rec;
  rec.index = index;
  rec.seed = sample_seed(cfg.seed, static_cast<std::uint64_t>(index));
  const Graph g = random_gnp(cfg.n, cfg.p, rec.seed);
  switch (cfg.experiment) {
    case ExperimentKind::W3Discrete:
      rec.discrete = sample_w3_discrete(g);
      break;
    case ExperimentKind::W2Discrete:
      rec.discrete = sample_w2_discrete(g);
      break;
    case ExperimentKind::EqualW2Pairs:
      rec.equal_pairs = count_equal_w2_pairs(g);
      break;
    case ExperimentKind::WmCrSweep:
      rec.wm_discrete = is_wm_discrete(g);
      rec.cr_discrete = is_cr_discrete(g, Coloring::uniform(g.order()));
      break;
  }
  return rec;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n < 1) throw std::domain_error("experiment needs n >= 1");
  if (cfg.samples < 1) throw std::domain_error("experiment needs samples >= 1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0))
    throw std::domain_error("edge probability must lie in [0,1]");
  if (cfg.workers < 1) throw std::domain_error("worker count must be >= 1");
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.config = config;
  report.records.resize(config.samples);

  // Samples are seeded independently by index, so any scheduling of the pool
  // fills the same records; aggregation below walks them in index order.
  if (config.workers == 1) {
    for (int i = 0; i < config.samples; ++i)
      report.records[i] = run_one(config, i);
  } else {
    std::atomic<int> cursor{0};
    auto drain = [&] {
      for (;;) {
        const int i = cursor.fetch_add(1);
        if (i >= config.samples) break;
        report.records[i] = run_one(config, i);
      }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min(config.workers, config.samples);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }

  report.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

namespace {

nlohmann::ordered_json aggregates_json(const ExperimentReport& r) {
  const auto& cfg = r.config;
  nlohmann::ordered_json agg;
  switch (cfg.experiment) {
    case ExperimentKind::W3Discrete:
    case ExperimentKind::W2Discrete: {
      int successes = 0;
      for (const auto& rec : r.records) successes += rec.discrete ? 1 : 0;
      const auto [lo, hi] = wilson_interval(successes, cfg.samples);
      agg["successes"] = successes;
      agg["fraction"] = static_cast<double>(successes) / cfg.samples;
      agg["wilson95_low"] = lo;
      agg["wilson95_high"] = hi;
      break;
    }
    case ExperimentKind::EqualW2Pairs: {
      double mean = 0.0;
      for (const auto& rec : r.records)
        mean += static_cast<double>(rec.equal_pairs);
      mean /= cfg.samples;
      double var = 0.0;
      for (const auto& rec : r.records) {
        const double d = static_cast<double>(rec.equal_pairs) - mean;
        var += d * d;
      }
      var = cfg.samples > 1 ? var / (cfg.samples - 1) : 0.0;
      const double n = cfg.n;
      const double pairs = n * (n - 1) / 2.0;
      constexpr double pi = 3.141592653589793238462643383279502884;
      agg["mean"] = mean;
      agg["variance"] = var;
      agg["reference_mean"] = std::sqrt(n) / pi;  // asymptote at p = 1/2
      agg["pair_rate"] = pairs > 0 ? mean / pairs : 0.0;
      agg["reference_pair_rate"] = 2.0 / (pi * n * std::sqrt(n));
      break;
    }
    case ExperimentKind::WmCrSweep: {
      int both = 0, wm_only = 0, cr_only = 0, neither = 0;
      for (const auto& rec : r.records) {
        if (rec.wm_discrete && rec.cr_discrete) ++both;
        else if (rec.wm_discrete) ++wm_only;
        else if (rec.cr_discrete) ++cr_only;
        else ++neither;
      }
      agg["wm_and_cr"] = both;
      agg["wm_not_cr"] = wm_only;  // must stay zero: violations of the sweep
      agg["cr_not_wm"] = cr_only;
      agg["neither"] = neither;
      agg["violations"] = wm_only;
      break;
    }
  }
  return agg;
}

}  // namespace

std::string ExperimentReport::to_json(bool include_timing) const {
  nlohmann::ordered_json doc;
  doc["schema"] = "experiment-report/1";
  doc["config"] = {
      {"experiment", std::string(to_string(config.experiment))},
      {"n", config.n},
      {"p", config.p},
      {"samples", config.samples},
      {"seed", config.seed},
  };
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json r;
    r["index"] = rec.index;
    r["seed"] = rec.seed;
    switch (config.experiment) {
      case ExperimentKind::W3Discrete:
      case ExperimentKind::W2Discrete:
        r["discrete"] = rec.discrete;
        break;
      case ExperimentKind::EqualW2Pairs:
        r["equal_pairs"] = rec.equal_pairs;
        break;
      case ExperimentKind::WmCrSweep:
        r["wm_discrete"] = rec.wm_discrete;
        r["cr_discrete"] = rec.cr_discrete;
        break;
    }
    recs.push_back(std::move(r));
  }
  doc["records"] = std::move(recs);
  doc["aggregates"] = aggregates_json(*this);
  if (include_timing) {
    doc["timing"] = {
        {"total_seconds", total_seconds},
        {"seconds_per_sample", total_seconds / std::max(1, config.samples)},
    };
  }
  return doc.dump(2);
}

std::string ExperimentReport::to_csv() const {
  std::string out = "index,seed";
  switch (config.experiment) {
    case ExperimentKind::W3Discrete:
    case ExperimentKind::W2Discrete: out += ",discrete"; break;
    case ExperimentKind::EqualW2Pairs: out += ",equal_pairs"; break;
    case ExperimentKind::WmCrSweep: out += ",wm_discrete,cr_discrete"; break;
  }
  out.push_back('\n');
  for (const auto& rec : records) {
    out += std::to_string(rec.index);
    out.push_back(',');
    out += std::to_string(rec.seed);
    switch (config.experiment) {
      case ExperimentKind::W3Discrete:
      case ExperimentKind::W2Discrete:
        out += rec.discrete ? ",1" : ",0";
        break;
      case ExperimentKind::EqualW2Pairs:
        out.push_back(',');
        out += std::to_string(rec.equal_pairs);
        break;
      case ExperimentKind::WmCrSweep:
        out += rec.wm_discrete ? ",1" : ",0";
        out += rec.cr_discrete ? ",1" : ",0";
        break;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace walkcanon
