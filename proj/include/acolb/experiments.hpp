#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acolb/sim.hpp"

namespace acolb {

// The ant-count sweep behind the pheromone-accumulation table.
struct SweepSpec {
  std::vector<int> ant_counts = {10, 20, 30, 50, 90, 100, 200, 300, 600, 1000};
  int replicates = 30;
  SimConfig base;  // policy is forced to Aco per run; seed = base.seed + replicate

  // Throws ConfigError: counts must be strictly increasing, in [1, 1000].
  void validate() const;
};

struct SweepRow {
  int ants = 0;
  double pheromone_mean = 0.0;  // of max_pheromone over replicates
  double pheromone_min = 0.0;
  double pheromone_max = 0.0;
  double band_low = 0.0;  // reference band for this ant count
  double band_high = 0.0;
  bool in_band = false;  // band_low <= pheromone_mean <= band_high

  bool operator==(const SweepRow&) const = default;
};

// Reference band for an ant count (the published ranges, keyed by the
// smallest "up to N" row covering the count). Throws ConfigError outside
// [1, 1000].
std::pair<double, double> reference_band(int ants);

// Rows come back in ant-count order regardless of execution order; jobs > 1
// runs replicates on worker threads with a deterministic merge.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs = 1);

struct PolicyRunStats {
  PolicyKind policy = PolicyKind::Aco;
  std::uint64_t seed = 0;
  double mean_load_stddev = 0.0;
  std::int64_t retries = 0;
  std::int64_t failed = 0;
  std::int64_t makespan = 0;

  bool operator==(const PolicyRunStats&) const = default;
};

struct ComparisonTable {
  // Policy-major (aco, random, round_robin, least_loaded), seeds in input
  // order within each policy, so per-seed pairing is positional.
  std::vector<PolicyRunStats> runs;

  std::vector<PolicyRunStats> rows_for(PolicyKind policy) const;
  double mean_load_stddev_for(PolicyKind policy) const;
};

// Runs the identical workload (same seed, hence same spawn schedule) under
// each of the four policies. Requires at least two seeds.
ComparisonTable compare_policies(const SimConfig& base,
                                 std::span<const std::uint64_t> seeds,
                                 int jobs = 1);

// Rank correlation with average ranks on ties; x and y must have equal
// length >= 2.
double spearman_rank_correlation(std::span<const double> x,
                                 std::span<const double> y);

// CSV/JSONL serializations with pinned headers and field order.
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_jsonl(const std::vector<SweepRow>& rows);
std::string sweep_plot_data(const std::vector<SweepRow>& rows);  // ants,pheromone_mean
std::string comparison_csv(const ComparisonTable& table);
std::string comparison_jsonl(const ComparisonTable& table);

}  // namespace acolb
