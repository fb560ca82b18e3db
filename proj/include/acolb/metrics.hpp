#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "acolb/aco.hpp"
#include "acolb/cluster.hpp"
#include "acolb/trace.hpp"

namespace acolb {

struct SimConfig;

struct MetricsReport {
  double max_pheromone = 0.0;   // max edge trail at the final step
  double mean_pheromone = 0.0;  // mean over all edges at the final step
  int top_scheduler = -1;       // edge holding the maximum
  int top_server = -1;
  double mean_load_stddev = 0.0;  // time average of the per-step dispersion
  std::vector<double> load_stddev_timeseries;  // one sample per executed step
  std::int64_t completed = 0;
  std::int64_t failed = 0;
  std::int64_t retries = 0;  // refusals
  std::int64_t makespan = 0; // step of the last death, or steps executed when
                             // the run stopped at max_steps with live ants

  bool operator==(const MetricsReport&) const = default;
};

// Population standard deviation of the server load vector.
double load_stddev(std::span<const int> loads);
double load_stddev(const ClusterState& cluster);

// Builds the report from a finished run's trace plus its final pheromone
// table; per-step load dispersion is reconstructed by replaying the
// Acquire/Return events, so the same function serves both the engine and
// offline recomputation from an exported trace.
MetricsReport collect_metrics(const Trace& trace, const PheromoneTable& table,
                              const ClusterState& cluster,
                              const SimConfig& config);

// Flat-record serializations (the timeseries stays in memory).
std::string report_csv_header();
std::string report_csv_row(const MetricsReport& report);
std::string report_json(const MetricsReport& report);

}  // namespace acolb
