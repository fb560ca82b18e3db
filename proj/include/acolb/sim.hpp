#pragma once

#include <cstdint>
#include <vector>

#include "acolb/aco.hpp"
#include "acolb/cluster.hpp"
#include "acolb/metrics.hpp"
#include "acolb/policies.hpp"
#include "acolb/rng.hpp"
#include "acolb/trace.hpp"

namespace acolb {

struct SimConfig {
  int num_schedulers = 10;
  int num_servers = 44;
  int num_ants = 1000;
  // Ants injected per step; 0 means the whole population at step 0.
  int spawn_rate = 0;
  AcoParams aco;
  int capacity = 10;
  int service_time = 5;
  int max_retry_rounds = 10;
  std::int64_t max_steps = 10000;
  std::uint64_t seed = 42;
  PolicyKind policy = PolicyKind::Aco;

  int effective_spawn_rate() const {
    return spawn_rate > 0 ? spawn_rate : (num_ants > 0 ? num_ants : 1);
  }

  // Throws ConfigError naming the offending field.
  void validate() const;
};

// Owner scheduler for every ant id, drawn up front so the spawn schedule is
// identical across policies for the same seed (all spawn draws precede any
// selection draw).
std::vector<int> spawn_owner_sequence(const SimConfig& config, Rng& rng);

// One run of the dispatch loop on a stepped clock. Each step executes, in
// this order: spawn, per-ant select/acquire in ascending ant id, releases in
// ascending ant id, one evaporation. A refused ant retries on the next step;
// an ant whose tabu covers the whole cluster spends the step on a tabu reset
// (or fails once max_retry_rounds is exhausted).
class Simulation {
 public:
  explicit Simulation(const SimConfig& config);

  const SimConfig& config() const { return config_; }
  bool done() const;
  void step();
  void run();

  std::int64_t now() const { return now_; }
  std::int64_t steps_executed() const { return now_; }
  int spawned() const { return spawned_; }
  int live_ants() const { return live_; }
  std::int64_t uniform_fallbacks() const { return uniform_fallbacks_; }

  const Trace& trace() const { return trace_; }
  const PheromoneTable& table() const { return table_; }
  const ClusterState& cluster() const { return cluster_; }

  MetricsReport report() const;

 private:
  void spawn_phase();
  void dispatch_phase();
  void release_phase();
  void evaporate_phase();
  void emit(EventKind kind, int ant, int scheduler, int server);
  void emit(EventKind kind, int ant, int scheduler, int server, double value);

  SimConfig config_;
  Rng rng_;
  std::vector<int> owner_seq_;
  PheromoneTable table_;
  ClusterState cluster_;
  Policy policy_;
  Trace trace_;
  std::int64_t now_ = 0;
  int spawned_ = 0;
  int live_ = 0;
  std::int64_t uniform_fallbacks_ = 0;
};

// Runs to completion and returns the report; the trace is appended to
// *trace_out when given. Identical config gives identical trace and report.
MetricsReport run_simulation(const SimConfig& config, Trace* trace_out = nullptr);

}  // namespace acolb
