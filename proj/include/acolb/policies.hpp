#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "acolb/aco.hpp"
#include "acolb/cluster.hpp"
#include "acolb/rng.hpp"

namespace acolb {

enum class PolicyKind { Aco, Random, RoundRobin, LeastLoaded };

// Stable tokens used in config files, CLI flags and CSV output.
std::string_view policy_name(PolicyKind kind);
std::optional<PolicyKind> parse_policy(std::string_view token);

struct PickResult {
  int server = -1;
  double probability = 0.0;     // Select event payload
  bool uniform_fallback = false;  // ACO scores were all zero
};

// Roulette-wheel selection: cumulative bins over the candidates in order,
// pick the first candidate whose bin contains u. probs is indexed by server;
// u in [0, 1).
int roulette_pick(std::span<const double> probs, std::span<const int> candidates,
                  double u);

// The ACO selection step: transition probabilities over the ant's candidate
// set from the owner's trail row and the live heuristic values, then one
// roulette draw. Consumes exactly one draw from rng; returns nullopt (and
// draws nothing) when the candidate set is empty.
std::optional<PickResult> select_server(const Ant& ant,
                                        const PheromoneTable& table,
                                        const ClusterState& cluster,
                                        const AcoParams& params, Rng& rng);

// Server selection under one of the four dispatch policies. Stateless
// except for the per-scheduler round-robin cursors, which live here for the
// duration of a run.
class Policy {
 public:
  Policy(PolicyKind kind, int num_schedulers, int num_servers);

  PolicyKind kind() const { return kind_; }

  // Returns nullopt when the ant's candidate set is empty (tabu exhausted);
  // the caller then resets the tabu or fails the ant. Aco and Random consume
  // one rng draw per successful pick, RoundRobin and LeastLoaded none.
  std::optional<PickResult> pick(const Ant& ant, const PheromoneTable& table,
                                 const ClusterState& cluster,
                                 const AcoParams& params, Rng& rng);

 private:
  PolicyKind kind_;
  std::vector<int> cursors_;  // RoundRobin, one per scheduler
};

}  // namespace acolb
