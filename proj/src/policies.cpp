#include "acolb/policies.hpp"

#include <stdexcept>

namespace acolb {

std::string_view policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Aco: return "aco";
    case PolicyKind::Random: return "random";
    case PolicyKind::RoundRobin: return "round_robin";
    case PolicyKind::LeastLoaded: return "least_loaded";
  }
  return "unknown";
}

std::optional<PolicyKind> parse_policy(std::string_view token) {
  if (token == "aco") return PolicyKind::Aco;
  if (token == "random") return PolicyKind::Random;
  if (token == "round_robin") return PolicyKind::RoundRobin;
  if (token == "least_loaded") return PolicyKind::LeastLoaded;
  return std::nullopt;
}

int roulette_pick(std::span<const double> probs,
                  std::span<const int> candidates, double u) {
  if (candidates.empty()) {
    throw std::invalid_argument("roulette_pick: no candidates");
  }
  double cumulative = 0.0;
  for (int j : candidates) {
    cumulative += probs[j];
    if (u < cumulative) return j;
  }
  // u landed past the cumulative tail by rounding; the last candidate owns it.
  return candidates.back();
}

std::optional<PickResult> select_server(const Ant& ant,
                                        const PheromoneTable& table,
                                        const ClusterState& cluster,
                                        const AcoParams& params, Rng& rng) {
  std::vector<int> candidates = candidate_set(ant, cluster);
  if (candidates.empty()) return std::nullopt;
  std::vector<double> eta = heuristic_values(cluster);
  bool uniform_fallback = false;
  std::vector<double> probs = transition_probabilities(
      table.row(ant.owner), eta, params, candidates, &uniform_fallback);
  double u = rng.unit();
  int server = roulette_pick(probs, candidates, u);
  return PickResult{server, probs[server], uniform_fallback};
}

Policy::Policy(PolicyKind kind, int num_schedulers, int num_servers)
    : kind_(kind), cursors_(num_schedulers, 0) {
  if (num_schedulers < 1 || num_servers < 1) {
    throw std::invalid_argument("Policy: empty topology");
  }
}

std::optional<PickResult> Policy::pick(const Ant& ant,
                                       const PheromoneTable& table,
                                       const ClusterState& cluster,
                                       const AcoParams& params, Rng& rng) {
  switch (kind_) {
    case PolicyKind::Aco:
      return select_server(ant, table, cluster, params, rng);

    case PolicyKind::Random: {
      std::vector<int> candidates = candidate_set(ant, cluster);
      if (candidates.empty()) return std::nullopt;
      int idx = static_cast<int>(rng.below(candidates.size()));
      return PickResult{candidates[idx],
                        1.0 / static_cast<double>(candidates.size()), false};
    }

    case PolicyKind::RoundRobin: {
      int n = cluster.num_servers();
      int& cursor = cursors_.at(ant.owner);
      for (int k = 0; k < n; ++k) {
        int j = (cursor + k) % n;
        if (!ant.in_tabu(j)) {
          cursor = (j + 1) % n;
          return PickResult{j, 1.0, false};
        }
      }
      return std::nullopt;
    }

    case PolicyKind::LeastLoaded: {
      int best = -1;
      for (int j = 0; j < cluster.num_servers(); ++j) {
        if (ant.in_tabu(j)) continue;
        if (best < 0 || cluster.servers[j].load < cluster.servers[best].load) {
          best = j;  // strict < keeps the lowest index on ties
        }
      }
      if (best < 0) return std::nullopt;
      return PickResult{best, 1.0, false};
    }
  }
  return std::nullopt;
}

}  // namespace acolb
