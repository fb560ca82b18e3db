#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace acolb {

// Tunables of the pheromone system.
struct AcoParams {
  double alpha = 1.0;               // exponent on the pheromone trail
  double beta = 1.0;                // exponent on the heuristic value
  double pheromone_amount = 1.0;    // A_p, multiplied into every candidate score
  double evaporation_rate = 0.005;  // rho, fraction of trail removed per step
  double deposit_quantum = 0.005;   // delta, trail added per ant traversal
  double tau_init = 0.01;
  double tau_min = 0.001;
  double tau_max = 1.0;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

// Dense (scheduler x server) trail matrix. Every entry stays inside
// [tau_min, tau_max] from construction onward; the shape never changes.
class PheromoneTable {
 public:
  PheromoneTable(int num_schedulers, int num_servers, const AcoParams& params);

  int num_schedulers() const { return num_schedulers_; }
  int num_servers() const { return num_servers_; }

  std::int64_t step() const { return step_; }
  void set_step(std::int64_t t) { step_ = t; }

  double at(int scheduler, int server) const;
  std::span<const double> row(int scheduler) const;
  std::span<const double> values() const { return tau_; }

  // Every entry becomes clamp((1 - rho) * tau). The step counter is owned
  // by the engine and left untouched.
  void evaporate(const AcoParams& params);

  // clamp(tau + delta) on one edge; throws std::out_of_range on bad indices.
  void deposit(int scheduler, int server, const AcoParams& params);

  double max_value() const;
  std::pair<int, int> argmax() const;  // lowest (scheduler, server) on ties

 private:
  int num_schedulers_;
  int num_servers_;
  std::int64_t step_ = 0;
  std::vector<double> tau_;
};

// The transition rule: p_j = tau_j^alpha * eta_j^beta * A_p over the
// candidate set, normalized; non-candidates get probability zero. A_p is
// applied uniformly so it cancels under normalization, but the raw scores
// carry it. If every raw score is zero (some eta zero with beta > 0) the
// result degrades to the uniform distribution over the candidates and
// *uniform_fallback, when given, is set so the caller can log it.
//
// Throws std::invalid_argument on an empty candidate set and
// std::out_of_range when a candidate index is not covered by the rows.
std::vector<double> transition_probabilities(std::span<const double> tau_row,
                                             std::span<const double> eta_row,
                                             const AcoParams& params,
                                             std::span<const int> candidates,
                                             bool* uniform_fallback = nullptr);

double max_edge_pheromone(const PheromoneTable& table);

}  // namespace acolb
