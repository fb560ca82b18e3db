#include "acolb/aco.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "acolb/errors.hpp"
#include "acolb/kernels.hpp"

namespace acolb {

namespace {

// alpha and beta default to small integers; skip libm for those. The
// shortcuts agree with std::pow well inside the 1e-12 oracle tolerance.
double pow_fast(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  if (exponent == 1.0) return base;
  if (exponent == 2.0) return base * base;
  return std::pow(base, exponent);
}

}  // namespace

void AcoParams::validate() const {
  if (!(alpha >= 0.0)) throw ConfigError("alpha must be >= 0");
  if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
  if (!(pheromone_amount > 0.0))
    throw ConfigError("pheromone_amount must be > 0");
  if (!(evaporation_rate >= 0.0 && evaporation_rate < 1.0))
    throw ConfigError("evaporation_rate must be in [0, 1)");
  if (!(deposit_quantum > 0.0)) throw ConfigError("deposit_quantum must be > 0");
  if (!(tau_min > 0.0)) throw ConfigError("tau_min must be > 0");
  if (!(tau_min <= tau_init)) throw ConfigError("tau_init must be >= tau_min");
  if (!(tau_init <= tau_max)) throw ConfigError("tau_max must be >= tau_init");
  if (!(tau_max <= 1.0)) throw ConfigError("tau_max must be <= 1");
}

PheromoneTable::PheromoneTable(int num_schedulers, int num_servers,
                               const AcoParams& params)
    : num_schedulers_(num_schedulers), num_servers_(num_servers) {
  if (num_schedulers < 1 || num_servers < 1) {
    throw std::invalid_argument("PheromoneTable: empty topology");
  }
  double tau0 = std::clamp(params.tau_init, params.tau_min, params.tau_max);
  tau_.assign(static_cast<std::size_t>(num_schedulers) * num_servers, tau0);
}

double PheromoneTable::at(int scheduler, int server) const {
  if (scheduler < 0 || scheduler >= num_schedulers_ || server < 0 ||
      server >= num_servers_) {
    throw std::out_of_range("PheromoneTable::at: edge (" +
                            std::to_string(scheduler) + ", " +
                            std::to_string(server) + ") out of range");
  }
  return tau_[static_cast<std::size_t>(scheduler) * num_servers_ + server];
}

std::span<const double> PheromoneTable::row(int scheduler) const {
  if (scheduler < 0 || scheduler >= num_schedulers_) {
    throw std::out_of_range("PheromoneTable::row: scheduler " +
                            std::to_string(scheduler) + " out of range");
  }
  return {tau_.data() + static_cast<std::size_t>(scheduler) * num_servers_,
          static_cast<std::size_t>(num_servers_)};
}

void PheromoneTable::evaporate(const AcoParams& params) {
  kernels::scale_clamp(tau_.data(), tau_.data(), tau_.size(),
                       1.0 - params.evaporation_rate, params.tau_min,
                       params.tau_max);
}

void PheromoneTable::deposit(int scheduler, int server,
                             const AcoParams& params) {
  if (scheduler < 0 || scheduler >= num_schedulers_ || server < 0 ||
      server >= num_servers_) {
    throw std::out_of_range("PheromoneTable::deposit: edge (" +
                            std::to_string(scheduler) + ", " +
                            std::to_string(server) + ") out of range");
  }
  double& tau =
      tau_[static_cast<std::size_t>(scheduler) * num_servers_ + server];
  tau = std::clamp(tau + params.deposit_quantum, params.tau_min,
                   params.tau_max);
}

double PheromoneTable::max_value() const {
  return kernels::max_value(tau_.data(), tau_.size());
}

std::pair<int, int> PheromoneTable::argmax() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < tau_.size(); ++i) {
    if (tau_[i] > tau_[best]) best = i;
  }
  return {static_cast<int>(best / num_servers_),
          static_cast<int>(best % num_servers_)};
}

std::vector<double> transition_probabilities(std::span<const double> tau_row,
                                             std::span<const double> eta_row,
                                             const AcoParams& params,
                                             std::span<const int> candidates,
                                             bool* uniform_fallback) {
  if (uniform_fallback != nullptr) *uniform_fallback = false;
  if (candidates.empty()) {
    throw std::invalid_argument("transition_probabilities: no candidates");
  }
  if (eta_row.size() != tau_row.size()) {
    throw std::invalid_argument(
        "transition_probabilities: tau/eta row size mismatch");
  }

  std::vector<double> probs(tau_row.size(), 0.0);
  double total = 0.0;
  for (int j : candidates) {
    if (j < 0 || static_cast<std::size_t>(j) >= tau_row.size()) {
      throw std::out_of_range("transition_probabilities: candidate " +
                              std::to_string(j) + " not covered by rows");
    }
    double score = pow_fast(tau_row[j], params.alpha) *
                   pow_fast(eta_row[j], params.beta) * params.pheromone_amount;
    probs[j] = score;
    total += score;
  }

  if (total == 0.0) {
    double uniform = 1.0 / static_cast<double>(candidates.size());
    for (int j : candidates) probs[j] = uniform;
    if (uniform_fallback != nullptr) *uniform_fallback = true;
    return probs;
  }

  for (int j : candidates) probs[j] /= total;
  return probs;
}

double max_edge_pheromone(const PheromoneTable& table) {
  return table.max_value();
}

}  // namespace acolb
