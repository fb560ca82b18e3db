#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "acolb/errors.hpp"
#include "acolb/sim.hpp"

namespace acolb {

// The flat key=value config format. One `key = value` pair per line, `#`
// starts a comment, keys match the SimConfig field names exactly:
//   num_schedulers, num_servers, num_ants, spawn_rate, alpha, beta,
//   pheromone_amount, evaporation_rate, deposit_quantum, tau_init, tau_min,
//   tau_max, capacity, service_time, max_retry_rounds, max_steps, seed,
//   policy
// Unknown keys are hard errors so typos in experiment scripts surface.

std::span<const std::string_view> config_keys();

// Applies one key; throws ConfigError naming the key on unknown keys and
// unparsable values. Range validation happens later via validate() so flag
// overrides can fix out-of-range file values.
void apply_config_key(SimConfig& config, std::string_view key,
                      std::string_view value);

// Parses the document into an existing config without range validation.
void apply_config_text(SimConfig& config, std::string_view text);

// Defaults + document + validation in one step.
SimConfig parse_config_text(std::string_view text);
SimConfig load_config_file(const std::filesystem::path& path);

}  // namespace acolb
