#include "acolb/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace acolb {

namespace {

constexpr std::string_view kKeys[] = {
    "num_schedulers", "num_servers",     "num_ants",
    "spawn_rate",     "alpha",           "beta",
    "pheromone_amount", "evaporation_rate", "deposit_quantum",
    "tau_init",       "tau_min",         "tau_max",
    "capacity",       "service_time",    "max_retry_rounds",
    "max_steps",      "seed",            "policy"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  return parse_number<double>(key, value);
}

}  // namespace

std::span<const std::string_view> config_keys() { return kKeys; }

void apply_config_key(SimConfig& config, std::string_view key,
                      std::string_view value) {
  if (key == "num_schedulers") {
    config.num_schedulers = parse_number<int>(key, value);
  } else if (key == "num_servers") {
    config.num_servers = parse_number<int>(key, value);
  } else if (key == "num_ants") {
    config.num_ants = parse_number<int>(key, value);
  } else if (key == "spawn_rate") {
    config.spawn_rate = parse_number<int>(key, value);
  } else if (key == "alpha") {
    config.aco.alpha = parse_real(key, value);
  } else if (key == "beta") {
    config.aco.beta = parse_real(key, value);
  } else if (key == "pheromone_amount") {
    config.aco.pheromone_amount = parse_real(key, value);
  } else if (key == "evaporation_rate") {
    config.aco.evaporation_rate = parse_real(key, value);
  } else if (key == "deposit_quantum") {
    config.aco.deposit_quantum = parse_real(key, value);
  } else if (key == "tau_init") {
    config.aco.tau_init = parse_real(key, value);
  } else if (key == "tau_min") {
    config.aco.tau_min = parse_real(key, value);
  } else if (key == "tau_max") {
    config.aco.tau_max = parse_real(key, value);
  } else if (key == "capacity") {
    config.capacity = parse_number<int>(key, value);
  } else if (key == "service_time") {
    config.service_time = parse_number<int>(key, value);
  } else if (key == "max_retry_rounds") {
    config.max_retry_rounds = parse_number<int>(key, value);
  } else if (key == "max_steps") {
    config.max_steps = parse_number<std::int64_t>(key, value);
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "policy") {
    auto policy = parse_policy(value);
    if (!policy.has_value()) {
      throw ConfigError("invalid value for policy: '" + std::string(value) +
                        "' (expected aco, random, round_robin or least_loaded)");
    }
    config.policy = *policy;
  } else {
    throw ConfigError("unknown config key: '" + std::string(key) + "'");
  }
}

void apply_config_text(SimConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("malformed config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("malformed config line " + std::to_string(line_no) +
                        ": empty key");
    }
    apply_config_key(config, key, value);
  }
}

SimConfig parse_config_text(std::string_view text) {
  SimConfig config;
  apply_config_text(config, text);
  config.validate();
  return config;
}

SimConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace acolb
