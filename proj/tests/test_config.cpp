#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "acolb/config.hpp"
#include "acolb/errors.hpp"

using namespace acolb;

TEST_CASE("empty document yields the documented defaults") {
  SimConfig config = parse_config_text("");
  CHECK(config.num_schedulers == 10);
  CHECK(config.num_servers == 44);
  CHECK(config.num_ants == 1000);
  CHECK(config.spawn_rate == 0);
  CHECK(config.aco.alpha == 1.0);
  CHECK(config.aco.beta == 1.0);
  CHECK(config.aco.pheromone_amount == 1.0);
  CHECK(config.aco.evaporation_rate == 0.005);
  CHECK(config.aco.deposit_quantum == 0.005);
  CHECK(config.aco.tau_init == 0.01);
  CHECK(config.aco.tau_min == 0.001);
  CHECK(config.aco.tau_max == 1.0);
  CHECK(config.capacity == 10);
  CHECK(config.service_time == 5);
  CHECK(config.max_retry_rounds == 10);
  CHECK(config.max_steps == 10000);
  CHECK(config.seed == 42);
  CHECK(config.policy == PolicyKind::Aco);
}

TEST_CASE("documents parse keys, comments and blank lines") {
  SimConfig config = parse_config_text(
      "# experiment setup\n"
      "num_ants = 200\n"
      "\n"
      "alpha=2.5\n"
      "policy = least_loaded   # baseline\n"
      "seed = 18446744073709551615\n");
  CHECK(config.num_ants == 200);
  CHECK(config.aco.alpha == 2.5);
  CHECK(config.policy == PolicyKind::LeastLoaded);
  CHECK(config.seed == 18446744073709551615ull);
}

TEST_CASE("later values and overrides win") {
  SimConfig config;
  apply_config_text(config, "num_ants = 100\n");
  CHECK(config.num_ants == 100);
  // a flag override lands after the file
  apply_config_key(config, "num_ants", "200");
  CHECK(config.num_ants == 200);
  config.validate();
}

TEST_CASE("unknown keys are hard errors naming the key") {
  SimConfig config;
  try {
    apply_config_text(config, "ant_count = 10\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("ant_count") != std::string::npos);
  }
}

TEST_CASE("out-of-range values are rejected with the field named") {
  try {
    parse_config_text("evaporation_rate = 1.5\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("evaporation_rate") != std::string::npos);
  }
}

TEST_CASE("malformed lines and values") {
  SimConfig config;
  CHECK_THROWS_AS(apply_config_text(config, "num_ants\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(config, "num_ants = ten\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(config, "num_ants = 1.5\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(config, "= 5\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(config, "policy = fastest\n"), ConfigError);
}

TEST_CASE("every documented key is applicable") {
  SimConfig config;
  for (std::string_view key : config_keys()) {
    if (key == "policy") {
      CHECK_NOTHROW(apply_config_key(config, key, "random"));
    } else {
      CHECK_NOTHROW(apply_config_key(config, key, "1"));
    }
  }
}

TEST_CASE("missing config file") {
  CHECK_THROWS_AS(load_config_file("/nonexistent/acolb.conf"), ConfigError);
}
