#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "acolb/errors.hpp"
#include "acolb/sim.hpp"
#include "trace_checks.hpp"

using namespace acolb;

namespace {

SimConfig small_config() {
  SimConfig config;
  config.num_schedulers = 3;
  config.num_servers = 5;
  config.num_ants = 20;
  config.capacity = 2;
  config.service_time = 3;
  config.seed = 11;
  return config;
}

Trace events_at_step(const Trace& trace, std::int64_t step) {
  Trace out;
  for (const TraceEvent& e : trace) {
    if (e.step == step) out.push_back(e);
  }
  return out;
}

std::int64_t count_kind(const Trace& trace, EventKind kind) {
  return std::count_if(trace.begin(), trace.end(),
                       [&](const TraceEvent& e) { return e.kind == kind; });
}

}  // namespace

TEST_CASE("config validation") {
  SimConfig config;
  CHECK_NOTHROW(config.validate());
  SUBCASE("zero schedulers") {
    config.num_schedulers = 0;
    CHECK_THROWS_AS(config.validate(), ConfigError);
  }
  SUBCASE("max_steps below service_time") {
    config.max_steps = 3;
    config.service_time = 5;
    CHECK_THROWS_AS(config.validate(), ConfigError);
  }
  SUBCASE("negative spawn rate") {
    config.spawn_rate = -1;
    CHECK_THROWS_AS(config.validate(), ConfigError);
  }
  SUBCASE("aco params are validated too") {
    config.aco.evaporation_rate = 1.5;
    CHECK_THROWS_AS(config.validate(), ConfigError);
  }
}

TEST_CASE("spawn owner sequence") {
  SimConfig config;
  config.num_ants = 1000;
  config.num_schedulers = 10;
  config.seed = 42;

  SUBCASE("single scheduler owns everything") {
    config.num_schedulers = 1;
    Rng rng(config.seed);
    for (int owner : spawn_owner_sequence(config, rng)) CHECK(owner == 0);
  }

  SUBCASE("fixed seed reproduces the sequence") {
    Rng a(config.seed), b(config.seed);
    CHECK(spawn_owner_sequence(config, a) == spawn_owner_sequence(config, b));
  }

  SUBCASE("default seed spreads 1000 ants within [50, 150] per scheduler") {
    Rng rng(config.seed);
    std::vector<int> counts(10, 0);
    for (int owner : spawn_owner_sequence(config, rng)) ++counts[owner];
    for (int c : counts) {
      CHECK(c >= 50);
      CHECK(c <= 150);
    }
  }
}

TEST_CASE("one ant, one server: the documented single-step hand trace") {
  SimConfig config;
  config.num_schedulers = 1;
  config.num_servers = 1;
  config.num_ants = 1;
  config.capacity = 1;
  config.service_time = 5;

  Simulation sim(config);
  sim.step();
  // acquire at step 0, then one evaporation
  CHECK(sim.table().at(0, 0) == (0.01 + 0.005) * (1.0 - 0.005));
  CHECK(sim.cluster().ants[0].state == AntState::Acquired);

  sim.run();
  CHECK(sim.cluster().ants[0].state == AntState::Dead);
  CHECK(count_kind(sim.trace(), EventKind::Deposit) == 2);
  for (const TraceEvent& e : sim.trace()) {
    if (e.kind == EventKind::Deposit) {
      CHECK(e.scheduler == 0);
      CHECK(e.server == 0);
    }
  }
  MetricsReport report = sim.report();
  CHECK(report.completed == 1);
  CHECK(report.failed == 0);
  CHECK(report.makespan == 5);  // service_time with release inside step 5
  CHECK(testing::check_trace_conformance(sim.trace(), config).empty());
}

TEST_CASE("steps with only held jobs emit a single Evaporate event") {
  SimConfig config;
  config.num_schedulers = 1;
  config.num_servers = 1;
  config.num_ants = 1;
  config.capacity = 1;
  config.service_time = 5;

  Simulation sim(config);
  sim.run();
  for (std::int64_t step : {1, 2, 3, 4}) {
    Trace slice = events_at_step(sim.trace(), step);
    REQUIRE(slice.size() == 1);
    CHECK(slice[0].kind == EventKind::Evaporate);
  }
  // trail decays by exactly (1 - rho) across such a step
  double after_step0 = (0.01 + 0.005) * 0.995;
  Simulation replay(config);
  replay.step();
  CHECK(replay.table().at(0, 0) == after_step0);
  replay.step();
  CHECK(replay.table().at(0, 0) == after_step0 * 0.995);
}

TEST_CASE("zero-ant run ends immediately with an untouched table") {
  SimConfig config;
  config.num_ants = 0;
  Simulation sim(config);
  CHECK(sim.done());
  sim.run();
  CHECK(sim.trace().empty());
  MetricsReport report = sim.report();
  CHECK(report.completed == 0);
  CHECK(report.failed == 0);
  CHECK(report.retries == 0);
  CHECK(report.makespan == 0);
  CHECK(report.max_pheromone == config.aco.tau_init);
  CHECK(report.mean_pheromone == doctest::Approx(config.aco.tau_init));
}

TEST_CASE("full saturation produces refusals, tabu growth, then recovery") {
  SimConfig config;
  config.num_schedulers = 1;
  config.num_servers = 1;
  config.num_ants = 2;
  config.capacity = 1;
  config.service_time = 5;
  config.seed = 3;

  Simulation sim(config);
  sim.step();
  // ant 0 holds the only slot; ant 1 was refused once and stays pending
  Trace refusals = events_at_step(sim.trace(), 0);
  CHECK(count_kind(refusals, EventKind::Refuse) == 1);
  CHECK(sim.cluster().ants[1].tabu_size() == 1);
  CHECK(sim.cluster().schedulers[0].pending == std::vector<int>{1});

  sim.run();
  MetricsReport report = sim.report();
  CHECK(report.completed == 2);
  CHECK(report.failed == 0);
  CHECK(report.retries >= 1);
  CHECK(sim.cluster().schedulers[0].pending.empty());
  CHECK(sim.cluster().schedulers[0].completed_count == 2);
  CHECK(testing::check_trace_conformance(sim.trace(), config).empty());
}

TEST_CASE("retry budget exhaustion fails the ant") {
  SimConfig config;
  config.num_schedulers = 1;
  config.num_servers = 1;
  config.num_ants = 2;
  config.capacity = 1;
  config.service_time = 100;  // slot never frees in time
  config.max_retry_rounds = 2;
  config.max_steps = 200;

  Simulation sim(config);
  sim.run();
  MetricsReport report = sim.report();
  CHECK(report.completed == 1);
  CHECK(report.failed == 1);
  CHECK(count_kind(sim.trace(), EventKind::Fail) == 1);
  CHECK(sim.cluster().ants[1].state == AntState::Failed);
  CHECK(sim.cluster().ants[1].retry_rounds == 2);
  CHECK(testing::check_trace_conformance(sim.trace(), config).empty());
}

TEST_CASE("identical configs give identical traces and reports") {
  SimConfig config = small_config();
  Simulation a(config), b(config);
  a.run();
  b.run();
  CHECK(a.trace() == b.trace());
  CHECK(a.report() == b.report());

  Trace via_helper;
  MetricsReport report = run_simulation(config, &via_helper);
  CHECK(via_helper == a.trace());
  CHECK(report == a.report());
}

TEST_CASE("changing only the seed changes the trace") {
  SimConfig config = small_config();
  Simulation a(config);
  config.seed += 1;
  Simulation b(config);
  a.run();
  b.run();
  CHECK(a.trace() != b.trace());
}

TEST_CASE("spawn schedule is policy-invariant for a fixed seed") {
  SimConfig config = small_config();
  config.spawn_rate = 3;  // staggered spawning must not break the invariance
  std::vector<Trace> spawns;
  for (PolicyKind policy : {PolicyKind::Aco, PolicyKind::Random,
                            PolicyKind::RoundRobin, PolicyKind::LeastLoaded}) {
    config.policy = policy;
    Simulation sim(config);
    sim.run();
    Trace only_spawns;
    for (const TraceEvent& e : sim.trace()) {
      if (e.kind == EventKind::Spawn) only_spawns.push_back(e);
    }
    spawns.push_back(only_spawns);
  }
  for (std::size_t i = 1; i < spawns.size(); ++i) {
    CHECK(spawns[i] == spawns[0]);
  }
}

TEST_CASE("single-server cluster: policies differ only in Select payloads") {
  SimConfig config;
  config.num_schedulers = 2;
  config.num_servers = 1;
  config.num_ants = 6;
  config.capacity = 2;
  config.service_time = 2;
  config.seed = 17;

  std::vector<Trace> traces;
  for (PolicyKind policy : {PolicyKind::Aco, PolicyKind::Random,
                            PolicyKind::RoundRobin, PolicyKind::LeastLoaded}) {
    config.policy = policy;
    Trace trace;
    run_simulation(config, &trace);
    for (TraceEvent& e : trace) {
      if (e.kind == EventKind::Select) e.value.reset();
    }
    traces.push_back(std::move(trace));
  }
  for (std::size_t i = 1; i < traces.size(); ++i) {
    CHECK(traces[i] == traces[0]);
  }
}

TEST_CASE("trace conformance across random configurations and policies") {
  Rng fuzz(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    SimConfig config;
    config.num_schedulers = 1 + static_cast<int>(fuzz.below(4));
    config.num_servers = 1 + static_cast<int>(fuzz.below(6));
    config.num_ants = static_cast<int>(fuzz.below(40));
    config.capacity = 1 + static_cast<int>(fuzz.below(3));
    config.service_time = 1 + static_cast<int>(fuzz.below(4));
    config.spawn_rate = static_cast<int>(fuzz.below(6));
    config.max_retry_rounds = static_cast<int>(fuzz.below(4));
    config.seed = fuzz.next();
    config.policy = static_cast<PolicyKind>(fuzz.below(4));

    Trace trace;
    MetricsReport report = run_simulation(config, &trace);
    CAPTURE(trial);
    std::string error = testing::check_trace_conformance(trace, config);
    CHECK_MESSAGE(error.empty(), error);
    CHECK(report.completed + report.failed <= config.num_ants);
    CHECK(count_kind(trace, EventKind::Kill) == report.completed);
    CHECK(count_kind(trace, EventKind::Fail) == report.failed);
    CHECK(count_kind(trace, EventKind::Refuse) == report.retries);
  }
}

TEST_CASE("default-scale run completes everything within the step budget") {
  SimConfig config;  // 10 schedulers, 44 servers, 1000 ants, seed 42
  Simulation sim(config);
  sim.run();
  MetricsReport report = sim.report();
  CHECK(report.completed == 1000);
  CHECK(report.failed == 0);
  CHECK(sim.steps_executed() < config.max_steps);
  CHECK(sim.table().step() == sim.steps_executed());
  CHECK(count_kind(sim.trace(), EventKind::Deposit) == 2000);

  std::int64_t per_scheduler_total = 0;
  for (const JobScheduler& s : sim.cluster().schedulers) {
    CHECK(s.pending.empty());
    per_scheduler_total += s.completed_count;
  }
  CHECK(per_scheduler_total == report.completed);
}

TEST_CASE("reinforcement: most-deposited edge carries the highest trail") {
  SimConfig config;
  config.num_ants = 150;
  config.seed = 5;
  Simulation sim(config);
  sim.run();

  std::map<std::pair<int, int>, int> deposit_counts;
  for (const TraceEvent& e : sim.trace()) {
    if (e.kind == EventKind::Deposit) {
      ++deposit_counts[{e.scheduler, e.server}];
    }
  }
  int best_count = 0;
  for (const auto& [edge, count] : deposit_counts) {
    best_count = std::max(best_count, count);
  }
  double top_tau = sim.table().max_value();
  // some edge with the most deposits must sit at the top trail value
  // (tau ties resolve by deposit count)
  bool match = false;
  for (const auto& [edge, count] : deposit_counts) {
    if (count == best_count &&
        sim.table().at(edge.first, edge.second) == top_tau) {
      match = true;
    }
  }
  CHECK(match);
}
