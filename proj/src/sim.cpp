#include "acolb/sim.hpp"

#include <cassert>

#include "acolb/errors.hpp"

namespace acolb {

void SimConfig::validate() const {
  if (num_schedulers < 1) throw ConfigError("num_schedulers must be >= 1");
  if (num_servers < 1) throw ConfigError("num_servers must be >= 1");
  if (num_ants < 0) throw ConfigError("num_ants must be >= 0");
  if (spawn_rate < 0) throw ConfigError("spawn_rate must be >= 0 (0 = all at step 0)");
  if (capacity < 1) throw ConfigError("capacity must be >= 1");
  if (service_time < 1) throw ConfigError("service_time must be >= 1");
  if (max_retry_rounds < 0) throw ConfigError("max_retry_rounds must be >= 0");
  if (max_steps < 1) throw ConfigError("max_steps must be >= 1");
  if (max_steps < service_time) {
    throw ConfigError("max_steps must be >= service_time");
  }
  aco.validate();
}

std::vector<int> spawn_owner_sequence(const SimConfig& config, Rng& rng) {
  std::vector<int> owners(config.num_ants);
  for (int& owner : owners) {
    owner = static_cast<int>(rng.below(config.num_schedulers));
  }
  return owners;
}

namespace {

const SimConfig& validated(const SimConfig& config) {
  config.validate();
  return config;
}

}  // namespace

Simulation::Simulation(const SimConfig& config)
    : config_(validated(config)),
      rng_(config.seed),
      owner_seq_(spawn_owner_sequence(config, rng_)),
      table_(config.num_schedulers, config.num_servers, config.aco),
      cluster_(ClusterState::make(config.num_schedulers, config.num_servers,
                                  config.capacity)),
      policy_(config.policy, config.num_schedulers, config.num_servers) {
  cluster_.ants.reserve(config.num_ants);
}

bool Simulation::done() const {
  if (now_ >= config_.max_steps) return true;
  return spawned_ == config_.num_ants && live_ == 0;
}

void Simulation::emit(EventKind kind, int ant, int scheduler, int server) {
  trace_.push_back({now_, kind, ant, scheduler, server, std::nullopt});
}

void Simulation::emit(EventKind kind, int ant, int scheduler, int server,
                      double value) {
  trace_.push_back({now_, kind, ant, scheduler, server, value});
}

void Simulation::spawn_phase() {
  int batch = config_.effective_spawn_rate();
  while (spawned_ < config_.num_ants && batch-- > 0) {
    int id = spawned_++;
    cluster_.ants.emplace_back(id, owner_seq_[id], config_.service_time,
                               config_.num_servers, now_);
    cluster_.schedulers[owner_seq_[id]].pending.push_back(id);
    ++live_;
    emit(EventKind::Spawn, id, owner_seq_[id], -1);
  }
}

void Simulation::dispatch_phase() {
  for (std::size_t id = 0; id < cluster_.ants.size(); ++id) {
    Ant& ant = cluster_.ants[id];
    if (ant.state != AntState::Searching) continue;

    if (ant.tabu_size() == config_.num_servers) {
      // Tabu exhausted: reset and retry next step, or give up.
      if (ant.retry_rounds >= config_.max_retry_rounds) {
        ant.state = AntState::Failed;
        ant.finished_at = now_;
        --live_;
        cluster_.schedulers[ant.owner].remove_pending(ant.id);
        emit(EventKind::Fail, ant.id, ant.owner, -1);
      } else {
        ++ant.retry_rounds;
        ant.clear_tabu();
      }
      continue;
    }

    auto picked = policy_.pick(ant, table_, cluster_, config_.aco, rng_);
    assert(picked.has_value());
    if (picked->uniform_fallback) ++uniform_fallbacks_;
    emit(EventKind::Select, ant.id, ant.owner, picked->server,
         picked->probability);

    WebServer& server = cluster_.servers[picked->server];
    if (try_acquire(ant, server, now_) == AcquireOutcome::Acquired) {
      emit(EventKind::Acquire, ant.id, ant.owner, picked->server);
      table_.deposit(ant.owner, picked->server, config_.aco);
      emit(EventKind::Deposit, ant.id, ant.owner, picked->server,
           table_.at(ant.owner, picked->server));
      cluster_.schedulers[ant.owner].remove_pending(ant.id);
    } else {
      emit(EventKind::Refuse, ant.id, ant.owner, picked->server);
    }
  }
}

void Simulation::release_phase() {
  for (std::size_t id = 0; id < cluster_.ants.size(); ++id) {
    Ant& ant = cluster_.ants[id];
    if (ant.state != AntState::Acquired) continue;
    const WebServer& server = cluster_.servers[ant.acquired_server];
    auto it = server.busy_until.find(ant.id);
    if (it == server.busy_until.end() || it->second > now_) continue;

    int edge_server = ant.acquired_server;
    release(ant, cluster_, now_);
    emit(EventKind::Return, ant.id, ant.owner, edge_server);
    table_.deposit(ant.owner, edge_server, config_.aco);
    emit(EventKind::Deposit, ant.id, ant.owner, edge_server,
         table_.at(ant.owner, edge_server));
    ant.state = AntState::Dead;
    ant.finished_at = now_;
    --live_;
    emit(EventKind::Kill, ant.id, ant.owner, edge_server);
  }
}

void Simulation::evaporate_phase() {
  table_.evaporate(config_.aco);
  emit(EventKind::Evaporate, -1, -1, -1);
}

void Simulation::step() {
  assert(!done());
  spawn_phase();
  dispatch_phase();
  release_phase();
  evaporate_phase();
  ++now_;
  table_.set_step(now_);
}

void Simulation::run() {
  while (!done()) step();
}

MetricsReport Simulation::report() const {
  return collect_metrics(trace_, table_, cluster_, config_);
}

MetricsReport run_simulation(const SimConfig& config, Trace* trace_out) {
  Simulation sim(config);
  sim.run();
  if (trace_out != nullptr) {
    trace_out->insert(trace_out->end(), sim.trace().begin(), sim.trace().end());
  }
  return sim.report();
}

}  // namespace acolb
