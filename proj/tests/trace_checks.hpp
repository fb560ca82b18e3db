#pragma once

// Trace-level conformance oracle shared by the unit and acceptance suites.
// Replays a finished run's trace against the documented per-step contract
// and returns an empty string on success or the first violation found.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "acolb/sim.hpp"
#include "acolb/trace.hpp"

namespace acolb::testing {

inline std::string check_trace_conformance(const Trace& trace,
                                           const SimConfig& config) {
  struct AntReplay {
    int owner = -1;
    char state = 'S';  // S searching, A acquired, R returning, D dead, F failed
    std::vector<bool> tabu;
    int tabu_count = 0;
    int last_select = -1;
    int acquired = -1;
    std::int64_t acquired_step = -1;
    int deposits = 0;
    int resets = 0;
  };

  auto fail = [](std::int64_t step, const std::string& what) {
    return "step " + std::to_string(step) + ": " + what;
  };

  std::map<int, AntReplay> ants;
  std::vector<int> loads(config.num_servers, 0);
  std::int64_t steps_executed = 0;
  std::int64_t spawned = 0, dead = 0, failed = 0;
  int acquired_now = 0;
  int last_phase = 0;
  std::int64_t current_step = 0;
  const TraceEvent* prev = nullptr;

  for (const TraceEvent& e : trace) {
    if (e.step != steps_executed) {
      return fail(e.step, "event stamped outside the executing step");
    }
    if (e.step != current_step) {
      current_step = e.step;
      last_phase = 0;
    }

    int phase = 0;
    switch (e.kind) {
      case EventKind::Spawn: phase = 0; break;
      case EventKind::Select:
      case EventKind::Acquire:
      case EventKind::Refuse:
      case EventKind::Fail: phase = 1; break;
      case EventKind::Return:
      case EventKind::Kill: phase = 2; break;
      case EventKind::Evaporate: phase = 3; break;
      case EventKind::Deposit: phase = last_phase; break;  // tied to its trip
    }
    if (phase < last_phase) {
      return fail(e.step, "phase order violated (spawn/dispatch/release/evaporate)");
    }
    last_phase = phase;

    switch (e.kind) {
      case EventKind::Spawn: {
        if (ants.count(e.ant)) return fail(e.step, "ant spawned twice");
        AntReplay ant;
        ant.owner = e.scheduler;
        ant.tabu.assign(config.num_servers, false);
        ants[e.ant] = ant;
        ++spawned;
        break;
      }
      case EventKind::Select: {
        AntReplay& ant = ants.at(e.ant);
        if (ant.state != 'S') return fail(e.step, "select by a non-searching ant");
        if (e.scheduler != ant.owner) return fail(e.step, "select under wrong owner");
        if (ant.tabu_count == config.num_servers) {
          // the engine reset the tabu on an earlier step without an event
          ant.tabu.assign(config.num_servers, false);
          ant.tabu_count = 0;
          ++ant.resets;
          if (ant.resets > config.max_retry_rounds) {
            return fail(e.step, "more tabu resets than max_retry_rounds");
          }
        }
        if (ant.tabu[e.server]) return fail(e.step, "select offered a tabu server");
        if (!e.value.has_value() || *e.value <= 0.0 || *e.value > 1.0) {
          return fail(e.step, "select probability outside (0, 1]");
        }
        ant.last_select = e.server;
        break;
      }
      case EventKind::Acquire: {
        AntReplay& ant = ants.at(e.ant);
        if (ant.state != 'S' || e.server != ant.last_select) {
          return fail(e.step, "acquire without a matching select");
        }
        if (loads[e.server] >= config.capacity) {
          return fail(e.step, "acquire on a full server");
        }
        ++loads[e.server];
        ++acquired_now;
        ant.state = 'A';
        ant.acquired = e.server;
        ant.acquired_step = e.step;
        ant.last_select = -1;
        break;
      }
      case EventKind::Refuse: {
        AntReplay& ant = ants.at(e.ant);
        if (ant.state != 'S' || e.server != ant.last_select) {
          return fail(e.step, "refuse without a matching select");
        }
        if (loads[e.server] < config.capacity) {
          return fail(e.step, "refusal by a server with free capacity");
        }
        if (ant.tabu[e.server]) return fail(e.step, "tabu server refused twice");
        ant.tabu[e.server] = true;
        ++ant.tabu_count;
        ant.last_select = -1;
        break;
      }
      case EventKind::Deposit: {
        AntReplay& ant = ants.at(e.ant);
        bool after_acquire = prev != nullptr && prev->kind == EventKind::Acquire &&
                             prev->ant == e.ant;
        bool after_return = prev != nullptr && prev->kind == EventKind::Return &&
                            prev->ant == e.ant;
        if (!after_acquire && !after_return) {
          return fail(e.step, "deposit not tied to an acquire or return");
        }
        if (e.scheduler != ant.owner || e.server != ant.acquired) {
          return fail(e.step, "deposit off the ant's (owner, server) edge");
        }
        ++ant.deposits;
        break;
      }
      case EventKind::Return: {
        AntReplay& ant = ants.at(e.ant);
        if (ant.state != 'A' || e.server != ant.acquired) {
          return fail(e.step, "return without a held slot");
        }
        if (e.step - ant.acquired_step < config.service_time) {
          return fail(e.step, "return before the service time elapsed");
        }
        --loads[e.server];
        --acquired_now;
        ant.state = 'R';
        break;
      }
      case EventKind::Kill: {
        AntReplay& ant = ants.at(e.ant);
        if (ant.state != 'R') return fail(e.step, "kill of a non-returning ant");
        ant.state = 'D';
        ++dead;
        break;
      }
      case EventKind::Fail: {
        AntReplay& ant = ants.at(e.ant);
        if (ant.state != 'S') return fail(e.step, "fail of a non-searching ant");
        if (ant.tabu_count != config.num_servers) {
          return fail(e.step, "fail without an exhausted tabu");
        }
        if (ant.resets != config.max_retry_rounds) {
          return fail(e.step, "fail before the retry budget was used up");
        }
        ant.state = 'F';
        ++failed;
        break;
      }
      case EventKind::Evaporate: {
        // step boundary: load conservation and job conservation
        int total_load = 0;
        for (int j = 0; j < config.num_servers; ++j) {
          if (loads[j] < 0 || loads[j] > config.capacity) {
            return fail(e.step, "server load outside [0, capacity]");
          }
          total_load += loads[j];
        }
        if (total_load != acquired_now) {
          return fail(e.step, "sum of loads != ants holding slots");
        }
        std::int64_t live = spawned - dead - failed;
        if (live < 0) return fail(e.step, "more deaths than spawns");
        ++steps_executed;
        break;
      }
    }
    prev = &e;
  }

  if (steps_executed > config.max_steps) {
    return "run executed more steps than max_steps";
  }
  if (spawned > config.num_ants) {
    return "spawned more ants than num_ants";
  }
  bool hit_max_steps = steps_executed == config.max_steps;
  for (const auto& [id, ant] : ants) {
    if (ant.state == 'D' && ant.deposits != 2) {
      return "ant " + std::to_string(id) + " completed with " +
             std::to_string(ant.deposits) + " deposits";
    }
    if (ant.state == 'F' && ant.deposits != 0) {
      return "ant " + std::to_string(id) + " failed but deposited";
    }
    if (!hit_max_steps && ant.state != 'D' && ant.state != 'F') {
      return "ant " + std::to_string(id) + " still live after natural termination";
    }
  }
  if (!hit_max_steps && spawned != config.num_ants) {
    return "run terminated without spawning the whole population";
  }
  return "";
}

}  // namespace acolb::testing
