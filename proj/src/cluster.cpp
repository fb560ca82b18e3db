#include "acolb/cluster.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "acolb/kernels.hpp"

namespace acolb {

void JobScheduler::remove_pending(int ant_id) {
  auto it = std::find(pending.begin(), pending.end(), ant_id);
  if (it != pending.end()) pending.erase(it);
}

ClusterState ClusterState::make(int num_schedulers, int num_servers,
                                int capacity) {
  ClusterState cluster;
  cluster.servers.resize(num_servers);
  for (int j = 0; j < num_servers; ++j) {
    cluster.servers[j].id = j;
    cluster.servers[j].capacity = capacity;
  }
  cluster.schedulers.resize(num_schedulers);
  for (int i = 0; i < num_schedulers; ++i) {
    cluster.schedulers[i].id = i;
  }
  return cluster;
}

std::vector<int> ClusterState::loads() const {
  std::vector<int> out(servers.size());
  for (std::size_t j = 0; j < servers.size(); ++j) out[j] = servers[j].load;
  return out;
}

int ClusterState::total_load() const {
  int total = 0;
  for (const WebServer& s : servers) total += s.load;
  return total;
}

void heuristic_values(const ClusterState& cluster, std::vector<double>& out) {
  out.resize(cluster.servers.size());
  for (std::size_t j = 0; j < cluster.servers.size(); ++j) {
    out[j] = static_cast<double>(cluster.servers[j].load);
  }
  kernels::inv_one_plus(out.data(), out.data(), out.size());
}

std::vector<double> heuristic_values(const ClusterState& cluster) {
  std::vector<double> out;
  heuristic_values(cluster, out);
  return out;
}

std::vector<int> candidate_set(const Ant& ant, const ClusterState& cluster) {
  std::vector<int> out;
  out.reserve(cluster.servers.size() - ant.tabu_size());
  for (int j = 0; j < cluster.num_servers(); ++j) {
    if (!ant.in_tabu(j)) out.push_back(j);
  }
  return out;
}

AcquireOutcome try_acquire(Ant& ant, WebServer& server, std::int64_t now) {
  if (ant.state != AntState::Searching) {
    throw std::logic_error("try_acquire: ant " + std::to_string(ant.id) +
                           " is not Searching");
  }
  if (ant.in_tabu(server.id)) {
    throw std::logic_error("try_acquire: server " + std::to_string(server.id) +
                           " is tabu for ant " + std::to_string(ant.id));
  }
  if (server.load < server.capacity) {
    ++server.load;
    server.busy_until.emplace(ant.id, now + ant.service_time);
    ant.state = AntState::Acquired;
    ant.acquired_server = server.id;
    return AcquireOutcome::Acquired;
  }
  ant.add_tabu(server.id);
  return AcquireOutcome::Refused;
}

void release(Ant& ant, ClusterState& cluster, std::int64_t now) {
  if (ant.state != AntState::Acquired) {
    throw std::logic_error("release: ant " + std::to_string(ant.id) +
                           " is not Acquired");
  }
  WebServer& server = cluster.servers.at(ant.acquired_server);
  auto it = server.busy_until.find(ant.id);
  if (it == server.busy_until.end()) {
    throw std::logic_error("release: ant " + std::to_string(ant.id) +
                           " holds no slot on server " +
                           std::to_string(server.id));
  }
  if (it->second > now) {
    throw std::logic_error("release: ant " + std::to_string(ant.id) +
                           " is not due until step " +
                           std::to_string(it->second));
  }
  server.busy_until.erase(it);
  --server.load;
  ant.state = AntState::Returning;
  cluster.schedulers.at(ant.owner).completed_count += 1;
}

}  // namespace acolb
