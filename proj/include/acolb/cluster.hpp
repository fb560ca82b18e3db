#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace acolb {

enum class AntState { Searching, Acquired, Returning, Dead, Failed };

// One job, probing servers on behalf of its owner scheduler. The tabu set
// holds the servers that refused the ant in its current retry round and is
// stored as a bitmap sized to the cluster.
class Ant {
 public:
  Ant(int id, int owner, int service_time, int num_servers,
      std::int64_t spawned_at)
      : id(id),
        owner(owner),
        service_time(service_time),
        spawned_at(spawned_at),
        tabu_(num_servers, 0) {}

  int id;
  int owner;  // scheduler index, the "stage i" of the transition rule
  AntState state = AntState::Searching;
  int acquired_server = -1;
  int service_time;
  int retry_rounds = 0;
  std::int64_t spawned_at;
  std::int64_t finished_at = -1;

  bool in_tabu(int server) const { return tabu_[server] != 0; }
  int tabu_size() const { return tabu_count_; }
  void add_tabu(int server) {
    if (tabu_[server] == 0) {
      tabu_[server] = 1;
      ++tabu_count_;
    }
  }
  void clear_tabu() {
    tabu_.assign(tabu_.size(), 0);
    tabu_count_ = 0;
  }

 private:
  std::vector<std::uint8_t> tabu_;
  int tabu_count_ = 0;
};

// Capacity-bounded resource holding jobs for their service time.
struct WebServer {
  int id = 0;
  int capacity = 1;
  int load = 0;
  std::map<int, std::int64_t> busy_until;  // held job id -> completion step

  bool full() const { return load >= capacity; }
};

// Dispatch origin of ants.
struct JobScheduler {
  int id = 0;
  std::vector<int> pending;  // ant ids awaiting dispatch, in spawn order
  std::int64_t completed_count = 0;

  void remove_pending(int ant_id);
};

struct ClusterState {
  std::vector<WebServer> servers;
  std::vector<JobScheduler> schedulers;
  std::vector<Ant> ants;  // indexed by ant id; finished ants stay for metrics

  static ClusterState make(int num_schedulers, int num_servers, int capacity);

  int num_servers() const { return static_cast<int>(servers.size()); }
  int num_schedulers() const { return static_cast<int>(schedulers.size()); }
  std::vector<int> loads() const;
  int total_load() const;
};

enum class AcquireOutcome { Acquired, Refused };

// eta_j = 1 / (1 + load_j), in (0, 1], one value per server. Scheduler
// independent: the load is the only heuristic signal in the model.
void heuristic_values(const ClusterState& cluster, std::vector<double>& out);
std::vector<double> heuristic_values(const ClusterState& cluster);

// All servers outside the ant's tabu, ascending. May be empty (the caller
// then resets the tabu or fails the ant).
std::vector<int> candidate_set(const Ant& ant, const ClusterState& cluster);

// Step 4 of the dispatch loop. On success the server holds the job until
// now + service_time; on refusal the server joins the ant's tabu.
// Throws std::logic_error when the ant is not Searching or the server is
// already tabu for it.
AcquireOutcome try_acquire(Ant& ant, WebServer& server, std::int64_t now);

// Frees the server slot and moves the ant to Returning; the engine owns the
// return deposit and the kill. Throws std::logic_error when the ant is not
// Acquired or its job is not due yet.
void release(Ant& ant, ClusterState& cluster, std::int64_t now);

}  // namespace acolb
