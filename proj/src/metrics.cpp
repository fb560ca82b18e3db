#include "acolb/metrics.hpp"

#include <cmath>

#include "acolb/sim.hpp"

namespace acolb {

double load_stddev(std::span<const int> loads) {
  // Canonical sequential sums: the dispersion numbers must not depend on the
  // active kernel variant, so no SIMD reduction here.
  double n = static_cast<double>(loads.size());
  double sum = 0.0;
  for (int load : loads) sum += static_cast<double>(load);
  double mean = sum / n;
  double sq = 0.0;
  for (int load : loads) {
    double d = static_cast<double>(load) - mean;
    sq += d * d;
  }
  return std::sqrt(sq / n);
}

double load_stddev(const ClusterState& cluster) {
  std::vector<int> loads = cluster.loads();
  return load_stddev(loads);
}

MetricsReport collect_metrics(const Trace& trace, const PheromoneTable& table,
                              const ClusterState& cluster,
                              const SimConfig& config) {
  (void)config;
  MetricsReport report;

  report.max_pheromone = table.max_value();
  double sum = 0.0;
  for (double tau : table.values()) sum += tau;
  report.mean_pheromone = sum / static_cast<double>(table.values().size());
  auto [top_i, top_j] = table.argmax();
  report.top_scheduler = top_i;
  report.top_server = top_j;

  std::vector<int> loads(cluster.servers.size(), 0);
  std::int64_t spawned = 0;
  std::int64_t steps_executed = 0;
  for (const TraceEvent& event : trace) {
    switch (event.kind) {
      case EventKind::Spawn:
        ++spawned;
        break;
      case EventKind::Acquire:
        ++loads[event.server];
        break;
      case EventKind::Return:
        --loads[event.server];
        break;
      case EventKind::Refuse:
        ++report.retries;
        break;
      case EventKind::Kill:
        ++report.completed;
        if (event.step > report.makespan) report.makespan = event.step;
        break;
      case EventKind::Fail:
        ++report.failed;
        if (event.step > report.makespan) report.makespan = event.step;
        break;
      case EventKind::Evaporate:
        ++steps_executed;
        report.load_stddev_timeseries.push_back(load_stddev(loads));
        break;
      default:
        break;
    }
  }

  if (spawned - report.completed - report.failed > 0) {
    report.makespan = steps_executed;  // stopped by max_steps
  }
  if (!report.load_stddev_timeseries.empty()) {
    double total = 0.0;
    for (double s : report.load_stddev_timeseries) total += s;
    report.mean_load_stddev =
        total / static_cast<double>(report.load_stddev_timeseries.size());
  }
  return report;
}

std::string report_csv_header() {
  return "max_pheromone,mean_pheromone,top_scheduler,top_server,"
         "mean_load_stddev,completed,failed,retries,makespan";
}

std::string report_csv_row(const MetricsReport& r) {
  std::string row;
  row += format_fixed(r.max_pheromone);
  row += ',';
  row += format_fixed(r.mean_pheromone);
  row += ',';
  row += std::to_string(r.top_scheduler);
  row += ',';
  row += std::to_string(r.top_server);
  row += ',';
  row += format_fixed(r.mean_load_stddev);
  row += ',';
  row += std::to_string(r.completed);
  row += ',';
  row += std::to_string(r.failed);
  row += ',';
  row += std::to_string(r.retries);
  row += ',';
  row += std::to_string(r.makespan);
  return row;
}

std::string report_json(const MetricsReport& r) {
  std::string out;
  out += "{\"max_pheromone\":";
  out += format_fixed(r.max_pheromone);
  out += ",\"mean_pheromone\":";
  out += format_fixed(r.mean_pheromone);
  out += ",\"top_scheduler\":";
  out += std::to_string(r.top_scheduler);
  out += ",\"top_server\":";
  out += std::to_string(r.top_server);
  out += ",\"mean_load_stddev\":";
  out += format_fixed(r.mean_load_stddev);
  out += ",\"completed\":";
  out += std::to_string(r.completed);
  out += ",\"failed\":";
  out += std::to_string(r.failed);
  out += ",\"retries\":";
  out += std::to_string(r.retries);
  out += ",\"makespan\":";
  out += std::to_string(r.makespan);
  out += '}';
  return out;
}

}  // namespace acolb
