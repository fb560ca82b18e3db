#include "acolb/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "acolb/errors.hpp"

namespace acolb {

namespace {

// Runs f(0..count) across `jobs` workers; any exception is rethrown on the
// caller's thread. Results must be written to disjoint slots by index so the
// outcome does not depend on scheduling.
template <typename F>
void run_indexed(int count, int jobs, F&& f) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  int n = std::min(jobs, count);
  threads.reserve(n);
  for (int t = 0; t < n; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

constexpr PolicyKind kAllPolicies[] = {PolicyKind::Aco, PolicyKind::Random,
                                       PolicyKind::RoundRobin,
                                       PolicyKind::LeastLoaded};

}  // namespace

void SweepSpec::validate() const {
  if (ant_counts.empty()) throw ConfigError("ant_counts must not be empty");
  int prev = 0;
  for (int count : ant_counts) {
    if (count <= prev) {
      throw ConfigError("ant_counts must be strictly increasing and positive");
    }
    prev = count;
  }
  reference_band(ant_counts.back());  // rejects counts above the table
  if (replicates < 1) throw ConfigError("replicates must be >= 1");
  base.validate();
}

std::pair<double, double> reference_band(int ants) {
  if (ants < 1) throw ConfigError("ant count must be >= 1");
  struct BandRow {
    int up_to;
    double low, high;
  };
  static constexpr BandRow kBands[] = {
      {10, 0.01, 0.10},  {20, 0.10, 0.15},  {30, 0.15, 0.17},
      {50, 0.17, 0.19},  {90, 0.20, 0.30},  {100, 0.35, 0.45},
      {200, 0.50, 0.65}, {300, 0.65, 0.75}, {600, 0.75, 0.85},
      {1000, 0.85, 1.00}};
  for (const BandRow& row : kBands) {
    if (ants <= row.up_to) return {row.low, row.high};
  }
  throw ConfigError("ant count above 1000 has no reference band");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
  spec.validate();
  int rows = static_cast<int>(spec.ant_counts.size());
  int reps = spec.replicates;
  std::vector<double> max_pheromone(static_cast<std::size_t>(rows) * reps);

  run_indexed(rows * reps, jobs, [&](int task) {
    int row = task / reps;
    int rep = task % reps;
    SimConfig config = spec.base;
    config.policy = PolicyKind::Aco;
    config.num_ants = spec.ant_counts[row];
    config.seed = spec.base.seed + static_cast<std::uint64_t>(rep);
    max_pheromone[task] = run_simulation(config).max_pheromone;
  });

  std::vector<SweepRow> out(rows);
  for (int row = 0; row < rows; ++row) {
    SweepRow& r = out[row];
    r.ants = spec.ant_counts[row];
    std::span<const double> values(&max_pheromone[row * reps],
                                   static_cast<std::size_t>(reps));
    r.pheromone_min = values[0];
    r.pheromone_max = values[0];
    double sum = 0.0;
    for (double v : values) {
      sum += v;
      r.pheromone_min = std::min(r.pheromone_min, v);
      r.pheromone_max = std::max(r.pheromone_max, v);
    }
    r.pheromone_mean = sum / static_cast<double>(reps);
    auto [low, high] = reference_band(r.ants);
    r.band_low = low;
    r.band_high = high;
    r.in_band = low <= r.pheromone_mean && r.pheromone_mean <= high;
  }
  return out;
}

std::vector<PolicyRunStats> ComparisonTable::rows_for(PolicyKind policy) const {
  std::vector<PolicyRunStats> out;
  for (const PolicyRunStats& run : runs) {
    if (run.policy == policy) out.push_back(run);
  }
  return out;
}

double ComparisonTable::mean_load_stddev_for(PolicyKind policy) const {
  double sum = 0.0;
  int count = 0;
  for (const PolicyRunStats& run : runs) {
    if (run.policy == policy) {
      sum += run.mean_load_stddev;
      ++count;
    }
  }
  return count > 0 ? sum / count : 0.0;
}

ComparisonTable compare_policies(const SimConfig& base,
                                 std::span<const std::uint64_t> seeds,
                                 int jobs) {
  if (seeds.size() < 2) {
    throw ConfigError("compare_policies requires at least 2 seeds");
  }
  base.validate();
  int num_seeds = static_cast<int>(seeds.size());
  ComparisonTable table;
  table.runs.resize(static_cast<std::size_t>(4) * num_seeds);

  run_indexed(4 * num_seeds, jobs, [&](int task) {
    PolicyKind policy = kAllPolicies[task / num_seeds];
    std::uint64_t seed = seeds[task % num_seeds];
    SimConfig config = base;
    config.policy = policy;
    config.seed = seed;
    MetricsReport report = run_simulation(config);
    table.runs[task] = {policy,         seed,          report.mean_load_stddev,
                        report.retries, report.failed, report.makespan};
  });
  return table;
}

double spearman_rank_correlation(std::span<const double> x,
                                 std::span<const double> y) {
  std::size_t n = x.size();
  if (n != y.size() || n < 2) {
    throw std::invalid_argument("spearman: need two equal-length series");
  }
  auto ranks = [n](std::span<const double> v) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
      double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mean_rank;
      i = j + 1;
    }
    return rank;
  };
  std::vector<double> rx = ranks(x);
  std::vector<double> ry = ranks(y);

  double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double cov = 0.0, var_x = 0.0, var_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = rx[i] - mean;
    double dy = ry[i] - mean;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0) return 0.0;
  return cov / std::sqrt(var_x * var_y);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "ants,pheromone_mean,pheromone_min,pheromone_max,"
                    "band_low,band_high,in_band\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.ants);
    out += ',';
    out += format_fixed(r.pheromone_mean);
    out += ',';
    out += format_fixed(r.pheromone_min);
    out += ',';
    out += format_fixed(r.pheromone_max);
    out += ',';
    out += format_fixed(r.band_low);
    out += ',';
    out += format_fixed(r.band_high);
    out += ',';
    out += r.in_band ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string sweep_jsonl(const std::vector<SweepRow>& rows) {
  std::string out;
  for (const SweepRow& r : rows) {
    out += "{\"ants\":";
    out += std::to_string(r.ants);
    out += ",\"pheromone_mean\":";
    out += format_fixed(r.pheromone_mean);
    out += ",\"pheromone_min\":";
    out += format_fixed(r.pheromone_min);
    out += ",\"pheromone_max\":";
    out += format_fixed(r.pheromone_max);
    out += ",\"band_low\":";
    out += format_fixed(r.band_low);
    out += ",\"band_high\":";
    out += format_fixed(r.band_high);
    out += ",\"in_band\":";
    out += r.in_band ? "true" : "false";
    out += "}\n";
  }
  return out;
}

std::string sweep_plot_data(const std::vector<SweepRow>& rows) {
  std::string out = "ants,pheromone_mean\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.ants);
    out += ',';
    out += format_fixed(r.pheromone_mean);
    out += '\n';
  }
  return out;
}

std::string comparison_csv(const ComparisonTable& table) {
  std::string out = "policy,seed,mean_load_stddev,retries,failed,makespan\n";
  for (const PolicyRunStats& run : table.runs) {
    out += policy_name(run.policy);
    out += ',';
    out += std::to_string(run.seed);
    out += ',';
    out += format_fixed(run.mean_load_stddev);
    out += ',';
    out += std::to_string(run.retries);
    out += ',';
    out += std::to_string(run.failed);
    out += ',';
    out += std::to_string(run.makespan);
    out += '\n';
  }
  return out;
}

std::string comparison_jsonl(const ComparisonTable& table) {
  std::string out;
  for (const PolicyRunStats& run : table.runs) {
    out += "{\"policy\":\"";
    out += policy_name(run.policy);
    out += "\",\"seed\":";
    out += std::to_string(run.seed);
    out += ",\"mean_load_stddev\":";
    out += format_fixed(run.mean_load_stddev);
    out += ",\"retries\":";
    out += std::to_string(run.retries);
    out += ",\"failed\":";
    out += std::to_string(run.failed);
    out += ",\"makespan\":";
    out += std::to_string(run.makespan);
    out += "}\n";
  }
  return out;
}

}  // namespace acolb
