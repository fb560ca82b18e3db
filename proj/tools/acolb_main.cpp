// acolb - ant colony load-balancing simulator.
//
// Subcommands:
//   run      one simulation; writes a metrics report and, on request, the
//            event trace as JSON lines
//   sweep    the ant-count sweep (pheromone accumulation vs colony size)
//   compare  the same workload under aco / random / round_robin /
//            least_loaded dispatch, paired by seed
//
// Exit codes: 0 success, 1 configuration error, 2 runtime error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acolb/config.hpp"
#include "acolb/errors.hpp"
#include "acolb/experiments.hpp"
#include "acolb/kernels.hpp"
#include "acolb/metrics.hpp"
#include "acolb/sim.hpp"
#include "acolb/trace.hpp"

namespace {

using namespace acolb;

struct Overrides {
  std::optional<int> num_schedulers, num_servers, num_ants, spawn_rate,
      capacity, service_time, max_retry_rounds;
  std::optional<std::int64_t> max_steps;
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha, beta, pheromone_amount, evaporation_rate,
      deposit_quantum, tau_init, tau_min, tau_max;
  std::optional<std::string> policy;
};

void add_override_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--num-schedulers", o.num_schedulers, "job scheduler count");
  cmd->add_option("--num-servers", o.num_servers, "web server count");
  cmd->add_option("--num-ants,--ants", o.num_ants, "total jobs to spawn");
  cmd->add_option("--spawn-rate", o.spawn_rate,
                  "ants injected per step (0 = all at step 0)");
  cmd->add_option("--alpha", o.alpha, "pheromone trail exponent");
  cmd->add_option("--beta", o.beta, "heuristic value exponent");
  cmd->add_option("--pheromone-amount", o.pheromone_amount,
                  "A_p score factor");
  cmd->add_option("--evaporation-rate", o.evaporation_rate,
                  "trail fraction removed per step");
  cmd->add_option("--deposit-quantum", o.deposit_quantum,
                  "trail added per traversal");
  cmd->add_option("--tau-init", o.tau_init, "initial trail value");
  cmd->add_option("--tau-min", o.tau_min, "lower trail clamp");
  cmd->add_option("--tau-max", o.tau_max, "upper trail clamp");
  cmd->add_option("--capacity", o.capacity, "jobs a server holds at once");
  cmd->add_option("--service-time", o.service_time,
                  "steps a job occupies its server");
  cmd->add_option("--max-retry-rounds", o.max_retry_rounds,
                  "tabu resets before an ant fails");
  cmd->add_option("--max-steps", o.max_steps, "hard stop");
  cmd->add_option("--seed", o.seed, "run seed");
  cmd->add_option("--policy", o.policy,
                  "aco | random | round_robin | least_loaded");
}

void apply_overrides(SimConfig& config, const Overrides& o) {
  if (o.num_schedulers) config.num_schedulers = *o.num_schedulers;
  if (o.num_servers) config.num_servers = *o.num_servers;
  if (o.num_ants) config.num_ants = *o.num_ants;
  if (o.spawn_rate) config.spawn_rate = *o.spawn_rate;
  if (o.alpha) config.aco.alpha = *o.alpha;
  if (o.beta) config.aco.beta = *o.beta;
  if (o.pheromone_amount) config.aco.pheromone_amount = *o.pheromone_amount;
  if (o.evaporation_rate) config.aco.evaporation_rate = *o.evaporation_rate;
  if (o.deposit_quantum) config.aco.deposit_quantum = *o.deposit_quantum;
  if (o.tau_init) config.aco.tau_init = *o.tau_init;
  if (o.tau_min) config.aco.tau_min = *o.tau_min;
  if (o.tau_max) config.aco.tau_max = *o.tau_max;
  if (o.capacity) config.capacity = *o.capacity;
  if (o.service_time) config.service_time = *o.service_time;
  if (o.max_retry_rounds) config.max_retry_rounds = *o.max_retry_rounds;
  if (o.max_steps) config.max_steps = *o.max_steps;
  if (o.seed) config.seed = *o.seed;
  if (o.policy) apply_config_key(config, "policy", *o.policy);
}

// Precedence: flags over file over defaults; validated after the merge.
SimConfig resolve_config(const std::string& config_path, const Overrides& o) {
  SimConfig config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot read config file: " + config_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    apply_config_text(config, buffer.str());
  }
  apply_overrides(config, o);
  config.validate();
  return config;
}

// Relative output paths land in $ACOLB_OUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::string& path) {
  const char* dir = std::getenv("ACOLB_OUT_DIR");
  std::filesystem::path p(path);
  if (dir != nullptr && *dir != '\0' && p.is_relative()) {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

// path "-" writes to stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::filesystem::path resolved = resolve_output_path(path);
  std::ofstream out(resolved, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write output file: " + resolved.string());
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing output file: " + resolved.string());
  }
}

void select_kernels(const std::string& choice) {
  if (choice.empty() || choice == "auto") return;
  if (choice == "scalar") {
    kernels::set_active(kernels::Variant::scalar);
  } else if (choice == "avx2") {
    kernels::set_active(kernels::Variant::avx2);
  } else if (choice == "neon") {
    kernels::set_active(kernels::Variant::neon);
  } else {
    throw ConfigError("unknown kernel variant: '" + choice +
                      "' (expected auto, scalar, avx2 or neon)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ant colony load-balancing simulator"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "run one simulation");
  std::string run_config, run_output = "-", run_trace, run_format = "jsonl";
  std::string run_kernels = "auto";
  Overrides run_overrides;
  run_cmd->add_option("--config,-c", run_config, "config file (key = value)");
  run_cmd->add_option("--output,-o", run_output, "report path ('-' = stdout)");
  run_cmd->add_option("--trace", run_trace, "write the event trace here");
  run_cmd->add_option("--format", run_format, "jsonl | csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  run_cmd->add_option("--kernels", run_kernels, "auto | scalar | avx2 | neon");
  add_override_options(run_cmd, run_overrides);

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "ant-count sweep of pheromone accumulation");
  std::string sweep_config, sweep_output = "-", sweep_plot,
              sweep_format = "csv", sweep_kernels = "auto";
  std::vector<int> sweep_counts;
  int sweep_replicates = 30;
  int sweep_jobs = 1;
  Overrides sweep_overrides;
  sweep_cmd->add_option("--config,-c", sweep_config, "config file");
  sweep_cmd->add_option("--output,-o", sweep_output, "table path ('-' = stdout)");
  sweep_cmd->add_option("--plot", sweep_plot,
                        "also write two-column plot data (ants,pheromone_mean)");
  sweep_cmd->add_option("--format", sweep_format, "csv | jsonl")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  sweep_cmd
      ->add_option("--ant-counts", sweep_counts,
                   "ant counts to sweep (default: the reference rows)")
      ->delimiter(',');
  sweep_cmd->add_option("--replicates", sweep_replicates,
                        "seeded replicates per ant count");
  sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads");
  sweep_cmd->add_option("--kernels", sweep_kernels, "auto | scalar | avx2 | neon");
  add_override_options(sweep_cmd, sweep_overrides);

  // compare
  auto* compare_cmd =
      app.add_subcommand("compare", "same workload under all four policies");
  std::string compare_config, compare_output = "-", compare_format = "csv",
              compare_kernels = "auto";
  int compare_seeds = 30;
  int compare_jobs = 1;
  Overrides compare_overrides;
  compare_cmd->add_option("--config,-c", compare_config, "config file");
  compare_cmd->add_option("--output,-o", compare_output,
                          "table path ('-' = stdout)");
  compare_cmd->add_option("--format", compare_format, "csv | jsonl")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  compare_cmd->add_option("--seeds", compare_seeds,
                          "paired seeds (base seed + 0..N-1)");
  compare_cmd->add_option("--jobs", compare_jobs, "worker threads");
  compare_cmd->add_option("--kernels", compare_kernels,
                          "auto | scalar | avx2 | neon");
  add_override_options(compare_cmd, compare_overrides);

  try {
    app.parse(argc, argv);

    if (run_cmd->parsed()) {
      select_kernels(run_kernels);
      SimConfig config = resolve_config(run_config, run_overrides);
      Simulation sim(config);
      sim.run();
      MetricsReport report = sim.report();
      if (sim.uniform_fallbacks() > 0) {
        std::cerr << "note: " << sim.uniform_fallbacks()
                  << " selections fell back to the uniform distribution\n";
      }
      std::string body = run_format == "csv"
                             ? report_csv_header() + "\n" +
                                   report_csv_row(report) + "\n"
                             : report_json(report) + "\n";
      write_output(run_output, body);
      if (!run_trace.empty()) {
        std::ostringstream trace_text;
        write_trace(trace_text, sim.trace());
        write_output(run_trace, trace_text.str());
      }
    } else if (sweep_cmd->parsed()) {
      select_kernels(sweep_kernels);
      SweepSpec spec;
      spec.base = resolve_config(sweep_config, sweep_overrides);
      if (!sweep_counts.empty()) spec.ant_counts = sweep_counts;
      spec.replicates = sweep_replicates;
      std::vector<SweepRow> rows = run_sweep(spec, sweep_jobs);
      write_output(sweep_output,
                   sweep_format == "jsonl" ? sweep_jsonl(rows) : sweep_csv(rows));
      if (!sweep_plot.empty()) write_output(sweep_plot, sweep_plot_data(rows));
    } else if (compare_cmd->parsed()) {
      select_kernels(compare_kernels);
      SimConfig base = resolve_config(compare_config, compare_overrides);
      if (compare_seeds < 2) {
        throw ConfigError("compare needs --seeds >= 2");
      }
      std::vector<std::uint64_t> seeds(compare_seeds);
      for (int i = 0; i < compare_seeds; ++i) {
        seeds[i] = base.seed + static_cast<std::uint64_t>(i);
      }
      ComparisonTable table = compare_policies(base, seeds, compare_jobs);
      write_output(compare_output, compare_format == "jsonl"
                                       ? comparison_jsonl(table)
                                       : comparison_csv(table));
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
