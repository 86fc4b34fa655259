// Command-line front end. Talks to the library only through plhg.h.
//
// Exit codes: 0 success / all verdicts pass, 1 a verdict failed,
// 2 usage, config, input-file or I/O error, 3 size guard exceeded,
// 4 internal error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plhg/plhg.h"

namespace {

constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int exit_code;
};

int exit_code_for(plhg_status status) {
  switch (status) {
    case PLHG_OK: return 0;
    case PLHG_ERR_GUARD: return kExitGuard;
    case PLHG_ERR_INTERNAL: return kExitInternal;
    default: return kExitUsage;
  }
}

void check(plhg_status status) {
  if (status == PLHG_OK) return;
  std::cerr << "plhg: error: " << plhg_last_error() << " ("
            << plhg_status_name(status) << ")\n";
  throw Failure{exit_code_for(status)};
}

// Owns a string handed out by the library.
std::string take(char* s) {
  std::string out(s ? s : "");
  plhg_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Config = Handle<plhg_config, plhg_config_free>;
using Weights = Handle<plhg_weights, plhg_weights_free>;
using Graph = Handle<plhg_hypergraph, plhg_hypergraph_free>;
using Experiment = Handle<plhg_experiment, plhg_experiment_free>;
using ErReport = Handle<plhg_er_report, plhg_er_report_free>;

// Flag name -> config key, in the order overrides are applied.
const std::vector<std::pair<std::string, std::string>> kOverrideFlags = {
    {"n", "n"},           {"m", "m"},
    {"alpha", "alpha"},   {"alphas", "alphas"},
    {"lambda", "lambda"}, {"x0", "x0"},
    {"body", "body"},     {"tau", "tau"},
    {"seed", "seed"},     {"reps", "reps"},
    {"method", "method"}, {"ns", "ns"},
    {"statistics", "statistics"},
    {"workers", "workers"},
    {"out", "out"},       {"er-ns", "er.ns"},
    {"er-reps", "er.reps"}, {"er-c", "er.c"},
    {"er-alpha", "er.alpha"},
};

struct Common {
  std::string config_path;
  std::map<std::string, std::string> flags;
  std::vector<std::string> sets;
  bool no_timing = false;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--config", common.config_path,
                  "JSON config file (comments allowed)");
  for (const auto& [flag, key] : kOverrideFlags) {
    cmd->add_option_function<std::string>(
        "--" + flag,
        [&common, flag = flag](const std::string& v) { common.flags[flag] = v; },
        "override config key '" + key + "'");
  }
  cmd->add_option("--set", common.sets, "extra override, key=value")
      ->take_all();
  cmd->add_flag("--no-timing", common.no_timing,
                "write wall_ms as 0 for byte-reproducible output");
}

void resolve(const Common& common, Config& config) {
  if (common.config_path.empty()) {
    check(plhg_config_new(config.out()));
  } else {
    check(plhg_config_load(common.config_path.c_str(), config.out()));
  }
  for (const auto& [flag, key] : kOverrideFlags) {
    auto it = common.flags.find(flag);
    if (it != common.flags.end()) {
      check(plhg_config_set(config.get(), key.c_str(), it->second.c_str()));
    }
  }
  for (const std::string& kv : common.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "plhg: error: --set expects key=value, got '" << kv << "'\n";
      throw Failure{kExitUsage};
    }
    check(plhg_config_set(config.get(), kv.substr(0, eq).c_str(),
                          kv.substr(eq + 1).c_str()));
  }
  if (common.no_timing) check(plhg_config_set(config.get(), "timing", "false"));
  char* json = nullptr;
  check(plhg_config_to_json(config.get(), &json));
  std::cerr << "plhg: resolved config:\n" << take(json) << '\n';
}

std::string out_dir(const Config& config) {
  char* dir = nullptr;
  check(plhg_config_out_dir(config.get(), &dir));
  return take(dir);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  out << text;
  if (!out) {
    std::cerr << "plhg: error: cannot write '" << path.string() << "'\n";
    throw Failure{kExitUsage};
  }
}

// Every artifact directory gets the exact resolved config and run metadata.
void write_config_echo(const Config& config, const std::string& dir) {
  char* json = nullptr;
  check(plhg_config_to_json(config.get(), &json));
  write_text(std::filesystem::path(dir) / "config.json", take(json) + "\n");
  char* meta = nullptr;
  check(plhg_config_metadata_json(config.get(), &meta));
  write_text(std::filesystem::path(dir) / "metadata.json", take(meta) + "\n");
}

std::string count_text(plhg_u128 value) {
  char buf[48];
  check(plhg_u128_to_string(value, buf, sizeof buf));
  return buf;
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_sample(const Common& common, const std::string& weights_in) {
  Config config;
  resolve(common, config);
  const std::string dir = out_dir(config);
  Weights weights;
  Graph graph;
  if (weights_in.empty()) {
    check(plhg_sample(config.get(), weights.out(), graph.out()));
  } else {
    check(plhg_weights_read(weights_in.c_str(), weights.out()));
    check(plhg_sample_with_weights(config.get(), weights.get(), graph.out()));
  }
  int outside = 0;
  check(plhg_config_outside_tau_regime(config.get(), &outside));
  if (outside) {
    std::cerr << "plhg: note: alpha < 1 and tau > 1/alpha; the n^tau edge law "
                 "does not apply to this draw\n";
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto base = std::filesystem::path(dir);
  check(plhg_hypergraph_write(graph.get(), (base / "hypergraph.txt").c_str()));
  check(plhg_weights_write(weights.get(), (base / "weights.txt").c_str()));
  write_config_echo(config, dir);
  std::uint64_t edges = 0;
  check(plhg_hypergraph_info(graph.get(), nullptr, nullptr, &edges));
  std::cout << edges << '\n';
  return 0;
}

int cmd_stats(const std::string& path, bool pair_degrees) {
  Graph graph;
  check(plhg_hypergraph_read(path.c_str(), graph.out()));
  std::uint64_t n = 0;
  int m = 0;
  check(plhg_hypergraph_info(graph.get(), &n, &m, nullptr));
  const auto start = std::chrono::steady_clock::now();
  plhg_motifs motifs{};
  check(plhg_count_motifs(graph.get(), &motifs));
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  // alpha, tau, rep and seed are not recorded in a hypergraph file.
  std::cout << "alpha,n,m,tau,rep,seed,edge_count,loose2_count,wall_ms\n"
            << "NA," << n << ',' << m << ",NA,NA,NA," << motifs.edge_count
            << ','
            << (motifs.has_loose2 ? count_text(motifs.loose2_count) : "NA")
            << ',' << number(ms) << '\n';
  if (pair_degrees) {
    char* csv = nullptr;
    check(plhg_pair_degree_csv(graph.get(), &csv));
    std::cout << take(csv);
  }
  return 0;
}

int cmd_theory(const Common& common) {
  Config config;
  resolve(common, config);
  int m = 0;
  double tau = 1.0;
  check(plhg_config_shape(config.get(), &m, &tau));
  std::size_t count = 0;
  check(plhg_config_alphas(config.get(), nullptr, 0, &count));
  std::vector<double> alphas(count);
  check(plhg_config_alphas(config.get(), alphas.data(), count, &count));
  check(plhg_config_statistics(config.get(), nullptr, 0, &count));
  std::vector<plhg_statistic> statistics(count);
  check(plhg_config_statistics(config.get(), statistics.data(), count, &count));

  std::cout << "statistic,alpha,m,tau,n_exponent,log_exponent,constant_or_NA,"
               "upper_bound_flag,concentration\n";
  for (plhg_statistic stat : statistics) {
    const char* name = stat == PLHG_STAT_LOOSE2 ? "loose2" : "edges";
    for (double alpha : alphas) {
      plhg_prediction p{};
      check(plhg_predict(config.get(), stat, alpha, &p));
      std::string constant = "NA";
      if (p.has_constant) constant = number(p.constant);
      if (p.has_upper_bound) constant = number(p.upper_bound_constant);
      std::cout << name << ',' << number(alpha) << ',' << m << ',' << number(tau)
                << ',' << number(p.n_exponent) << ','
                << number(p.log_exponent) << ',' << constant << ','
                << (p.has_upper_bound ? 1 : 0) << ','
                << (p.concentration ? 1 : 0) << '\n';
    }
  }
  return 0;
}

int finish_experiment(Experiment& experiment, const Config& config,
                      const std::string& dir) {
  const plhg_status compared = plhg_experiment_compare(experiment.get());
  if (compared != PLHG_OK) {
    // Records are still useful when no prediction applies.
    check(plhg_experiment_write(experiment.get(), dir.c_str()));
    write_config_echo(config, dir);
    check(compared);
  }
  check(plhg_experiment_write(experiment.get(), dir.c_str()));
  write_config_echo(config, dir);
  char* report = nullptr;
  check(plhg_experiment_report_csv(experiment.get(), &report));
  std::cout << take(report);
  int pass = 0;
  check(plhg_experiment_verdict(experiment.get(), &pass));
  std::cerr << "plhg: verdict: " << (pass ? "pass" : "FAIL") << '\n';
  return pass ? 0 : kExitVerdict;
}

int cmd_experiment(const Common& common) {
  Config config;
  resolve(common, config);
  const std::string dir = out_dir(config);
  Experiment experiment;
  check(plhg_experiment_run(config.get(), experiment.out()));
  return finish_experiment(experiment, config, dir);
}

int cmd_compare(const Common& common, const std::string& records) {
  Config config;
  resolve(common, config);
  const std::string dir = out_dir(config);
  Experiment experiment;
  check(plhg_experiment_load(config.get(), records.c_str(), experiment.out()));
  return finish_experiment(experiment, config, dir);
}

int cmd_er_compare(const Common& common) {
  Config config;
  resolve(common, config);
  const std::string dir = out_dir(config);
  ErReport report;
  check(plhg_er_run(config.get(), report.out()));
  check(plhg_er_write(report.get(), dir.c_str()));
  write_config_echo(config, dir);
  char* csv = nullptr;
  check(plhg_er_report_csv(report.get(), &csv));
  std::cout << take(csv);
  int pass = 0;
  check(plhg_er_verdict(report.get(), &pass));
  std::cerr << "plhg: verdict: " << (pass ? "pass" : "FAIL") << '\n';
  return pass ? 0 : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-law random hypergraphs: sampling, motif counts and "
               "scaling experiments"};
  app.require_subcommand(1);

  Common sample_opts, theory_opts, exp_opts, cmp_opts, er_opts;
  std::string weights_in, stats_path, records_path;
  bool pair_degrees = false;

  auto* sample = app.add_subcommand("sample", "draw one hypergraph");
  add_common(sample, sample_opts);
  sample->add_option("--weights-in", weights_in,
                     "use these weights instead of sampling them");

  auto* stats = app.add_subcommand("stats", "count motifs in a hypergraph file");
  stats->add_option("file", stats_path, "hypergraph file")->required();
  stats->add_flag("--pair-degrees", pair_degrees,
                  "also print the pair-degree histogram");

  auto* theory = app.add_subcommand("theory", "print asymptotic predictions");
  add_common(theory, theory_opts);

  auto* experiment =
      app.add_subcommand("experiment", "run a grid and compare to theory");
  add_common(experiment, exp_opts);

  auto* compare =
      app.add_subcommand("compare", "compare an existing records.csv");
  add_common(compare, cmp_opts);
  compare->add_option("records", records_path, "records.csv")->required();

  auto* er = app.add_subcommand("er-compare",
                                "contrast with the Erdos-Renyi hypergraph");
  add_common(er, er_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sample) return cmd_sample(sample_opts, weights_in);
    if (*stats) return cmd_stats(stats_path, pair_degrees);
    if (*theory) return cmd_theory(theory_opts);
    if (*experiment) return cmd_experiment(exp_opts);
    if (*compare) return cmd_compare(cmp_opts, records_path);
    if (*er) return cmd_er_compare(er_opts);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
