#include "plhg/plhg.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "plhg/config.hpp"
#include "plhg/error.hpp"
#include "plhg/experiment.hpp"
#include "plhg/hypergraph.hpp"
#include "plhg/sampler.hpp"
#include "plhg/stats.hpp"
#include "plhg/theory.hpp"

struct plhg_config {
  plhg::RunConfig config;
};

struct plhg_weights {
  plhg::WeightAssignment weights;
};

struct plhg_hypergraph {
  plhg::Hypergraph graph;
};

struct plhg_experiment {
  plhg::RunConfig config;
  std::vector<plhg::StatRecord> records;
  int m = 3;
  double tau = 1.0;
  bool compared = false;
  std::vector<plhg::ComparisonRow> rows;
};

struct plhg_er_report {
  plhg::ErComparisonReport report;
};

namespace {

thread_local std::string last_error;

plhg_status status_of(plhg::ErrorCode code) {
  switch (code) {
    case plhg::ErrorCode::InvalidArgument: return PLHG_ERR_INVALID_ARGUMENT;
    case plhg::ErrorCode::Domain: return PLHG_ERR_DOMAIN;
    case plhg::ErrorCode::Config: return PLHG_ERR_CONFIG;
    case plhg::ErrorCode::Guard: return PLHG_ERR_GUARD;
    case plhg::ErrorCode::Parse: return PLHG_ERR_PARSE;
    case plhg::ErrorCode::Io: return PLHG_ERR_IO;
  }
  return PLHG_ERR_INTERNAL;
}

template <class F>
plhg_status guarded(F&& body) {
  try {
    body();
    return PLHG_OK;
  } catch (const plhg::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PLHG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PLHG_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PLHG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) {
    plhg::fail(plhg::ErrorCode::InvalidArgument,
               std::string(name) + " must not be NULL");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

plhg_u128 split(plhg::Count c) {
  return {static_cast<std::uint64_t>(c >> 64), static_cast<std::uint64_t>(c)};
}

plhg::Statistic statistic_of(plhg_statistic s) {
  if (s == PLHG_STAT_EDGES) return plhg::Statistic::Edges;
  if (s == PLHG_STAT_LOOSE2) return plhg::Statistic::Loose2;
  plhg::fail(plhg::ErrorCode::InvalidArgument, "unknown statistic");
}

std::filesystem::path prepare_dir(const char* dir) {
  require(dir, "dir");
  std::filesystem::path path(dir);
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) {
    plhg::fail(plhg::ErrorCode::Io, "cannot create directory '" +
                                        path.string() + "': " + ec.message());
  }
  return path;
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path);
  if (!out) {
    plhg::fail(plhg::ErrorCode::Io, "cannot write '" + path.string() + "'");
  }
  writer(out);
  out.flush();
  if (!out) {
    plhg::fail(plhg::ErrorCode::Io, "write failed for '" + path.string() + "'");
  }
}

std::string report_csv(const plhg_experiment& e) {
  std::ostringstream out;
  plhg::write_report_csv(out, e.rows);
  return out.str();
}

}  // namespace

extern "C" {

const char* plhg_version(void) { return "0.1.0"; }

const char* plhg_last_error(void) { return last_error.c_str(); }

const char* plhg_status_name(plhg_status status) {
  switch (status) {
    case PLHG_OK: return "ok";
    case PLHG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PLHG_ERR_DOMAIN: return "domain error";
    case PLHG_ERR_CONFIG: return "config error";
    case PLHG_ERR_GUARD: return "guard exceeded";
    case PLHG_ERR_PARSE: return "parse error";
    case PLHG_ERR_IO: return "io error";
    case PLHG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void plhg_string_free(char* s) { std::free(s); }

plhg_status plhg_u128_to_string(plhg_u128 value, char* buf, size_t cap) {
  return guarded([&] {
    require(buf, "buf");
    const plhg::Count c = (static_cast<plhg::Count>(value.hi) << 64) | value.lo;
    const std::string s = plhg::to_string(c);
    if (cap < 40 || s.size() + 1 > cap) {
      plhg::fail(plhg::ErrorCode::InvalidArgument, "buffer too small");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

plhg_status plhg_config_new(plhg_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new plhg_config{};
  });
}

plhg_status plhg_config_load(const char* path, plhg_config** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new plhg_config{plhg::RunConfig::load(path)};
  });
}

plhg_status plhg_config_parse(const char* json_text, plhg_config** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = new plhg_config{plhg::RunConfig::from_json_text(json_text)};
  });
}

plhg_status plhg_config_set(plhg_config* config, const char* key,
                            const char* value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    config->config.set(key, value);
  });
}

plhg_status plhg_config_to_json(const plhg_config* config, char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = dup_string(config->config.to_json());
  });
}

plhg_status plhg_config_metadata_json(const plhg_config* config, char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const plhg::RunConfig& c = config->config;
    nlohmann::json flags = nlohmann::json::object();
    for (double a : c.alpha_grid()) {
      flags[plhg::format_double(a)] = a < 1.0 && c.tau > 1.0 / a;
    }
    nlohmann::json meta = {
        {"library_version", plhg_version()},
        {"tau", c.tau},
        {"outside_tau_regime", flags},
        {"note",
         "outside_tau_regime marks alpha < 1 with tau > 1/alpha, where the "
         "n^tau kernel edge law does not apply"}};
    *out = dup_string(meta.dump(2));
  });
}

plhg_status plhg_config_out_dir(const plhg_config* config, char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = dup_string(config->config.out);
  });
}

plhg_status plhg_config_outside_tau_regime(const plhg_config* config,
                                           int* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const plhg::RunConfig& c = config->config;
    *out = c.alpha < 1.0 && c.tau > 1.0 / c.alpha;
  });
}

plhg_status plhg_config_shape(const plhg_config* config, int* m,
                              double* tau) {
  return guarded([&] {
    require(config, "config");
    if (m) *m = config->config.m;
    if (tau) *tau = config->config.tau;
  });
}

plhg_status plhg_config_alphas(const plhg_config* config, double* values,
                               size_t cap, size_t* count) {
  return guarded([&] {
    require(config, "config");
    require(count, "count");
    const std::vector<double> grid = config->config.alpha_grid();
    if (cap > 0) require(values, "values");
    for (std::size_t i = 0; i < grid.size() && i < cap; ++i) {
      values[i] = grid[i];
    }
    *count = grid.size();
  });
}

plhg_status plhg_config_statistics(const plhg_config* config,
                                   plhg_statistic* values, size_t cap,
                                   size_t* count) {
  return guarded([&] {
    require(config, "config");
    require(count, "count");
    const auto& stats = config->config.statistics;
    if (cap > 0) require(values, "values");
    for (std::size_t i = 0; i < stats.size() && i < cap; ++i) {
      values[i] = stats[i] == plhg::Statistic::Edges ? PLHG_STAT_EDGES
                                                     : PLHG_STAT_LOOSE2;
    }
    *count = stats.size();
  });
}

void plhg_config_free(plhg_config* config) { delete config; }

plhg_status plhg_sample(const plhg_config* config, plhg_weights** weights,
                        plhg_hypergraph** hypergraph) {
  return guarded([&] {
    require(config, "config");
    require(weights, "weights");
    require(hypergraph, "hypergraph");
    const plhg::ModelConfig model = config->config.model();
    plhg::RandomStream wrng = plhg::weight_stream(model.seed);
    plhg::WeightAssignment w = plhg::sample_weights(model, wrng);
    plhg::RandomStream erng = plhg::edge_stream(model.seed);
    plhg::Hypergraph h = plhg::sample_hypergraph(model, w, erng);
    auto* wh = new plhg_weights{std::move(w)};
    try {
      *hypergraph = new plhg_hypergraph{std::move(h)};
    } catch (...) {
      delete wh;
      throw;
    }
    *weights = wh;
  });
}

plhg_status plhg_sample_with_weights(const plhg_config* config,
                                     const plhg_weights* weights,
                                     plhg_hypergraph** out) {
  return guarded([&] {
    require(config, "config");
    require(weights, "weights");
    require(out, "out");
    plhg::RunConfig c = config->config;
    c.n = weights->weights.size();
    const plhg::ModelConfig model = c.model();
    plhg::RandomStream rng = plhg::edge_stream(model.seed);
    *out = new plhg_hypergraph{
        plhg::sample_hypergraph(model, weights->weights, rng)};
  });
}

plhg_status plhg_weights_write(const plhg_weights* weights, const char* path) {
  return guarded([&] {
    require(weights, "weights");
    require(path, "path");
    plhg::write_weights(std::string(path), weights->weights);
  });
}

plhg_status plhg_weights_read(const char* path, plhg_weights** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new plhg_weights{plhg::read_weights(std::string(path))};
  });
}

plhg_status plhg_weights_size(const plhg_weights* weights, size_t* out) {
  return guarded([&] {
    require(weights, "weights");
    require(out, "out");
    *out = weights->weights.size();
  });
}

plhg_status plhg_weights_get(const plhg_weights* weights, size_t index,
                             double* out) {
  return guarded([&] {
    require(weights, "weights");
    require(out, "out");
    if (index >= weights->weights.size()) {
      plhg::fail(plhg::ErrorCode::InvalidArgument, "weight index out of range");
    }
    *out = weights->weights[index];
  });
}

void plhg_weights_free(plhg_weights* weights) { delete weights; }

plhg_status plhg_hypergraph_read(const char* path, plhg_hypergraph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new plhg_hypergraph{plhg::read_hypergraph(std::string(path))};
  });
}

plhg_status plhg_hypergraph_write(const plhg_hypergraph* h, const char* path) {
  return guarded([&] {
    require(h, "hypergraph");
    require(path, "path");
    plhg::write_hypergraph(std::string(path), h->graph);
  });
}

plhg_status plhg_hypergraph_info(const plhg_hypergraph* h, uint64_t* n,
                                 int* m, uint64_t* edge_count) {
  return guarded([&] {
    require(h, "hypergraph");
    if (n) *n = h->graph.n();
    if (m) *m = h->graph.m();
    if (edge_count) *edge_count = h->graph.edge_count();
  });
}

plhg_status plhg_hypergraph_edge(const plhg_hypergraph* h, uint64_t index,
                                 uint32_t* vertices) {
  return guarded([&] {
    require(h, "hypergraph");
    require(vertices, "vertices");
    if (index >= h->graph.edge_count()) {
      plhg::fail(plhg::ErrorCode::InvalidArgument, "edge index out of range");
    }
    const auto e = h->graph.edge(index);
    for (std::size_t i = 0; i < e.size(); ++i) vertices[i] = e[i] + 1;
  });
}

void plhg_hypergraph_free(plhg_hypergraph* h) { delete h; }

plhg_status plhg_count_motifs(const plhg_hypergraph* h, plhg_motifs* out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const plhg::MotifCounts counts = plhg::count_motifs(h->graph);
    out->edge_count = counts.edge_count;
    out->has_loose2 = counts.loose2_count.has_value();
    out->loose2_count = split(counts.loose2_count.value_or(0));
  });
}

plhg_status plhg_pair_degree_csv(const plhg_hypergraph* h, char** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    plhg::Loose2Accumulator acc(h->graph.n(), h->graph.m());
    for (std::uint64_t i = 0; i < h->graph.edge_count(); ++i) {
      acc.add(h->graph.edge(i));
    }
    std::ostringstream csv;
    csv << "pair_degree,pairs\n";
    for (const auto& [d, count] : acc.pair_degree_histogram()) {
      csv << d << ',' << count << '\n';
    }
    *out = dup_string(csv.str());
  });
}

plhg_status plhg_predict(const plhg_config* config, plhg_statistic statistic,
                         double alpha, plhg_prediction* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const plhg::RunConfig& c = config->config;
    const plhg::PowerLawParams params = c.params().with_alpha(alpha);
    plhg::AsymptoticPrediction p;
    if (statistic_of(statistic) == plhg::Statistic::Edges) {
      p = c.tau == 1.0 ? plhg::predict_edge_count(params, c.m, c.n)
                       : plhg::predict_edge_count_tau(params, c.m, c.tau, c.n);
    } else {
      if (c.m != 3 || c.tau != 1.0) {
        plhg::fail(plhg::ErrorCode::Domain,
                   "loose 2-cycle predictions need m = 3 and tau = 1");
      }
      p = plhg::predict_loose2(params, c.n);
    }
    out->n_exponent = p.n_exponent;
    out->log_exponent = p.log_exponent;
    out->has_constant = p.constant.has_value();
    out->constant = p.constant.value_or(0.0);
    out->has_upper_bound = p.upper_bound_constant.has_value();
    out->upper_bound_constant = p.upper_bound_constant.value_or(0.0);
    out->concentration = p.concentration;
    out->regime = plhg::to_string(p.regime);
  });
}

plhg_status plhg_experiment_run(const plhg_config* config,
                                plhg_experiment** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const plhg::ExperimentConfig ec = config->config.experiment();
    auto e = std::make_unique<plhg_experiment>();
    e->config = config->config;
    e->m = ec.m;
    e->tau = ec.tau;
    e->records = plhg::run_experiment(ec, config->config.workers);
    *out = e.release();
  });
}

plhg_status plhg_experiment_load(const plhg_config* config,
                                 const char* records_path,
                                 plhg_experiment** out) {
  return guarded([&] {
    require(config, "config");
    require(records_path, "records_path");
    require(out, "out");
    std::ifstream in(records_path);
    if (!in) {
      plhg::fail(plhg::ErrorCode::Io,
                 std::string("cannot open '") + records_path + "'");
    }
    plhg::RecordsFile file = plhg::read_records_csv(in);
    auto e = std::make_unique<plhg_experiment>();
    e->config = config->config;
    e->config.m = file.m;
    e->config.tau = file.tau;
    e->m = file.m;
    e->tau = file.tau;
    e->records = std::move(file.records);
    *out = e.release();
  });
}

plhg_status plhg_experiment_compare(plhg_experiment* experiment) {
  return guarded([&] {
    require(experiment, "experiment");
    plhg_experiment& e = *experiment;
    const plhg::PowerLawParams params = e.config.params();
    std::vector<plhg::ComparisonRow> rows;
    for (plhg::Statistic s : e.config.statistics) {
      auto part = plhg::compare_to_theory(e.records, params, s, e.m, e.tau);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    e.rows = std::move(rows);
    e.compared = true;
  });
}

plhg_status plhg_experiment_record_count(const plhg_experiment* experiment,
                                         size_t* out) {
  return guarded([&] {
    require(experiment, "experiment");
    require(out, "out");
    *out = experiment->records.size();
  });
}

plhg_status plhg_experiment_write(const plhg_experiment* experiment,
                                  const char* dir) {
  return guarded([&] {
    require(experiment, "experiment");
    const plhg_experiment& e = *experiment;
    const std::filesystem::path path = prepare_dir(dir);
    write_file(path / "records.csv", [&](std::ostream& out) {
      plhg::write_records_csv(out, e.records, e.m, e.tau);
    });
    write_file(path / "cells.csv", [&](std::ostream& out) {
      bool header = true;
      for (plhg::Statistic s : e.config.statistics) {
        std::ostringstream part;
        plhg::write_cells_csv(part, plhg::summarize(e.records, s), s);
        std::string text = part.str();
        if (!header) text = text.substr(text.find('\n') + 1);
        out << text;
        header = false;
      }
    });
    if (e.compared) {
      write_file(path / "report.csv",
                 [&](std::ostream& out) { out << report_csv(e); });
      write_file(path / "slopes.csv", [&](std::ostream& out) {
        plhg::write_slopes_csv(out, e.rows);
      });
    }
  });
}

plhg_status plhg_experiment_records_csv(const plhg_experiment* experiment,
                                        char** out) {
  return guarded([&] {
    require(experiment, "experiment");
    require(out, "out");
    std::ostringstream csv;
    plhg::write_records_csv(csv, experiment->records, experiment->m,
                            experiment->tau);
    *out = dup_string(csv.str());
  });
}

plhg_status plhg_experiment_report_csv(const plhg_experiment* experiment,
                                       char** out) {
  return guarded([&] {
    require(experiment, "experiment");
    require(out, "out");
    if (!experiment->compared) {
      plhg::fail(plhg::ErrorCode::InvalidArgument, "experiment not compared");
    }
    *out = dup_string(report_csv(*experiment));
  });
}

plhg_status plhg_experiment_verdict(const plhg_experiment* experiment,
                                    int* all_pass) {
  return guarded([&] {
    require(experiment, "experiment");
    require(all_pass, "all_pass");
    if (!experiment->compared) {
      plhg::fail(plhg::ErrorCode::InvalidArgument, "experiment not compared");
    }
    bool pass = true;
    for (const auto& row : experiment->rows) pass = pass && row.pass();
    *all_pass = pass;
  });
}

void plhg_experiment_free(plhg_experiment* experiment) { delete experiment; }

plhg_status plhg_er_run(const plhg_config* config, plhg_er_report** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const plhg::ErConfig ec = config->config.er();
    *out = new plhg_er_report{
        plhg::er_comparison(ec, config->config.workers)};
  });
}

plhg_status plhg_er_write(const plhg_er_report* report, const char* dir) {
  return guarded([&] {
    require(report, "report");
    const std::filesystem::path path = prepare_dir(dir);
    write_file(path / "er_report.csv", [&](std::ostream& out) {
      plhg::write_er_report_csv(out, report->report);
    });
    write_file(path / "er_slopes.csv", [&](std::ostream& out) {
      plhg::write_er_slopes_csv(out, report->report);
    });
  });
}

plhg_status plhg_er_report_csv(const plhg_er_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    std::ostringstream csv;
    plhg::write_er_report_csv(csv, report->report);
    *out = dup_string(csv.str());
  });
}

plhg_status plhg_er_verdict(const plhg_er_report* report, int* pass) {
  return guarded([&] {
    require(report, "report");
    require(pass, "pass");
    *pass = report->report.pass();
  });
}

void plhg_er_report_free(plhg_er_report* report) { delete report; }

}  // extern "C"
