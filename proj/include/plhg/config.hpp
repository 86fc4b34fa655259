#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plhg/experiment.hpp"
#include "plhg/powerlaw.hpp"
#include "plhg/sampler.hpp"
#include "plhg/theory.hpp"

namespace plhg {

/// Fully resolved run configuration: what the config file says, with
/// command-line overrides applied on top. See configs/example.jsonc for the
/// document format.
struct RunConfig {
  // model
  std::uint64_t n = 1000;
  int m = 3;
  double tau = 1.0;
  double alpha = 2.0;
  std::optional<double> lambda;  // derived for pure_pareto when absent
  double x0 = 1.0;
  Body body = Body::PurePareto;
  std::uint64_t seed = 1;
  SamplerMethod method = SamplerMethod::Skip;

  // experiment grid
  std::vector<double> alphas;  // empty: {alpha}
  std::vector<std::uint64_t> ns;
  std::uint32_t reps = 10;
  std::vector<Statistic> statistics{Statistic::Edges};
  unsigned workers = 1;
  bool timing = true;

  // Erdos-Renyi contrast
  std::vector<std::uint64_t> er_ns;
  std::uint32_t er_reps = 200;
  double er_c = 1.0;
  double er_alpha = 1.0;

  std::string out = "plhg_out";

  /// Parses a JSON document (comments allowed). Unknown keys and
  /// ill-typed values are Config errors.
  static RunConfig from_json_text(const std::string& text);
  static RunConfig load(const std::string& path);

  /// Applies one override. Keys are the top-level document keys plus
  /// "alphas", "ns", "er.ns", "er.reps", "er.c", "er.alpha"; list values
  /// are comma separated. Setting "alpha" replaces the alpha grid.
  void set(const std::string& key, const std::string& value);

  std::string to_json() const;

  PowerLawParams params() const;
  ModelConfig model() const;
  ExperimentConfig experiment() const;
  ErConfig er() const;
  std::vector<double> alpha_grid() const;
};

}  // namespace plhg
