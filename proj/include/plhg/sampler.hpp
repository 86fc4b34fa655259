#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plhg/hypergraph.hpp"
#include "plhg/powerlaw.hpp"
#include "plhg/random.hpp"

namespace plhg {

enum class SamplerMethod { Naive, Skip };

const char* to_string(SamplerMethod method);
SamplerMethod parse_method(const std::string& name);

/// Full generative specification of one H_m(n, alpha) draw with the n^tau
/// kernel p = x / (n^tau + x), x = product of the tuple's weights.
struct ModelConfig {
  std::uint64_t n = 0;
  int m = 3;
  double tau = 1.0;
  PowerLawParams params = PowerLawParams::pure_pareto(2.0);
  std::uint64_t seed = 0;
  SamplerMethod method = SamplerMethod::Skip;

  /// Throws Config errors for n < m, m < 2, tau <= 0, n >= 2^32.
  void validate() const;

  /// alpha < 1 and tau > 1/alpha: accepted, but the edge-count predictor
  /// for the n^tau kernel does not apply.
  bool outside_tau_regime() const;
};

/// Vertex weights W_1..W_n.
class WeightAssignment {
 public:
  enum class Provenance { Sampled, Supplied };

  /// Every entry must be finite and > 0.
  static WeightAssignment supplied(std::vector<double> weights);
  static WeightAssignment sampled(std::vector<double> weights,
                                  std::uint64_t seed);

  std::span<const double> values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  Provenance provenance() const { return provenance_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

 private:
  WeightAssignment(std::vector<double> weights, Provenance provenance,
                   std::optional<std::uint64_t> seed);

  std::vector<double> weights_;
  Provenance provenance_;
  std::optional<std::uint64_t> seed_;
};

void write_weights(std::ostream& out, const WeightAssignment& weights);
void write_weights(const std::string& path, const WeightAssignment& weights);
WeightAssignment read_weights(std::istream& in);
WeightAssignment read_weights(const std::string& path);

/// n iid draws via sample_weight, consumed in index order.
WeightAssignment sample_weights(const ModelConfig& config, RandomStream& rng);

/// x / (n^tau + x) for a product x that may be +inf.
inline double kernel_probability(double product, double n_tau) {
  if (std::isinf(product)) return 1.0;
  return product / (n_tau + product);
}

/// Inclusion probability of one tuple, evaluated in log space so products of
/// huge weights saturate at 1 instead of producing inf/inf.
double edge_probability(const WeightAssignment& weights,
                        std::span<const Vertex> tuple, std::uint64_t n,
                        double tau);

/// Receives accepted edges as canonical (strictly increasing) tuples.
class EdgeSink {
 public:
  virtual ~EdgeSink() = default;
  virtual void on_edge(std::span<const Vertex> tuple) = 0;
};

struct SamplerCounters {
  std::uint64_t candidates = 0;  // probability evaluations
  std::uint64_t accepted = 0;
};

/// Largest candidate count the naive sampler will enumerate.
inline constexpr double kNaiveCandidateLimit = 1e8;

/// Visits every m-subset in colexicographic order and draws one uniform per
/// subset. Throws Guard if C(n, m) > kNaiveCandidateLimit.
void stream_naive(const ModelConfig& config, const WeightAssignment& weights,
                  RandomStream& rng, EdgeSink& sink,
                  SamplerCounters* counters = nullptr);

/// Envelope-and-skip sampler, m in {2,3,4}. Same distribution as
/// stream_naive, different draw order (prefix-major over weights sorted in
/// decreasing order).
void stream_skip(const ModelConfig& config, const WeightAssignment& weights,
                 RandomStream& rng, EdgeSink& sink,
                 SamplerCounters* counters = nullptr);

/// Dispatches on config.method.
void stream_hypergraph(const ModelConfig& config,
                       const WeightAssignment& weights, RandomStream& rng,
                       EdgeSink& sink, SamplerCounters* counters = nullptr);

Hypergraph sample_hypergraph_naive(const ModelConfig& config,
                                   const WeightAssignment& weights,
                                   RandomStream& rng);
Hypergraph sample_hypergraph_skip(const ModelConfig& config,
                                  const WeightAssignment& weights,
                                  RandomStream& rng,
                                  SamplerCounters* counters = nullptr);
Hypergraph sample_hypergraph(const ModelConfig& config,
                             const WeightAssignment& weights,
                             RandomStream& rng);

/// Erdos-Renyi m-uniform hypergraph: every m-subset independently with
/// probability p, drawn by geometric skips over the colex rank.
void stream_erdos_renyi(std::uint64_t n, int m, double p, RandomStream& rng,
                        EdgeSink& sink);
Hypergraph sample_erdos_renyi(std::uint64_t n, int m, double p,
                              RandomStream& rng);

/// Binomial coefficient in long double (exact up to 2^64).
long double binomial(std::uint64_t n, std::uint64_t k);

}  // namespace plhg
