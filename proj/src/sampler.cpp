#include "plhg/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "plhg/error.hpp"

namespace plhg {

const char* to_string(SamplerMethod method) {
  return method == SamplerMethod::Naive ? "naive" : "skip";
}

SamplerMethod parse_method(const std::string& name) {
  if (name == "naive") return SamplerMethod::Naive;
  if (name == "skip") return SamplerMethod::Skip;
  fail(ErrorCode::Config,
       "unknown sampler method '" + name + "' (expected naive or skip)");
}

void ModelConfig::validate() const {
  if (m < 2) fail(ErrorCode::Config, "m must be >= 2");
  if (n < static_cast<std::uint64_t>(m)) {
    fail(ErrorCode::Config, "n must be >= m (n = " + std::to_string(n) +
                                ", m = " + std::to_string(m) + ")");
  }
  if (n > 0xffffffffULL) fail(ErrorCode::Config, "n must fit in 32 bits");
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    fail(ErrorCode::Config, "tau must be finite and > 0");
  }
}

bool ModelConfig::outside_tau_regime() const {
  return params.alpha() < 1.0 && tau > 1.0 / params.alpha();
}

WeightAssignment::WeightAssignment(std::vector<double> weights,
                                   Provenance provenance,
                                   std::optional<std::uint64_t> seed)
    : weights_(std::move(weights)), provenance_(provenance), seed_(seed) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      fail(ErrorCode::InvalidArgument,
           "weight " + std::to_string(i + 1) + " must be finite and > 0");
    }
  }
}

WeightAssignment WeightAssignment::supplied(std::vector<double> weights) {
  return WeightAssignment(std::move(weights), Provenance::Supplied,
                          std::nullopt);
}

WeightAssignment WeightAssignment::sampled(std::vector<double> weights,
                                           std::uint64_t seed) {
  return WeightAssignment(std::move(weights), Provenance::Sampled, seed);
}

void write_weights(std::ostream& out, const WeightAssignment& weights) {
  char buf[32];
  for (double w : weights.values()) {
    std::snprintf(buf, sizeof buf, "%.17g", w);
    out << buf << '\n';
  }
}

void write_weights(const std::string& path, const WeightAssignment& weights) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  write_weights(out, weights);
  if (!out) fail(ErrorCode::Io, "failed writing '" + path + "'");
}

WeightAssignment read_weights(std::istream& in) {
  std::vector<double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    double w = 0.0;
    std::string extra;
    if (!(row >> w) || (row >> extra)) {
      fail(ErrorCode::Parse,
           "weights line " + std::to_string(line_no) + ": expected one number");
    }
    weights.push_back(w);
  }
  try {
    return WeightAssignment::supplied(std::move(weights));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

WeightAssignment read_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  return read_weights(in);
}

WeightAssignment sample_weights(const ModelConfig& config, RandomStream& rng) {
  std::vector<double> weights(config.n);
  for (auto& w : weights) w = sample_weight(config.params, rng);
  return WeightAssignment::sampled(std::move(weights), config.seed);
}

long double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0L;
  k = std::min(k, n - k);
  long double c = 1.0L;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

double edge_probability(const WeightAssignment& weights,
                        std::span<const Vertex> tuple, std::uint64_t n,
                        double tau) {
  if (tuple.empty()) fail(ErrorCode::InvalidArgument, "empty tuple");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= weights.size()) {
      fail(ErrorCode::InvalidArgument, "tuple index out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (tuple[i] == tuple[j]) {
        fail(ErrorCode::InvalidArgument, "tuple repeats a vertex");
      }
    }
  }
  double log_product = 0.0;
  for (Vertex v : tuple) log_product += std::log(weights[v]);
  const double log_kernel = tau * std::log(static_cast<double>(n));
  if (log_product - log_kernel > 50.0) {
    return 1.0 / (1.0 + std::exp(log_kernel - log_product));
  }
  double product = 1.0;
  for (Vertex v : tuple) product *= weights[v];
  return product / (std::pow(static_cast<double>(n), tau) + product);
}

namespace {

void check_weights(const ModelConfig& config, const WeightAssignment& weights) {
  config.validate();
  if (weights.size() != config.n) {
    fail(ErrorCode::InvalidArgument,
         "weight count " + std::to_string(weights.size()) +
             " differs from n = " + std::to_string(config.n));
  }
}

// Geometric number of failures before the first success, success
// probability q in (0, 1). Returns a value >= limit when the walk should stop.
std::uint64_t geometric_skip(RandomStream& rng, double q, std::uint64_t limit) {
  const double skip = std::floor(std::log(rng.uniform()) / std::log1p(-q));
  if (!(skip < static_cast<double>(limit))) return limit;
  return static_cast<std::uint64_t>(skip);
}

class SkipWalker {
 public:
  SkipWalker(const ModelConfig& config, const WeightAssignment& weights,
             RandomStream& rng, EdgeSink& sink, SamplerCounters* counters)
      : n_(config.n),
        m_(config.m),
        n_tau_(std::pow(static_cast<double>(config.n), config.tau)),
        rng_(rng),
        sink_(sink),
        counters_(counters),
        order_(config.n) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return weights[a] > weights[b];
    });
    sorted_.resize(n_);
    for (std::uint64_t i = 0; i < n_; ++i) sorted_[i] = weights[order_[i]];
  }

  void run() { descend(0, 0, 1.0); }

 private:
  // Chooses sorted position `level` of the prefix, starting at `start`.
  void descend(int level, std::uint64_t start, double product) {
    if (level == m_ - 1) {
      walk(start, product);
      return;
    }
    const std::uint64_t last = n_ - static_cast<std::uint64_t>(m_ - level);
    for (std::uint64_t s = start; s <= last; ++s) {
      prefix_[level] = s;
      descend(level + 1, s + 1, product * sorted_[s]);
    }
  }

  // Walks the final coordinate over sorted positions [start, n). Products
  // are non-increasing along the walk, so the envelope of the last landing
  // bounds every later candidate.
  void walk(std::uint64_t start, double prefix_product) {
    std::uint64_t j = start;
    double envelope = envelope_at(prefix_product * sorted_[j]);
    while (j < n_) {
      if (envelope < 1.0) {
        if (!(envelope > 0.0)) return;
        j += geometric_skip(rng_, envelope, n_ - j);
        if (j >= n_) return;
      }
      const double x = prefix_product * sorted_[j];
      const double p = kernel_probability(x, n_tau_);
      if (counters_) ++counters_->candidates;
      if (rng_.uniform() * envelope <= p) emit(j);
      envelope = envelope_at(x);
      ++j;
    }
  }

  double envelope_at(double x) const {
    if (std::isinf(x)) return 1.0;
    return std::min(1.0, x / n_tau_);
  }

  void emit(std::uint64_t last) {
    std::array<Vertex, 4> tuple{};
    for (int k = 0; k < m_ - 1; ++k) tuple[k] = order_[prefix_[k]];
    tuple[m_ - 1] = order_[last];
    std::sort(tuple.begin(), tuple.begin() + m_);
    if (counters_) ++counters_->accepted;
    sink_.on_edge(std::span<const Vertex>(tuple.data(), m_));
  }

  std::uint64_t n_;
  int m_;
  double n_tau_;
  RandomStream& rng_;
  EdgeSink& sink_;
  SamplerCounters* counters_;
  std::vector<Vertex> order_;
  std::vector<double> sorted_;
  std::array<std::uint64_t, 3> prefix_{};
};

class BuildingSink final : public EdgeSink {
 public:
  BuildingSink(std::uint64_t n, int m) : builder_(n, m) {}
  void on_edge(std::span<const Vertex> tuple) override { builder_.add(tuple); }
  Hypergraph build() && { return std::move(builder_).build(); }

 private:
  HypergraphBuilder builder_;
};

}  // namespace

void stream_naive(const ModelConfig& config, const WeightAssignment& weights,
                  RandomStream& rng, EdgeSink& sink,
                  SamplerCounters* counters) {
  check_weights(config, weights);
  const long double candidates = binomial(config.n, config.m);
  if (candidates > static_cast<long double>(kNaiveCandidateLimit)) {
    std::ostringstream msg;
    msg << "naive sampler guard: C(" << config.n << ", " << config.m
        << ") = " << static_cast<double>(candidates)
        << " candidates exceeds 1e8; use --method skip";
    fail(ErrorCode::Guard, msg.str());
  }
  const int m = config.m;
  const std::uint64_t n = config.n;
  const double n_tau = std::pow(static_cast<double>(n), config.tau);
  std::vector<Vertex> c(m);
  std::iota(c.begin(), c.end(), Vertex{0});
  while (true) {
    double x = 1.0;
    for (Vertex v : c) x *= weights[v];
    const double p = kernel_probability(x, n_tau);
    if (counters) ++counters->candidates;
    if (rng.uniform() <= p) {
      if (counters) ++counters->accepted;
      sink.on_edge(c);
    }
    // Colex successor: bump the lowest coordinate that has room.
    int j = 0;
    while (j < m - 1 && c[j] + 1 == c[j + 1]) ++j;
    if (j == m - 1 && c[j] + 1 == n) break;
    ++c[j];
    for (int i = 0; i < j; ++i) c[i] = static_cast<Vertex>(i);
  }
}

void stream_skip(const ModelConfig& config, const WeightAssignment& weights,
                 RandomStream& rng, EdgeSink& sink, SamplerCounters* counters) {
  check_weights(config, weights);
  if (config.m < 2 || config.m > 4) {
    fail(ErrorCode::Config,
         "skip sampler supports m in {2,3,4}; use --method naive");
  }
  SkipWalker(config, weights, rng, sink, counters).run();
}

void stream_hypergraph(const ModelConfig& config,
                       const WeightAssignment& weights, RandomStream& rng,
                       EdgeSink& sink, SamplerCounters* counters) {
  if (config.method == SamplerMethod::Naive) {
    stream_naive(config, weights, rng, sink, counters);
  } else {
    stream_skip(config, weights, rng, sink, counters);
  }
}

Hypergraph sample_hypergraph_naive(const ModelConfig& config,
                                   const WeightAssignment& weights,
                                   RandomStream& rng) {
  BuildingSink sink(config.n, config.m);
  stream_naive(config, weights, rng, sink);
  return std::move(sink).build();
}

Hypergraph sample_hypergraph_skip(const ModelConfig& config,
                                  const WeightAssignment& weights,
                                  RandomStream& rng,
                                  SamplerCounters* counters) {
  BuildingSink sink(config.n, config.m);
  stream_skip(config, weights, rng, sink, counters);
  return std::move(sink).build();
}

Hypergraph sample_hypergraph(const ModelConfig& config,
                             const WeightAssignment& weights,
                             RandomStream& rng) {
  BuildingSink sink(config.n, config.m);
  stream_hypergraph(config, weights, rng, sink);
  return std::move(sink).build();
}

void stream_erdos_renyi(std::uint64_t n, int m, double p, RandomStream& rng,
                        EdgeSink& sink) {
  if (m < 2 || n < static_cast<std::uint64_t>(m)) {
    fail(ErrorCode::InvalidArgument, "Erdos-Renyi needs m >= 2 and n >= m");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "edge probability must lie in [0, 1]");
  }
  const long double total_ld = binomial(n, m);
  if (total_ld >= 9.2e18L) {
    fail(ErrorCode::Guard, "C(n, m) exceeds the 64-bit rank range");
  }
  const auto total = static_cast<std::uint64_t>(total_ld);
  if (p == 0.0 || total == 0) return;

  // choose[k][c] = C(c, k) for the colex unranking below.
  std::vector<std::vector<std::uint64_t>> choose(
      m + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::uint64_t c = 0; c <= n; ++c) {
    choose[0][c] = 1;
    for (int k = 1; k <= m && static_cast<std::uint64_t>(k) <= c; ++k) {
      choose[k][c] = choose[k - 1][c - 1] + choose[k][c - 1];
    }
  }
  std::vector<Vertex> tuple(m);
  const double log_q = p < 1.0 ? std::log1p(-p) : 0.0;
  bool first = true;
  std::uint64_t rank = 0;  // next candidate
  while (true) {
    const std::uint64_t remaining = total - rank;
    std::uint64_t skip = 0;
    if (p < 1.0) {
      const double g = std::floor(std::log(rng.uniform()) / log_q);
      skip = g < static_cast<double>(remaining) ? static_cast<std::uint64_t>(g)
                                                : remaining;
    }
    if (skip >= remaining) break;
    rank += skip;
    // Combinatorial number system: largest c with C(c, k) <= r, k = m..1.
    // Ranks only grow, so while the higher coordinates are unchanged a
    // coordinate can only move up from its previous value; scan a few steps
    // before falling back to bisection.
    std::uint64_t r = rank;
    std::uint64_t upper = n;
    bool moved = first;
    for (int k = m; k >= 1; --k) {
      std::uint64_t lo = static_cast<std::uint64_t>(k - 1), hi = upper;
      if (!moved) {
        const std::uint64_t prev = tuple[k - 1];
        std::uint64_t c = prev;
        for (int step = 0; step < 8 && c + 1 < upper && choose[k][c + 1] <= r;
             ++step) {
          ++c;
        }
        if (c + 1 >= upper || choose[k][c + 1] > r) {
          lo = hi = c;
        } else {
          lo = c;
        }
        moved = c != prev;
      }
      while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (choose[k][mid] <= r) lo = mid; else hi = mid;
      }
      tuple[k - 1] = static_cast<Vertex>(lo);
      r -= choose[k][lo];
      upper = lo;
    }
    first = false;
    sink.on_edge(tuple);
    ++rank;
  }
}

Hypergraph sample_erdos_renyi(std::uint64_t n, int m, double p,
                              RandomStream& rng) {
  BuildingSink sink(n, m);
  stream_erdos_renyi(n, m, p, rng, sink);
  return std::move(sink).build();
}

}  // namespace plhg
