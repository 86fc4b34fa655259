#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plhg/powerlaw.hpp"

namespace plhg {

enum class Statistic { Edges, Loose2 };

const char* to_string(Statistic statistic);
Statistic parse_statistic(const std::string& name);

enum class Regime {
  EdgeSupercritical,  // alpha > 1
  EdgeCritical,       // alpha = 1
  EdgeSubcritical,    // alpha < 1 (any admissible tau)
  Loose2AlphaGT2,
  Loose2AlphaEQ2,
  Loose2Mid,          // alpha < 2, alpha != 1
  Loose2AlphaEQ1,
};

const char* to_string(Regime regime);

/// Leading-order growth S(n) ~ constant * n^n_exponent * (log n)^log_exponent,
/// natural log throughout. `constant` is absent wherever only existence of a
/// positive constant is known.
struct AsymptoticPrediction {
  double n_exponent = 0.0;
  double log_exponent = 0.0;
  std::optional<double> constant;
  /// Leading term evaluated at the requested n (present iff constant is,
  /// for the kernel-exponent form it uses C(n, m) instead of n^m / m!).
  std::optional<double> leading_value;
  /// Upper-bound constant / value (loose 2-cycles, alpha > 2 only).
  std::optional<double> upper_bound_constant;
  std::optional<double> upper_bound_value;
  /// S = E(S)(1 + o_p(1)) is known for this regime.
  bool concentration = false;
  Regime regime = Regime::EdgeSupercritical;
};

/// Hyperedge count. alpha > 1: (m-1, 0, E(W)^m / m!); alpha = 1: (m-1, m,
/// absent); alpha < 1: (m-alpha, m-1, pi alpha^m lambda^m / (sin(alpha pi)
/// m! (m-1)!)). m >= 2, and m in {2,3,4} when alpha <= 1.
AsymptoticPrediction predict_edge_count(const PowerLawParams& params, int m,
                                        std::uint64_t n);

/// Edge constant for the regimes that have one; throws Domain at alpha = 1.
double edge_count_constant(const PowerLawParams& params, int m);

/// n^tau kernel, alpha < 1, tau <= 1/alpha, m in {2,3,4}. Leading value
///   K C(n,m) n^(-alpha tau) (log n)^(m-1),
///   K = pi alpha^m tau^(m-1) lambda^m / (sin(alpha pi) (m-1)!).
/// `constant` is K / m!, the coefficient of n^(m - alpha tau) (log n)^(m-1).
AsymptoticPrediction predict_edge_count_tau(const PowerLawParams& params,
                                            int m, double tau,
                                            std::uint64_t n);

/// Expected loose 2-cycle count for m = 3. Exponents per regime:
/// alpha > 2: (2, 0); alpha = 2: (2, 2); alpha < 2, != 1: (4 - alpha, 1);
/// alpha = 1: (3, 2). No closed-form constants. For alpha > 2 the upper
/// bound 6 C(n,4) E(W)^2 E(W^2)^2 / n^2 is exposed, with constant
/// E(W)^2 E(W^2)^2 / 4.
AsymptoticPrediction predict_loose2(const PowerLawParams& params,
                                    std::uint64_t n);

/// 6 C(n,4) p^2: expected loose 2-cycles in the 3-uniform Erdos-Renyi
/// hypergraph. p in [0, 1].
double er_loose2_expectation(std::uint64_t n, double p);

struct SlopePair {
  double n_exponent;
  double log_exponent;
};

/// Exponent pair of the relevant predictor (tau != 1 routes edges through
/// the kernel-exponent form; loose 2-cycles require m = 3 and tau = 1).
SlopePair theoretical_slopes(const PowerLawParams& params, Statistic statistic,
                             int m, double tau = 1.0);

}  // namespace plhg
