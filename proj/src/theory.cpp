#include "plhg/theory.hpp"

#include <cmath>
#include <numbers>

#include "plhg/error.hpp"
#include "plhg/sampler.hpp"

namespace plhg {
namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void require_small_m(int m, const char* what) {
  if (m < 2 || m > 4) {
    fail(ErrorCode::Domain, std::string(what) +
                                " is only established for m in {2,3,4}, got m = " +
                                std::to_string(m));
  }
}

// pi alpha^m lambda^m / (sin(alpha pi) (m-1)!), alpha in (0, 1).
double heavy_tail_factor(const PowerLawParams& params, int m) {
  const double a = params.alpha();
  const double s = std::sin(a * std::numbers::pi);
  if (!(s > 0.0)) fail(ErrorCode::Domain, "sin(alpha pi) must be positive");
  return std::numbers::pi * std::pow(a, m) * std::pow(params.lambda(), m) /
         (s * factorial(m - 1));
}

}  // namespace

const char* to_string(Statistic statistic) {
  return statistic == Statistic::Edges ? "edges" : "loose2";
}

Statistic parse_statistic(const std::string& name) {
  if (name == "edges") return Statistic::Edges;
  if (name == "loose2") return Statistic::Loose2;
  fail(ErrorCode::Config,
       "unknown statistic '" + name + "' (expected edges or loose2)");
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::EdgeSupercritical: return "EdgeSupercritical";
    case Regime::EdgeCritical: return "EdgeCritical";
    case Regime::EdgeSubcritical: return "EdgeSubcritical";
    case Regime::Loose2AlphaGT2: return "Loose2AlphaGT2";
    case Regime::Loose2AlphaEQ2: return "Loose2AlphaEQ2";
    case Regime::Loose2Mid: return "Loose2Mid";
    case Regime::Loose2AlphaEQ1: return "Loose2AlphaEQ1";
  }
  return "?";
}

AsymptoticPrediction predict_edge_count(const PowerLawParams& params, int m,
                                        std::uint64_t n) {
  if (m < 2) fail(ErrorCode::Domain, "edge-count prediction needs m >= 2");
  const double a = params.alpha();
  const double nd = static_cast<double>(n);
  AsymptoticPrediction pred;
  pred.concentration = true;
  if (a > 1.0) {
    pred.regime = Regime::EdgeSupercritical;
    pred.n_exponent = m - 1;
    pred.log_exponent = 0.0;
    pred.constant = std::pow(mean(params), m) / factorial(m);
    pred.leading_value = *pred.constant * std::pow(nd, m - 1);
    return pred;
  }
  require_small_m(m, "the alpha <= 1 edge-count law");
  if (a == 1.0) {
    pred.regime = Regime::EdgeCritical;
    pred.n_exponent = m - 1;
    pred.log_exponent = m;
    return pred;
  }
  pred.regime = Regime::EdgeSubcritical;
  pred.n_exponent = m - a;
  pred.log_exponent = m - 1;
  pred.constant = heavy_tail_factor(params, m) / factorial(m);
  pred.leading_value =
      *pred.constant * std::pow(nd, m - a) * std::pow(std::log(nd), m - 1);
  return pred;
}

double edge_count_constant(const PowerLawParams& params, int m) {
  if (params.alpha() == 1.0) {
    fail(ErrorCode::Domain,
         "no closed-form edge constant at alpha = 1 (only existence is known)");
  }
  return *predict_edge_count(params, m, 2).constant;
}

AsymptoticPrediction predict_edge_count_tau(const PowerLawParams& params,
                                            int m, double tau,
                                            std::uint64_t n) {
  const double a = params.alpha();
  if (!(a < 1.0)) {
    fail(ErrorCode::Domain, "kernel-exponent edge law needs alpha < 1");
  }
  if (!(tau > 0.0)) fail(ErrorCode::Domain, "tau must be > 0");
  if (tau * a > 1.0 + 1e-12) {
    fail(ErrorCode::Domain, "kernel-exponent edge law needs tau <= 1/alpha");
  }
  require_small_m(m, "the kernel-exponent edge law");
  const double nd = static_cast<double>(n);
  const double k = heavy_tail_factor(params, m) * std::pow(tau, m - 1);
  AsymptoticPrediction pred;
  pred.regime = Regime::EdgeSubcritical;
  pred.concentration = true;
  pred.n_exponent = m - a * tau;
  pred.log_exponent = m - 1;
  pred.constant = k / factorial(m);
  pred.leading_value = k * static_cast<double>(binomial(n, m)) *
                       std::pow(nd, -a * tau) * std::pow(std::log(nd), m - 1);
  return pred;
}

AsymptoticPrediction predict_loose2(const PowerLawParams& params,
                                    std::uint64_t n) {
  const double a = params.alpha();
  AsymptoticPrediction pred;
  pred.concentration = a > 3.0 || a <= 1.0;
  if (a > 2.0) {
    pred.regime = Regime::Loose2AlphaGT2;
    pred.n_exponent = 2.0;
    pred.log_exponent = 0.0;
    const double ew = mean(params), ew2 = second_moment(params);
    const double moments = ew * ew * ew2 * ew2;
    const double nd = static_cast<double>(n);
    pred.upper_bound_constant = moments / 4.0;
    pred.upper_bound_value =
        6.0 * static_cast<double>(binomial(n, 4)) * moments / (nd * nd);
  } else if (a == 2.0) {
    pred.regime = Regime::Loose2AlphaEQ2;
    pred.n_exponent = 2.0;
    pred.log_exponent = 2.0;
  } else if (a == 1.0) {
    pred.regime = Regime::Loose2AlphaEQ1;
    pred.n_exponent = 3.0;
    pred.log_exponent = 2.0;
  } else {
    pred.regime = Regime::Loose2Mid;
    pred.n_exponent = 4.0 - a;
    pred.log_exponent = 1.0;
  }
  return pred;
}

double er_loose2_expectation(std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "edge probability must lie in [0, 1]");
  }
  return 6.0 * static_cast<double>(binomial(n, 4)) * p * p;
}

SlopePair theoretical_slopes(const PowerLawParams& params, Statistic statistic,
                             int m, double tau) {
  AsymptoticPrediction pred;
  if (statistic == Statistic::Edges) {
    pred = tau == 1.0 ? predict_edge_count(params, m, 2)
                      : predict_edge_count_tau(params, m, tau, 2);
  } else {
    if (m != 3) {
      fail(ErrorCode::Domain, "loose 2-cycle growth is only known for m = 3");
    }
    if (tau != 1.0) {
      fail(ErrorCode::Domain, "loose 2-cycle growth is only known for tau = 1");
    }
    pred = predict_loose2(params, 2);
  }
  return {pred.n_exponent, pred.log_exponent};
}

}  // namespace plhg
