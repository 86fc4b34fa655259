#pragma once

#include "plhg/random.hpp"

namespace plhg {

/// Law of W below the tail threshold x0. The tail itself,
/// P(W > x) = lambda * x^-alpha for x >= x0, is shared by both.
enum class Body {
  PurePareto,   // no mass below x0; requires lambda = x0^alpha
  UniformBody,  // remaining mass 1 - lambda*x0^-alpha spread uniformly on [0, x0)
};

/// Validated power-law weight distribution. Only constructible through the
/// factories, so every instance satisfies alpha, lambda, x0 > 0 and
/// lambda * x0^-alpha <= 1.
class PowerLawParams {
 public:
  /// Support [x0, inf), lambda = x0^alpha.
  static PowerLawParams pure_pareto(double alpha, double x0 = 1.0);
  static PowerLawParams uniform_body(double alpha, double lambda, double x0);
  /// Dispatches on body. For PurePareto, lambda must equal x0^alpha (up to
  /// rounding) or be passed as a negative value meaning "derive it".
  static PowerLawParams make(Body body, double alpha, double lambda, double x0);

  double alpha() const { return alpha_; }
  double lambda() const { return lambda_; }
  double x0() const { return x0_; }
  Body body() const { return body_; }

  /// P(W > x0) = lambda * x0^-alpha.
  double threshold_tail() const;

  /// Same body, x0 and (for UniformBody) lambda with a different exponent.
  /// PurePareto re-derives lambda = x0^alpha.
  PowerLawParams with_alpha(double alpha) const;

  bool operator==(const PowerLawParams&) const = default;

 private:
  PowerLawParams(double alpha, double lambda, double x0, Body body)
      : alpha_(alpha), lambda_(lambda), x0_(x0), body_(body) {}

  double alpha_;
  double lambda_;
  double x0_;
  Body body_;
};

const char* to_string(Body body);
Body parse_body(const char* name);

/// Survival function P(W > x), x > 0.
double tail_prob(const PowerLawParams& params, double x);

/// Inverse survival function: returns w with P(W > w) = u, u in (0, 1].
/// Strictly decreasing in u for PurePareto; u = 1 maps to x0.
double weight_from_uniform(const PowerLawParams& params, double u);

/// One uniform draw per weight (inverse transform).
double sample_weight(const PowerLawParams& params, RandomStream& rng);

/// E(W). Defined for alpha > 1:
///   PurePareto:  alpha x0 / (alpha - 1)
///   UniformBody: (1 - t0) x0 / 2 + lambda alpha x0^(1-alpha) / (alpha - 1),
///                t0 = lambda x0^-alpha
double mean(const PowerLawParams& params);

/// E(W^2). Defined for alpha > 2:
///   PurePareto:  alpha x0^2 / (alpha - 2)
///   UniformBody: (1 - t0) x0^2 / 3 + lambda alpha x0^(2-alpha) / (alpha - 2)
double second_moment(const PowerLawParams& params);

/// Leading-order large-x tail of a product of m iid weights:
///   lambda^m alpha^(m-1) x^-alpha (log x)^(m-1) / (m-1)!
/// Only the leading term is returned; m in {2,3,4}, x > x0^m.
double product_tail_asymptotic(const PowerLawParams& params, int m, double x);

}  // namespace plhg
