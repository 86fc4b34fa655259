#include "plhg/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>
#include <string>

#include "plhg/error.hpp"

namespace plhg {
namespace {

void check_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be finite and > 0, got " << value;
    fail(ErrorCode::Config, msg.str());
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

PowerLawParams PowerLawParams::pure_pareto(double alpha, double x0) {
  check_positive(alpha, "alpha");
  check_positive(x0, "x0");
  return PowerLawParams(alpha, std::pow(x0, alpha), x0, Body::PurePareto);
}

PowerLawParams PowerLawParams::uniform_body(double alpha, double lambda,
                                            double x0) {
  check_positive(alpha, "alpha");
  check_positive(lambda, "lambda");
  check_positive(x0, "x0");
  const double t0 = lambda * std::pow(x0, -alpha);
  if (t0 > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "lambda * x0^-alpha = " << t0
        << " exceeds 1; the tail cannot hold more than all the mass";
    fail(ErrorCode::Config, msg.str());
  }
  return PowerLawParams(alpha, lambda, x0, Body::UniformBody);
}

PowerLawParams PowerLawParams::make(Body body, double alpha, double lambda,
                                    double x0) {
  if (body == Body::UniformBody) return uniform_body(alpha, lambda, x0);
  PowerLawParams p = pure_pareto(alpha, x0);
  if (lambda >= 0.0 &&
      std::abs(lambda - p.lambda_) > 1e-12 * std::max(1.0, p.lambda_)) {
    std::ostringstream msg;
    msg << "pure_pareto requires lambda = x0^alpha = " << p.lambda_
        << ", got " << lambda;
    fail(ErrorCode::Config, msg.str());
  }
  return p;
}

double PowerLawParams::threshold_tail() const {
  if (body_ == Body::PurePareto) return 1.0;
  return lambda_ * std::pow(x0_, -alpha_);
}

PowerLawParams PowerLawParams::with_alpha(double alpha) const {
  if (body_ == Body::PurePareto) return pure_pareto(alpha, x0_);
  return uniform_body(alpha, lambda_, x0_);
}

const char* to_string(Body body) {
  return body == Body::PurePareto ? "pure_pareto" : "uniform_body";
}

Body parse_body(const char* name) {
  if (std::strcmp(name, "pure_pareto") == 0) return Body::PurePareto;
  if (std::strcmp(name, "uniform_body") == 0) return Body::UniformBody;
  fail(ErrorCode::Config, std::string("unknown body '") + name +
                              "' (expected pure_pareto or uniform_body)");
}

double tail_prob(const PowerLawParams& params, double x) {
  if (!(x > 0.0)) fail(ErrorCode::InvalidArgument, "tail_prob needs x > 0");
  if (x >= params.x0()) return params.lambda() * std::pow(x, -params.alpha());
  if (params.body() == Body::PurePareto) return 1.0;
  return 1.0 - (1.0 - params.threshold_tail()) * x / params.x0();
}

double weight_from_uniform(const PowerLawParams& params, double u) {
  if (!(u > 0.0 && u <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "uniform must lie in (0, 1]");
  }
  if (params.body() == Body::PurePareto) {
    return params.x0() * std::pow(u, -1.0 / params.alpha());
  }
  const double t0 = params.threshold_tail();
  if (u <= t0) return std::pow(params.lambda() / u, 1.0 / params.alpha());
  // Body: survival 1 - (1 - t0) w / x0 = u. u = 1 lands on w = 0, which is
  // replaced by the smallest positive double to keep weights positive.
  const double w = params.x0() * (1.0 - u) / (1.0 - t0);
  return w > 0.0 ? w : std::numeric_limits<double>::denorm_min();
}

double sample_weight(const PowerLawParams& params, RandomStream& rng) {
  return weight_from_uniform(params, rng.uniform());
}

double mean(const PowerLawParams& params) {
  const double a = params.alpha();
  if (!(a > 1.0)) {
    fail(ErrorCode::Domain, "mean undefined: E(W) diverges for alpha <= 1");
  }
  const double x0 = params.x0();
  if (params.body() == Body::PurePareto) return a * x0 / (a - 1.0);
  const double t0 = params.threshold_tail();
  return (1.0 - t0) * x0 / 2.0 +
         params.lambda() * a * std::pow(x0, 1.0 - a) / (a - 1.0);
}

double second_moment(const PowerLawParams& params) {
  const double a = params.alpha();
  if (!(a > 2.0)) {
    fail(ErrorCode::Domain,
         "second moment undefined: E(W^2) diverges for alpha <= 2");
  }
  const double x0 = params.x0();
  if (params.body() == Body::PurePareto) return a * x0 * x0 / (a - 2.0);
  const double t0 = params.threshold_tail();
  return (1.0 - t0) * x0 * x0 / 3.0 +
         params.lambda() * a * std::pow(x0, 2.0 - a) / (a - 2.0);
}

double product_tail_asymptotic(const PowerLawParams& params, int m, double x) {
  if (m < 2 || m > 4) {
    fail(ErrorCode::Domain,
         "product tail asymptotic is only established for m in {2,3,4}");
  }
  if (!(x > std::pow(params.x0(), m))) {
    fail(ErrorCode::Domain, "product tail asymptotic needs x > x0^m");
  }
  const double a = params.alpha();
  return std::pow(params.lambda(), m) * std::pow(a, m - 1) * std::pow(x, -a) *
         std::pow(std::log(x), m - 1) / factorial(m - 1);
}

}  // namespace plhg
