#include <doctest.h>

#include <cmath>
#include <numbers>

#include "plhg/error.hpp"
#include "plhg/powerlaw.hpp"
#include "plhg/random.hpp"

using namespace plhg;

namespace {

// Exact survival of a product of m iid PurePareto(alpha, x0 = 1) weights:
// log W ~ Exp(alpha), so log of the product is Gamma(m, alpha).
double gamma_product_tail(double alpha, int m, double x) {
  const double t = alpha * std::log(x);
  double term = 1.0, sum = 0.0;
  for (int k = 0; k < m; ++k) {
    if (k > 0) term *= t / k;
    sum += term;
  }
  return std::exp(-t) * sum;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("tail_prob examples") {
  const auto pure1 = PowerLawParams::pure_pareto(1.0);
  CHECK(tail_prob(pure1, 10.0) == doctest::Approx(0.1).epsilon(1e-15));

  const auto ub = PowerLawParams::uniform_body(2.0, 0.5, 1.5);
  CHECK(tail_prob(ub, 1.5) ==
        doctest::Approx(0.5 * std::pow(1.5, -2.0)).epsilon(1e-15));

  const auto pure2 = PowerLawParams::pure_pareto(2.0);
  CHECK(tail_prob(pure2, 0.5) == 1.0);
}

TEST_CASE("uniform body survival is linear below x0 and continuous at x0") {
  const auto p = PowerLawParams::uniform_body(3.0, 0.5, 1.0);
  CHECK(tail_prob(p, 0.5) == doctest::Approx(1.0 - 0.5 * 0.5));
  CHECK(tail_prob(p, 1.0 - 1e-12) == doctest::Approx(0.5));
  CHECK(tail_prob(p, 1.0) == doctest::Approx(0.5));
  CHECK(code_of([&] { tail_prob(p, 0.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("parameter validation") {
  CHECK(code_of([] { PowerLawParams::pure_pareto(0.0); }) == ErrorCode::Config);
  CHECK(code_of([] { PowerLawParams::pure_pareto(2.0, -1.0); }) ==
        ErrorCode::Config);
  // lambda * x0^-alpha > 1
  CHECK(code_of([] { PowerLawParams::uniform_body(2.0, 2.0, 1.0); }) ==
        ErrorCode::Config);
  CHECK(code_of([] { PowerLawParams::make(Body::PurePareto, 2.0, 3.0, 1.0); }) ==
        ErrorCode::Config);
  const auto derived = PowerLawParams::make(Body::PurePareto, 2.0, -1.0, 3.0);
  CHECK(derived.lambda() == doctest::Approx(9.0));
  CHECK(derived.threshold_tail() == doctest::Approx(1.0));
  CHECK(parse_body("uniform_body") == Body::UniformBody);
  CHECK(std::string(to_string(Body::PurePareto)) == "pure_pareto");
  CHECK(code_of([] { parse_body("gaussian"); }) == ErrorCode::Config);
}

TEST_CASE("with_alpha keeps the body and rederives lambda for pure Pareto") {
  const auto p = PowerLawParams::pure_pareto(2.0, 2.0).with_alpha(3.0);
  CHECK(p.alpha() == 3.0);
  CHECK(p.lambda() == doctest::Approx(8.0));
  const auto u = PowerLawParams::uniform_body(2.0, 0.5, 1.0).with_alpha(0.5);
  CHECK(u.body() == Body::UniformBody);
  CHECK(u.lambda() == 0.5);
}

TEST_CASE("inverse transform examples") {
  const auto p = PowerLawParams::pure_pareto(2.0);
  CHECK(weight_from_uniform(p, 1.0) == 1.0);
  CHECK(weight_from_uniform(p, 0.25) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(code_of([&] { weight_from_uniform(p, 0.0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("inverse transform is strictly decreasing in u") {
  const auto p = PowerLawParams::pure_pareto(0.7, 1.3);
  double prev = INFINITY;
  for (int i = 1; i <= 1000; ++i) {
    const double w = weight_from_uniform(p, i / 1000.0);
    CHECK(w < prev);
    prev = w;
  }
  // Round trip through the survival function.
  for (double u : {0.9, 0.3, 1e-3, 1e-9}) {
    CHECK(tail_prob(p, weight_from_uniform(p, u)) ==
          doctest::Approx(u).epsilon(1e-12));
  }
  const auto ub = PowerLawParams::uniform_body(2.0, 0.25, 1.0);
  for (double u : {0.99, 0.5, 0.26, 0.2, 1e-4}) {
    CHECK(tail_prob(ub, weight_from_uniform(ub, u)) ==
          doctest::Approx(u).epsilon(1e-12));
  }
}

TEST_CASE("empirical survival matches tail_prob") {
  RandomStream rng(20240611);
  const auto p = PowerLawParams::pure_pareto(2.0);
  constexpr int N = 1'000'000;
  int above[4] = {0, 0, 0, 0};
  const double xs[4] = {1.0, 2.0, 4.0, 10.0};
  for (int i = 0; i < N; ++i) {
    const double w = sample_weight(p, rng);
    for (int k = 0; k < 4; ++k) above[k] += w > xs[k];
  }
  for (int k = 0; k < 4; ++k) {
    const double q = tail_prob(p, xs[k]);
    const double freq = static_cast<double>(above[k]) / N;
    const double tol = std::max(4.0 * std::sqrt(q * (1 - q) / N), 1e-12);
    INFO("x = " << xs[k]);
    CHECK(std::abs(freq - q) <= tol);
  }
  // P(W > 4) = 0.0625 within 3 standard errors.
  const double se = std::sqrt(0.0625 * 0.9375 / N);
  CHECK(std::abs(above[2] / double(N) - 0.0625) <= 3 * se);
}

TEST_CASE("uniform body empirical survival") {
  RandomStream rng(7);
  const auto p = PowerLawParams::uniform_body(1.5, 0.4, 2.0);
  constexpr int N = 400'000;
  const double xs[3] = {1.0, 2.0, 20.0};
  int above[3] = {0, 0, 0};
  for (int i = 0; i < N; ++i) {
    const double w = sample_weight(p, rng);
    CHECK_MESSAGE(w > 0.0, "weights must be positive");
    for (int k = 0; k < 3; ++k) above[k] += w > xs[k];
  }
  for (int k = 0; k < 3; ++k) {
    const double q = tail_prob(p, xs[k]);
    CHECK(std::abs(above[k] / double(N) - q) <=
          4.0 * std::sqrt(q * (1 - q) / N));
  }
}

TEST_CASE("mean examples") {
  CHECK(mean(PowerLawParams::pure_pareto(2.0)) == doctest::Approx(2.0));
  CHECK(mean(PowerLawParams::pure_pareto(3.0)) == doctest::Approx(1.5));
  CHECK(code_of([] { mean(PowerLawParams::pure_pareto(1.0)); }) ==
        ErrorCode::Domain);
  CHECK(code_of([] { mean(PowerLawParams::pure_pareto(0.5)); }) ==
        ErrorCode::Domain);
}

TEST_CASE("uniform body moments match integrals of the survival function") {
  // E W = int_0^inf S(x) dx and E W^2 = int_0^inf 2x S(x) dx, alpha = 3,
  // lambda = 0.5, x0 = 1: 0.75 + 0.25 and 2/3 + 1.
  const auto p = PowerLawParams::uniform_body(3.0, 0.5, 1.0);
  CHECK(mean(p) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(second_moment(p) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  // alpha = 2.5, lambda = 1, x0 = 2: t0 = 2^-2.5.
  const auto q = PowerLawParams::uniform_body(2.5, 1.0, 2.0);
  // int_0^2 (1 - (1-t0) x/2) dx = 1 + t0; int_2^inf x^-2.5 dx = 2^-1.5 / 1.5.
  const double t0 = std::pow(2.0, -2.5);
  CHECK(mean(q) == doctest::Approx(1 + t0 + std::pow(2.0, -1.5) / 1.5));
}

TEST_CASE("sample mean converges for alpha = 3") {
  RandomStream rng(99);
  const auto p = PowerLawParams::pure_pareto(3.0);
  double sum = 0.0;
  constexpr int N = 1'000'000;
  for (int i = 0; i < N; ++i) sum += sample_weight(p, rng);
  CHECK(std::abs(sum / N - 1.5) <= 0.015);
}

TEST_CASE("second moment examples") {
  CHECK(second_moment(PowerLawParams::pure_pareto(3.0)) == doctest::Approx(3.0));
  CHECK(second_moment(PowerLawParams::pure_pareto(4.0, 2.0)) ==
        doctest::Approx(8.0));
  CHECK(code_of([] { second_moment(PowerLawParams::pure_pareto(2.0)); }) ==
        ErrorCode::Domain);
}

TEST_CASE("product tail asymptote examples") {
  const auto p1 = PowerLawParams::pure_pareto(1.0);
  CHECK(product_tail_asymptotic(p1, 2, std::numbers::e) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  const auto p5 = PowerLawParams::pure_pareto(0.5);
  const double l = std::log(1e4);
  CHECK(product_tail_asymptotic(p5, 3, 1e4) ==
        doctest::Approx(0.01 * l * l * 0.25 / 2).epsilon(1e-14));
  CHECK(code_of([&] { product_tail_asymptotic(p5, 1, 1e4); }) ==
        ErrorCode::Domain);
  CHECK(code_of([&] { product_tail_asymptotic(p5, 5, 1e4); }) ==
        ErrorCode::Domain);
  CHECK(code_of([&] { product_tail_asymptotic(p5, 2, 1.0); }) ==
        ErrorCode::Domain);
}

TEST_CASE("product tail asymptote is the leading term of the exact tail") {
  for (int m : {2, 3, 4}) {
    for (double a : {0.5, 0.8, 2.0}) {
      const auto p = PowerLawParams::pure_pareto(a);
      double prev_ratio = INFINITY;
      for (double x : {1e2, 1e4, 1e8, 1e16, 1e64}) {
        const double ratio =
            gamma_product_tail(a, m, x) / product_tail_asymptotic(p, m, x);
        CHECK(ratio >= 1.0);
        CHECK(ratio < prev_ratio);
        prev_ratio = ratio;
      }
      CHECK(prev_ratio < 1.0 + 3.0 * (m - 1) / (a * std::log(1e64)));
    }
  }
}

TEST_CASE("sampled products follow the exact product tail") {
  RandomStream rng(5150);
  constexpr int N = 1'000'000;
  for (int m : {2, 3}) {
    const auto p = PowerLawParams::pure_pareto(0.5);
    int hits = 0;
    for (int i = 0; i < N; ++i) {
      double x = 1.0;
      for (int k = 0; k < m; ++k) x *= sample_weight(p, rng);
      hits += x > 1e4;
    }
    const double q = gamma_product_tail(0.5, m, 1e4);
    CHECK(std::abs(hits / double(N) - q) <= 4 * std::sqrt(q * (1 - q) / N));
  }
}

TEST_CASE("derived seeds are deterministic and distinct") {
  CHECK(derive_seed(1, {0, 0, 0}) == derive_seed(1, {0, 0, 0}));
  CHECK(derive_seed(1, {0, 0, 1}) != derive_seed(1, {0, 1, 0}));
  CHECK(derive_seed(1, {0, 0, 0}) != derive_seed(2, {0, 0, 0}));
  CHECK(derive_seed(1, {}) == splitmix64(1));
  RandomStream a(3), b(3);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}
