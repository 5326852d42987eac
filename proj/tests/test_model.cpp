#include "poptrade/model.hpp"

#include <cmath>
#include <limits>

#include <stdexcept>

#include <doctest.h>

#include "poptrade/rng.hpp"

using namespace poptrade;

namespace {

ModelParams make_params(int n_pool, double alpha) {
  ModelParams p;
  p.population_size = n_pool;
  p.alpha = alpha;
  p.signal = {1.0, -1.0, 1.0};
  return p;
}

}  // namespace

TEST_CASE("linear_f evaluates and clamps") {
  const LinearF spec{1.0, 0.01, 0.0, 10.0};
  CHECK(linear_f(0.0, spec) == 1.0);
  CHECK(linear_f(-200.0, spec) == 0.0);  // lower clamp binds
  CHECK(linear_f(50.0, spec) == 1.5);
  CHECK(linear_f(1e9, spec) == 10.0);
  CHECK_THROWS_AS(linear_f(std::numeric_limits<double>::infinity(), spec), std::domain_error);
  CHECK_THROWS_AS(linear_f(std::numeric_limits<double>::quiet_NaN(), spec), std::domain_error);
}

TEST_CASE("linear_f rejects invalid specs") {
  CHECK_THROWS_AS(linear_f(0.0, LinearF{1.0, 0.0, -0.5, 10.0}), std::invalid_argument);
  CHECK_THROWS_AS(linear_f(0.0, LinearF{1.0, 0.0, 2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("exact_f special cases are exactly 1") {
  const SignalModel same{0.7, 0.7, 2.0};
  CHECK(exact_f(0.3, 0.25, same) == 1.0);
  CHECK(exact_f(123.0, 0.9, same) == 1.0);

  const SignalModel model{1.0, -1.0, 1.0};
  CHECK(exact_f(0.5, 1.0, model) == 1.0);  // prior certain
  // Equidistant signal: the densities coincide.
  CHECK(exact_f(0.0, 0.3, model) == 1.0);
}

TEST_CASE("exact_f pinned value") {
  // phi(0)/(0.5*phi(0) + 0.5*phi(2)) for unit-variance gaussians.
  const SignalModel model{1.0, -1.0, 1.0};
  CHECK(exact_f(1.0, 0.5, model) == doctest::Approx(1.7615941559557649).epsilon(1e-9));
}

TEST_CASE("exact_f favors the nearer hypothesis") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    SignalModel model;
    model.mu_good = 4.0 * rng.uniform01() - 1.0;
    model.mu_bad = model.mu_good - (0.5 + 3.0 * rng.uniform01());
    model.sigma = 0.5 + 2.0 * rng.uniform01();
    const double prior = rng.uniform01();
    CHECK(exact_f(model.mu_good, prior, model) >= 1.0);
    CHECK(exact_f(model.mu_bad, prior, model) <= 1.0);
  }
}

TEST_CASE("exact_f total underflow returns 1") {
  const SignalModel model{0.0, 60.0, 1.0};
  // At q = 0 the bad density is exp(-1800), far below double range; with
  // prior 0 the denominator underflows entirely.
  CHECK(exact_f(0.0, 0.0, model) == 1.0);
}

TEST_CASE("exact_f domain errors") {
  const SignalModel model{1.0, -1.0, 1.0};
  CHECK_THROWS_AS(exact_f(0.0, -0.01, model), std::domain_error);
  CHECK_THROWS_AS(exact_f(0.0, 1.01, model), std::domain_error);
  CHECK_THROWS_AS(exact_f(std::numeric_limits<double>::quiet_NaN(), 0.5, model),
                  std::domain_error);
}

TEST_CASE("posterior_step evaluates and clamps") {
  const ModelParams p = make_params(99, 1.0);
  CHECK(posterior_step(0, p, 1.0) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(posterior_step(99, p, 1.0) == 1.0);
  CHECK(posterior_step(10, p, 10.0) == 1.0);  // 10*11/100 clamps
  CHECK_THROWS_AS(posterior_step(5, p, -0.5), std::domain_error);
  CHECK_THROWS_AS(posterior_step(5, p, std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_THROWS_AS(posterior_step(-1, p, 1.0), std::domain_error);
  CHECK_THROWS_AS(posterior_step(100, p, 1.0), std::domain_error);
}

TEST_CASE("posterior_step stays in [0,1] for random inputs") {
  Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const int n_pool = 1 + static_cast<int>(rng.next_u64() % 10000);
    const double alpha = rng.uniform01() * (n_pool - 1e-9) + 1e-12;
    const ModelParams p = make_params(n_pool, alpha);
    const int n = static_cast<int>(rng.next_u64() % (n_pool + 1));
    const double f = 20.0 * rng.uniform01();
    const double post = posterior_step(n, p, f);
    CHECK(post >= 0.0);
    CHECK(post <= 1.0);
  }
}

TEST_CASE("expected_delta_approx direct values") {
  CHECK(expected_delta_approx(10, 0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(expected_delta_approx(100, 1.0, 1.5) == doctest::Approx(51.5).epsilon(1e-15));
  CHECK(expected_delta_approx(0, 1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(expected_delta_approx(-1, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(expected_delta_approx(1, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(expected_delta_approx(1, 1.0, std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("expected_delta_exact direct and pinned values") {
  const ModelParams small = make_params(99, 1.0);
  CHECK(expected_delta_exact(0, small, 1.0) == doctest::Approx(0.99).epsilon(1e-14));
  CHECK(expected_delta_exact(99, small, 1.0) == doctest::Approx(0.0).epsilon(1e-14));

  const ModelParams big = make_params(10000, 1.0);
  // 10000*1.5*101/10001 - 100, oracle value.
  CHECK(expected_delta_exact(100, big, 1.5) ==
        doctest::Approx(51.484851514848515).epsilon(1e-12));
  const double gap = std::fabs(expected_delta_exact(100, big, 1.5) -
                               expected_delta_approx(100, 1.0, 1.5));
  CHECK(gap == doctest::Approx(0.015148485151484852).epsilon(1e-12));
}

TEST_CASE("approximation identity holds whenever the clamp is slack") {
  Rng rng(29);
  int checked = 0;
  while (checked < 1000) {
    const int n_pool = 100 + static_cast<int>(rng.next_u64() % 100000);
    const double alpha = 0.01 + 5.0 * rng.uniform01();
    const ModelParams p = make_params(n_pool, alpha);
    const int n = static_cast<int>(rng.next_u64() % (n_pool / 2));
    const double f = 2.0 * rng.uniform01();
    const double raw = f * (n + alpha) / (n_pool + alpha);
    if (raw >= 1.0) continue;  // clamped; identity does not apply
    ++checked;
    const double expect = f * alpha * (n + alpha) / (n_pool + alpha);
    const double gap = std::fabs(expected_delta_exact(n, p, f) -
                                 expected_delta_approx(n, alpha, f));
    CHECK(gap == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("expected_delta_approx is nondecreasing in q for linear f with c1 > 0") {
  const LinearF spec{1.0, 0.05, 0.0, 10.0};
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng.next_u64() % 500);
    const double alpha = 0.1 + 2.0 * rng.uniform01();
    double q1 = -20.0 + 40.0 * rng.uniform01();
    double q2 = -20.0 + 40.0 * rng.uniform01();
    if (q1 > q2) std::swap(q1, q2);
    CHECK(expected_delta_approx(n, alpha, linear_f(q2, spec)) >=
          expected_delta_approx(n, alpha, linear_f(q1, spec)));
  }
}

TEST_CASE("boost from a better signal grows with popularity") {
  Rng rng(37);
  for (int i = 0; i < 500; ++i) {
    int n1 = static_cast<int>(rng.next_u64() % 1000);
    int n2 = static_cast<int>(rng.next_u64() % 1000);
    if (n1 > n2) std::swap(n1, n2);
    double f1 = 3.0 * rng.uniform01();
    double f2 = 3.0 * rng.uniform01();
    if (f1 > f2) std::swap(f1, f2);
    const double alpha = 0.1 + 3.0 * rng.uniform01();
    const double gain_hi = expected_delta_approx(n2, alpha, f2) -
                           expected_delta_approx(n2, alpha, f1);
    const double gain_lo = expected_delta_approx(n1, alpha, f2) -
                           expected_delta_approx(n1, alpha, f1);
    CHECK(gain_hi >= gain_lo);
    if (f1 != f2 && n1 != n2) {
      CHECK(gain_hi > gain_lo);
    } else {
      CHECK(gain_hi == doctest::Approx(gain_lo).epsilon(1e-12));
    }
  }
}

TEST_CASE("ModelParams validation") {
  ModelParams p = make_params(100, 1.0);
  CHECK_NOTHROW(p.validate());
  p.alpha = 100.0;  // must be < N
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.alpha = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = make_params(100, 1.0);
  p.initial_popularity = 101;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = make_params(100, 1.0);
  p.signal.sigma = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("eval_f dispatches on the spec") {
  ModelParams p = make_params(99, 1.0);
  p.f_spec = LinearF{1.0, 0.01, 0.0, 10.0};
  CHECK(eval_f(p.f_spec, 50.0, 0, p) == 1.5);
  p.f_spec = ExactBayes{};
  // prior = (49+1)/100 = 0.5 against the pinned exact_f value.
  CHECK(eval_f(p.f_spec, 1.0, 49, p) == doctest::Approx(1.7615941559557649).epsilon(1e-9));
}
