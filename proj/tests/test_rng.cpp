#include "poptrade/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

using namespace poptrade;

TEST_CASE("same seed, same stream") {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("stream derivation separates trader streams") {
  Rng a = Rng::stream(99, 0);
  Rng b = Rng::stream(99, 1);
  int equal = 0;
  for (int i = 0; i < 64; ++i) equal += a.next_u64() == b.next_u64();
  CHECK(equal == 0);
}

TEST_CASE("uniform01 stays in [0, 1)") {
  Rng rng(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("binomial edge cases") {
  Rng rng(1);
  CHECK(rng.binomial(0, 0.5) == 0);
  CHECK(rng.binomial(100, 0.0) == 0);
  CHECK(rng.binomial(100, 1.0) == 100);
  CHECK_THROWS_AS(rng.binomial(10, -0.1), std::domain_error);
  CHECK_THROWS_AS(rng.binomial(10, 1.1), std::domain_error);
  CHECK_THROWS_AS(rng.binomial(-1, 0.5), std::domain_error);
}

TEST_CASE("binomial sample moments match n*p and n*p*q") {
  Rng rng(20240917);
  const int n = 100;
  const int reps = 40000;
  for (double p : {0.05, 0.3, 0.5, 0.7, 0.95}) {
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < reps; ++i) {
      const int x = rng.binomial(n, p);
      CHECK(x >= 0);
      CHECK(x <= n);
      sum += x;
      sumsq += static_cast<double>(x) * x;
    }
    const double mean = sum / reps;
    const double var = sumsq / reps - mean * mean;
    const double expect_mean = n * p;
    const double expect_var = n * p * (1 - p);
    const double se_mean = std::sqrt(expect_var / reps);
    CHECK(std::fabs(mean - expect_mean) < 4 * se_mean);
    CHECK(std::fabs(var - expect_var) < 0.1 * expect_var);
  }
}

TEST_CASE("normal sample moments") {
  Rng rng(5);
  const int reps = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < reps; ++i) {
    const double x = rng.normal(2.0, 3.0);
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / reps;
  const double sd = std::sqrt(sumsq / reps - mean * mean);
  CHECK(std::fabs(mean - 2.0) < 4 * 3.0 / std::sqrt(static_cast<double>(reps)));
  CHECK(std::fabs(sd - 3.0) < 0.05);
}
