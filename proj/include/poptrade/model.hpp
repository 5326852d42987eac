#ifndef POPTRADE_MODEL_HPP
#define POPTRADE_MODEL_HPP

#include <cstdint>
#include <variant>

namespace poptrade {

/// Two-hypothesis Gaussian signal model: daily percent returns are
/// N(mu_good, sigma) for good traders and N(mu_bad, sigma) otherwise.
struct SignalModel {
  double mu_good = 0.0;
  double mu_bad = 0.0;
  double sigma = 1.0;

  void validate() const;  // throws std::invalid_argument
};

/// Linear update factor f(q) = clamp(c0 + c1*q, clamp_min, clamp_max).
/// f is a ratio of probabilities, so clamp_min must be >= 0.
struct LinearF {
  double c0 = 1.0;
  double c1 = 0.0;
  double clamp_min = 0.0;
  double clamp_max = 100.0;

  void validate() const;
};

/// Exact Bayes update factor under the Gaussian signal model, conditioning
/// on the running smoothed-popularity prior.
struct ExactBayes {};

using FSpec = std::variant<LinearF, ExactBayes>;

struct ModelParams {
  int population_size = 100;    // N, count of potential copiers
  double alpha = 1.0;           // smoothing parameter, 0 < alpha < N
  FSpec f_spec = LinearF{};
  SignalModel signal;
  int horizon = 100;            // T, number of business-day steps
  int initial_popularity = 0;   // n_0, in [0, N]
  std::uint64_t seed = 0;

  void validate() const;
};

/// Popularity and posterior carried between steps.
struct PosteriorState {
  int popularity = 0;      // n_{t-1}
  double posterior = 0.0;  // P(good | signals so far)
};

/// f(q) for the linear spec. Total for any finite q.
double linear_f(double q, const LinearF& spec);

/// Likelihood ratio f = phi(q; mu_good, sigma) /
/// (prior*phi(q; mu_good, sigma) + (1-prior)*phi(q; mu_bad, sigma)).
/// Returns exactly 1 when the two hypotheses coincide or prior = 1, and 1
/// when both densities underflow (uninformative signal).
double exact_f(double q, double prior, const SignalModel& model);

/// One posterior update: clamp(f * (n_prev + alpha) / (N + alpha), 0, 1).
/// The clamp is needed because the smoothed-share approximation is not a
/// normalized probability.
double posterior_step(int prev_popularity, const ModelParams& params, double f_value);

/// The approximate expected one-step change (f - 1)*n + f*alpha, reported
/// without clamping.
double expected_delta_approx(int popularity, double alpha, double f_value);

/// Exact expected one-step change under binomial adoption:
/// N*posterior_step(n, params, f) - n. Where no clamp binds it differs from
/// expected_delta_approx by exactly f*alpha*(n+alpha)/(N+alpha).
double expected_delta_exact(int popularity, const ModelParams& params, double f_value);

/// Evaluates the configured f spec on a quality signal. For ExactBayes the
/// prior is the smoothed popularity share (n_prev + alpha)/(N + alpha).
double eval_f(const FSpec& spec, double q, int prev_popularity, const ModelParams& params);

}  // namespace poptrade

#endif  // POPTRADE_MODEL_HPP
