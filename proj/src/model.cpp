#include "poptrade/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace poptrade {

void SignalModel::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("SignalModel: sigma must be positive and finite");
  }
  if (!std::isfinite(mu_good) || !std::isfinite(mu_bad)) {
    throw std::invalid_argument("SignalModel: means must be finite");
  }
}

void LinearF::validate() const {
  if (!std::isfinite(c0) || !std::isfinite(c1)) {
    throw std::invalid_argument("LinearF: coefficients must be finite");
  }
  if (!(clamp_min >= 0.0)) {
    throw std::invalid_argument("LinearF: clamp_min must be >= 0 (f is a ratio of densities)");
  }
  if (!(clamp_max > clamp_min)) {
    throw std::invalid_argument("LinearF: clamp_max must exceed clamp_min");
  }
}

void ModelParams::validate() const {
  if (population_size < 1) {
    throw std::invalid_argument("ModelParams: population_size must be >= 1");
  }
  if (!(alpha > 0.0) || !(alpha < static_cast<double>(population_size))) {
    throw std::invalid_argument(
        "ModelParams: alpha must satisfy 0 < alpha < population_size (the smoothed-share "
        "approximation assumes alpha small relative to N)");
  }
  if (initial_popularity < 0 || initial_popularity > population_size) {
    throw std::invalid_argument("ModelParams: initial_popularity must be in [0, population_size]");
  }
  if (horizon < 1) {
    throw std::invalid_argument("ModelParams: horizon must be >= 1");
  }
  if (const auto* lin = std::get_if<LinearF>(&f_spec)) lin->validate();
  signal.validate();
}

double linear_f(double q, const LinearF& spec) {
  spec.validate();
  if (!std::isfinite(q)) throw std::domain_error("linear_f: q must be finite");
  return std::clamp(spec.c0 + spec.c1 * q, spec.clamp_min, spec.clamp_max);
}

double exact_f(double q, double prior, const SignalModel& model) {
  model.validate();
  if (!std::isfinite(q)) throw std::domain_error("exact_f: q must be finite");
  if (!(prior >= 0.0 && prior <= 1.0)) {
    throw std::domain_error("exact_f: prior must be in [0, 1]");
  }
  // Work with exponents relative to the larger density; the shared Gaussian
  // normalization cancels in the ratio.
  auto half_sq = [&](double mu) {
    const double z = (q - mu) / model.sigma;
    return 0.5 * z * z;
  };
  const double dg = half_sq(model.mu_good);
  const double db = half_sq(model.mu_bad);
  if (dg == db) return 1.0;  // identical hypotheses: the signal carries no information
  const double shift = std::min(dg, db);
  const double eg = std::exp(shift - dg);
  const double eb = std::exp(shift - db);
  const double denom = prior * eg + (1.0 - prior) * eb;
  if (denom == 0.0) return 1.0;  // both densities underflowed; treat as uninformative
  return eg / denom;
}

double posterior_step(int prev_popularity, const ModelParams& params, double f_value) {
  if (prev_popularity < 0 || prev_popularity > params.population_size) {
    throw std::domain_error("posterior_step: popularity must be in [0, N]");
  }
  if (!std::isfinite(f_value) || f_value < 0.0) {
    throw std::domain_error("posterior_step: f_value must be finite and >= 0");
  }
  const double n = static_cast<double>(params.population_size);
  const double p = f_value * (static_cast<double>(prev_popularity) + params.alpha) / (n + params.alpha);
  return std::clamp(p, 0.0, 1.0);
}

double expected_delta_approx(int popularity, double alpha, double f_value) {
  if (popularity < 0) throw std::domain_error("expected_delta_approx: popularity must be >= 0");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("expected_delta_approx: alpha must be positive and finite");
  }
  if (!std::isfinite(f_value) || f_value < 0.0) {
    throw std::domain_error("expected_delta_approx: f_value must be finite and >= 0");
  }
  return (f_value - 1.0) * static_cast<double>(popularity) + f_value * alpha;
}

double expected_delta_exact(int popularity, const ModelParams& params, double f_value) {
  const double p = posterior_step(popularity, params, f_value);
  return static_cast<double>(params.population_size) * p - static_cast<double>(popularity);
}

double eval_f(const FSpec& spec, double q, int prev_popularity, const ModelParams& params) {
  if (const auto* lin = std::get_if<LinearF>(&spec)) {
    return linear_f(q, *lin);
  }
  const double prior = (static_cast<double>(prev_popularity) + params.alpha) /
                       (static_cast<double>(params.population_size) + params.alpha);
  return exact_f(q, std::min(prior, 1.0), params.signal);
}

}  // namespace poptrade
