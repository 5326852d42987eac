#include "poptrade/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace poptrade {

namespace {

// Continued fraction for the incomplete beta function, modified Lentz
// iteration. Converges fast for x < (a+1)/(a+b+2).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge");
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("regularized_incomplete_beta: a, b must be > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("regularized_incomplete_beta: x must be in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  // Use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) so the continued fraction
  // is evaluated on its fast-converging side.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_sf(double t, long df) {
  if (!std::isfinite(t)) throw std::domain_error("student_t_sf: t must be finite");
  if (df < 1) throw std::domain_error("student_t_sf: df must be >= 1");
  if (t == 0.0) return 1.0;
  const double v = static_cast<double>(df);
  return regularized_incomplete_beta(v / 2.0, 0.5, v / (v + t * t));
}

double gaussian_two_sided_tail(double t) {
  if (!std::isfinite(t)) throw std::domain_error("gaussian_two_sided_tail: t must be finite");
  return std::erfc(std::fabs(t) / std::sqrt(2.0));
}

}  // namespace poptrade
