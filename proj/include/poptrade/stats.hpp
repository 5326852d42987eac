#ifndef POPTRADE_STATS_HPP
#define POPTRADE_STATS_HPP

namespace poptrade {

/// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided Student-t tail probability 2*P(T >= |t|) with df degrees of
/// freedom, via I_x(df/2, 1/2) at x = df/(df + t^2). Monotone decreasing
/// in |t|. Throws std::domain_error for non-finite t or df < 1.
double student_t_sf(double t, long df);

/// Two-sided Gaussian tail 2*(1 - Phi(|t|)) = erfc(|t|/sqrt(2)).
double gaussian_two_sided_tail(double t);

}  // namespace poptrade

#endif  // POPTRADE_STATS_HPP
