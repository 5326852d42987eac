#include "poptrade/regression.hpp"

#include <cmath>
#include <limits>

#include "poptrade/stats.hpp"

namespace poptrade {

LeastSquaresFit least_squares_fit(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& y,
                                  const std::vector<std::string>& names) {
  const std::size_t k = columns.size();
  const std::size_t n = y.size();
  if (k == 0) throw std::invalid_argument("least_squares_fit: no design columns");
  if (names.size() != k) throw std::invalid_argument("least_squares_fit: one name per column");
  for (const auto& col : columns) {
    if (col.size() != n) {
      throw std::invalid_argument("least_squares_fit: column length mismatch");
    }
  }
  if (n <= k) {
    throw std::invalid_argument("least_squares_fit: need more observations than columns");
  }

  // Column-major working copy of [X | y]; Householder reflections are
  // applied to all of it.
  std::vector<std::vector<double>> a(columns.begin(), columns.end());
  std::vector<double> qty = y;

  std::vector<double> orig_norm(k);
  for (std::size_t j = 0; j < k; ++j) {
    double s = 0.0;
    for (double v : a[j]) s += v * v;
    orig_norm[j] = std::sqrt(s);
  }

  // R is stored in the top k rows of the transformed columns.
  for (std::size_t j = 0; j < k; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < n; ++i) norm += a[j][i] * a[j][i];
    norm = std::sqrt(norm);
    const double tol = 1e-10 * (orig_norm[j] + std::numeric_limits<double>::min());
    if (norm <= tol) {
      throw SingularColumnError(
          names[j], "singular design: column '" + names[j] +
                        "' is linearly dependent on the preceding columns");
    }
    // Householder vector v = x + sign(x0)*||x||*e1, stored in place below
    // the diagonal of column j.
    const double alpha = a[j][j] >= 0.0 ? -norm : norm;
    a[j][j] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = j; i < n; ++i) vnorm2 += a[j][i] * a[j][i];
    if (vnorm2 > 0.0) {
      auto reflect = [&](std::vector<double>& col) {
        double dot = 0.0;
        for (std::size_t i = j; i < n; ++i) dot += a[j][i] * col[i];
        const double scale = 2.0 * dot / vnorm2;
        for (std::size_t i = j; i < n; ++i) col[i] -= scale * a[j][i];
      };
      for (std::size_t jj = j + 1; jj < k; ++jj) reflect(a[jj]);
      reflect(qty);
    }
    // Restore the diagonal entry of R and zero the eliminated part.
    a[j][j] = alpha;
    for (std::size_t i = j + 1; i < n; ++i) a[j][i] = 0.0;
  }

  // Back-substitution: R beta = (Q'y)[0..k).
  std::vector<double> beta(k);
  for (std::size_t j = k; j-- > 0;) {
    double s = qty[j];
    for (std::size_t jj = j + 1; jj < k; ++jj) s -= a[jj][j] * beta[jj];
    beta[j] = s / a[j][j];
  }

  double rss = 0.0;
  for (std::size_t i = k; i < n; ++i) rss += qty[i] * qty[i];

  // (X'X)^-1 = R^-1 R^-T; we need its diagonal. Solve R w = e_j, then
  // diag_j = ||row j of R^-1||^2 accumulated column-wise.
  std::vector<double> xtx_inv_diag(k, 0.0);
  std::vector<double> w(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) w[i] = 0.0;
    w[j] = 1.0;
    for (std::size_t i = j + 1; i-- > 0;) {
      double s = w[i];
      for (std::size_t jj = i + 1; jj <= j; ++jj) s -= a[jj][i] * w[jj];
      w[i] = s / a[i][i];
    }
    for (std::size_t i = 0; i <= j; ++i) xtx_inv_diag[i] += w[i] * w[i];
  }

  LeastSquaresFit fit;
  fit.n_obs = static_cast<long>(n);
  fit.degrees_of_freedom = static_cast<long>(n - k);
  fit.rss = rss;
  const double s2 = rss / static_cast<double>(fit.degrees_of_freedom);

  double ybar = 0.0;
  for (double v : y) ybar += v;
  ybar /= static_cast<double>(n);
  double tss = 0.0;
  for (double v : y) tss += (v - ybar) * (v - ybar);
  fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;

  fit.coefficients = beta;
  fit.standard_errors.resize(k);
  fit.t_stats.resize(k);
  fit.p_values.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double se = std::sqrt(s2 * xtx_inv_diag[j]);
    fit.standard_errors[j] = se;
    if (se > 0.0) {
      fit.t_stats[j] = beta[j] / se;
      fit.p_values[j] = student_t_sf(fit.t_stats[j], fit.degrees_of_freedom);
    } else {
      // Exact interpolation leaves a zero residual; report the degenerate
      // limit rather than dividing by zero.
      fit.t_stats[j] = beta[j] == 0.0 ? 0.0
                       : beta[j] > 0.0
                           ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
      fit.p_values[j] = beta[j] == 0.0 ? 1.0 : 0.0;
    }
  }
  return fit;
}

}  // namespace poptrade
