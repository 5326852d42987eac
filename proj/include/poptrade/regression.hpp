#ifndef POPTRADE_REGRESSION_HPP
#define POPTRADE_REGRESSION_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace poptrade {

/// A design column is (numerically) linearly dependent on the columns
/// before it.
class SingularColumnError : public std::runtime_error {
 public:
  SingularColumnError(std::string column, const std::string& message)
      : std::runtime_error(message), column_(std::move(column)) {}
  const std::string& column() const { return column_; }

 private:
  std::string column_;
};

struct LeastSquaresFit {
  std::vector<double> coefficients;
  std::vector<double> standard_errors;
  std::vector<double> t_stats;
  std::vector<double> p_values;  // two-sided Student-t, n - k dof
  long n_obs = 0;
  long degrees_of_freedom = 0;
  double rss = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares via Householder QR (the normal equations are never
/// formed). Standard errors use the unbiased residual variance rss/(n - k).
/// `names` label the design columns in SingularColumnError diagnostics.
/// Requires n_obs > k and all columns the same length as y.
LeastSquaresFit least_squares_fit(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& y,
                                  const std::vector<std::string>& names);

}  // namespace poptrade

#endif  // POPTRADE_REGRESSION_HPP
