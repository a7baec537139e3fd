#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lvnet/data_matrix.hpp"
#include "lvnet/linalg.hpp"
#include "lvnet/matrix.hpp"

namespace lvnet {

/// How the mean is handled in a least-squares fit.
///  - centered:  predictors and response are mean-centred, no intercept term.
///  - intercept: raw data plus an estimated intercept; slopes match `centered`.
///  - origin:    raw data through the origin. R^2 and the moments behind the
///               decomposition are then uncentred second moments.
enum class FitMode { centered, intercept, origin };

std::string_view to_string(FitMode mode);

struct FitOptions {
  FitMode mode = FitMode::centered;
  /// Divisor for the reported variances and covariances. R^2 and its
  /// decomposition are ratios and do not depend on it.
  Denominator denominator = Denominator::n_minus_1;
};

struct RegressionFit {
  std::string response;
  std::vector<std::string> predictors;
  FitMode mode = FitMode::centered;
  std::vector<double> coefficients;
  double intercept = 0.0;  // nonzero only for FitMode::intercept
  std::vector<double> std_errors;
  std::vector<double> t_statistics;
  std::size_t dof = 0;
  double residual_variance = 0.0;
  double r_squared = 0.0;
  /// beta_i * cov(x_i, y) / var(y); sums to r_squared.
  std::vector<double> contributions;
  std::vector<double> covariances;  // cov(x_i, y)
  double response_variance = 0.0;   // var(y)
  std::vector<double> residuals;
};

/// Least squares of y on the columns of X. Throws TooFewRows unless
/// n_rows > n_cols (+1 with an intercept) and RankDeficient when the
/// predictors are collinear.
RegressionFit ols_fit(const DataMatrix& X, std::span<const double> y,
                      const FitOptions& options = {}, std::string response = "y");

/// Regresses column `response` of `data` on every other column.
RegressionFit ols_fit(const DataMatrix& data, std::size_t response,
                      const FitOptions& options = {});

/// Two-sided p-value of a t statistic with `dof` degrees of freedom.
double two_sided_p_value(double t, std::size_t dof);

/// Nodewise coefficients implied by a concentration matrix:
/// -theta_ij / theta_ii for every j != node, in ascending j.
std::vector<double> beta_from_concentration(const SymMatrix& theta, std::size_t node);

/// Coefficient of x1 when regressing standardised x3 on x1 and x2:
/// (r13 - r12 r32) / (1 - r12^2). Throws DegenerateCorrelation if |r12| >= 1.
double beta_3var(double r13, double r12, double r32);

/// Predictors after sequential (type I) orthogonalisation.
struct ProjectedDesign {
  DataMatrix columns;              // columns[k] is the residual of order[k]
  std::vector<std::size_t> order;  // permutation of the input columns
  double gram_offdiag_max = 0.0;   // max |<q_a, q_b>| over a != b
};

/// Replaces each column (taken in `order`) by its residual after projection
/// onto the span of the earlier columns. The first column is kept as is.
/// With `center` set the columns are mean-centred first, so orthogonality
/// also means zero sample covariance. Throws RankDeficient naming the
/// column whose residual vanishes.
ProjectedDesign type1_project(const DataMatrix& X, std::span<const std::size_t> order,
                              bool center = true);

}  // namespace lvnet
