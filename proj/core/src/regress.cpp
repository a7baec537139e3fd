#include "lvnet/regress.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/distributions/students_t.hpp>

#include "lvnet/errors.hpp"

namespace lvnet {

std::string_view to_string(FitMode mode) {
  switch (mode) {
    case FitMode::centered:
      return "centered";
    case FitMode::intercept:
      return "intercept";
    case FitMode::origin:
      return "origin";
  }
  return "unknown";
}

namespace {

double mean_of(std::span<const double> v) {
  const double first = v.front();
  if (std::all_of(v.begin(), v.end(), [&](double x) { return x == first; })) return first;
  const double n = static_cast<double>(v.size());
  const double m = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double correction = 0.0;
  for (double x : v) correction += x - m;
  return m + correction / n;
}

}  // namespace

RegressionFit ols_fit(const DataMatrix& X, std::span<const double> y, const FitOptions& options,
                      std::string response) {
  const std::size_t n = X.n_rows();
  const std::size_t p = X.n_cols();
  if (y.size() != n)
    throw InvalidArgument("response has " + std::to_string(y.size()) + " values for " +
                          std::to_string(n) + " rows");
  for (double v : y)
    if (!std::isfinite(v)) throw InvalidArgument("response contains a non-finite value");
  const bool demean = options.mode != FitMode::origin;
  const std::size_t used = p + (demean ? 1 : 0);
  if (n <= used)
    throw TooFewRows(std::to_string(n) + " rows for " + std::to_string(p) + " predictors" +
                     (demean ? " plus the mean" : ""));

  // Working copies: centred unless fitting through the origin.
  std::vector<double> x_means(p, 0.0);
  double y_mean = 0.0;
  if (demean) {
    x_means = column_means(X);
    y_mean = mean_of(y);
  }
  Matrix xc(n, p);
  std::vector<double> yc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) xc(i, j) = X(i, j) - x_means[j];
    yc[i] = y[i] - y_mean;
  }

  Matrix lower(p, p);
  std::vector<double> xty(p, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = xc.row(i);
    for (std::size_t a = 0; a < p; ++a) {
      xty[a] += row[a] * yc[i];
      for (std::size_t b = 0; b <= a; ++b) lower(a, b) += row[a] * row[b];
    }
  }
  SymMatrix gram(p);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b <= a; ++b) gram.set(a, b, lower(a, b));
  const double ss_y = std::inner_product(yc.begin(), yc.end(), yc.begin(), 0.0);
  if (!(ss_y > 0.0)) throw InvalidArgument("response '" + response + "' has zero variance");

  // Solve on the unit-diagonal scale so the pivot tolerance is relative.
  std::vector<double> scale(p);
  for (std::size_t j = 0; j < p; ++j) {
    if (!(gram(j, j) > 0.0))
      throw RankDeficient("predictor '" + X.col_names()[j] + "' has zero variance");
    scale[j] = 1.0 / std::sqrt(gram(j, j));
  }
  SymMatrix scaled(p);
  std::vector<double> rhs(p);
  for (std::size_t a = 0; a < p; ++a) {
    rhs[a] = scale[a] * xty[a];
    scaled.set(a, a, 1.0);
    for (std::size_t b = 0; b < a; ++b) scaled.set(a, b, scale[a] * gram(a, b) * scale[b]);
  }
  std::vector<double> beta;
  SymMatrix scaled_inv;
  try {
    beta = solve_pd(scaled, rhs);
    scaled_inv = invert_pd(scaled);
  } catch (const NotPositiveDefinite& e) {
    throw RankDeficient(std::string("collinear predictors (") + e.what() + ")");
  }
  for (std::size_t j = 0; j < p; ++j) beta[j] *= scale[j];

  RegressionFit fit;
  fit.response = std::move(response);
  fit.predictors = X.col_names();
  fit.mode = options.mode;
  fit.coefficients = beta;

  fit.residuals.resize(n);
  double ss_fit = 0.0;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double yhat = dot(xc.row(i), beta);
    fit.residuals[i] = yc[i] - yhat;
    ss_fit += yhat * yhat;
    ss_res += fit.residuals[i] * fit.residuals[i];
  }

  const double denom = options.denominator == Denominator::n ? static_cast<double>(n)
                                                             : static_cast<double>(n - 1);
  fit.r_squared = ss_fit / ss_y;
  fit.response_variance = ss_y / denom;
  fit.covariances.resize(p);
  fit.contributions.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    fit.covariances[j] = xty[j] / denom;
    fit.contributions[j] = beta[j] * xty[j] / ss_y;
  }

  fit.dof = n - used;
  fit.residual_variance = ss_res / static_cast<double>(fit.dof);
  fit.std_errors.resize(p);
  fit.t_statistics.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    fit.std_errors[j] = std::sqrt(fit.residual_variance * scaled_inv(j, j)) * scale[j];
    fit.t_statistics[j] = beta[j] / fit.std_errors[j];
  }
  if (options.mode == FitMode::intercept) {
    fit.intercept = y_mean - dot(x_means, beta);
  }
  return fit;
}

RegressionFit ols_fit(const DataMatrix& data, std::size_t response, const FitOptions& options) {
  if (response >= data.n_cols()) throw InvalidArgument("response column out of range");
  if (data.n_cols() < 2) throw InvalidArgument("need at least one predictor");
  return ols_fit(data.drop(response), data.column(response), options,
                 data.col_names()[response]);
}

double two_sided_p_value(double t, std::size_t dof) {
  if (dof == 0) throw InvalidArgument("t test needs at least one degree of freedom");
  if (std::isnan(t)) return 1.0;
  if (std::isinf(t)) return 0.0;
  const boost::math::students_t dist(static_cast<double>(dof));
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

std::vector<double> beta_from_concentration(const SymMatrix& theta, std::size_t node) {
  if (node >= theta.dim()) throw InvalidArgument("node out of range");
  const double tii = theta(node, node);
  if (!(tii > 0.0))
    throw NotPositiveDefinite("concentration diagonal " + std::to_string(tii) + " at node " +
                              std::to_string(node));
  std::vector<double> beta;
  beta.reserve(theta.dim() - 1);
  for (std::size_t j = 0; j < theta.dim(); ++j)
    if (j != node) beta.push_back(-theta(node, j) / tii);
  return beta;
}

double beta_3var(double r13, double r12, double r32) {
  if (!std::isfinite(r13) || !std::isfinite(r32))
    throw DegenerateCorrelation("correlations must be finite");
  if (!(std::abs(r12) < 1.0))
    throw DegenerateCorrelation("predictor correlation " + std::to_string(r12) +
                                " not in (-1, 1)");
  const double denom = 1.0 - r12 * r12;
  if (denom <= 1e-12) throw DegenerateCorrelation("predictors are (nearly) collinear");
  return (r13 - r12 * r32) / denom;
}

ProjectedDesign type1_project(const DataMatrix& X, std::span<const std::size_t> order,
                              bool center) {
  const std::size_t n = X.n_rows();
  const std::size_t p = X.n_cols();
  if (order.size() != p) throw InvalidArgument("type-I order must list every column once");
  std::vector<bool> seen(p, false);
  for (std::size_t c : order) {
    if (c >= p || seen[c]) throw InvalidArgument("type-I order is not a permutation");
    seen[c] = true;
  }

  const std::vector<double> means = center ? column_means(X) : std::vector<double>(p, 0.0);
  std::vector<std::vector<double>> q;
  q.reserve(p);
  std::vector<double> q_norm2;
  for (std::size_t k = 0; k < p; ++k) {
    const std::size_t col = order[k];
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = X(i, col) - means[col];
    const double original2 = dot(v, v);

    // Modified Gram-Schmidt, applied twice for orthogonality at large n.
    for (int pass = 0; pass < 2 && k > 0; ++pass) {
      for (std::size_t m = 0; m < k; ++m) {
        const double coef = dot(q[m], v) / q_norm2[m];
        for (std::size_t i = 0; i < n; ++i) v[i] -= coef * q[m][i];
      }
    }
    const double norm2 = dot(v, v);
    if (!(original2 > 0.0) || norm2 <= 1e-20 * original2)
      throw RankDeficient("column '" + X.col_names()[col] + "' at type-I step " +
                          std::to_string(k + 1) + " lies in the span of earlier columns");
    q_norm2.push_back(norm2);
    q.push_back(std::move(v));
  }

  ProjectedDesign out;
  out.order.assign(order.begin(), order.end());
  std::vector<std::string> names;
  for (std::size_t c : order) names.push_back(X.col_names()[c]);
  out.columns = DataMatrix::from_columns(q, std::move(names));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < a; ++b)
      out.gram_offdiag_max = std::max(out.gram_offdiag_max, std::abs(dot(q[a], q[b])));
  return out;
}

}  // namespace lvnet
