#include "lvnet/lasso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lvnet/errors.hpp"
#include "lvnet/linalg.hpp"
#include "lvnet/nodewise.hpp"

namespace lvnet {

double soft_threshold(double z, double gamma) {
  if (z > gamma) return z - gamma;
  if (z < -gamma) return z + gamma;
  return 0.0;
}

namespace {

struct Centered {
  Matrix x;  // column-major content stored as p x n for contiguous columns
  std::vector<double> y;
  std::vector<double> x_means;
  double y_mean = 0.0;
};

Centered center(const DataMatrix& X, std::span<const double> y) {
  const std::size_t n = X.n_rows();
  const std::size_t p = X.n_cols();
  if (y.size() != n) throw InvalidArgument("response length does not match the rows");
  Centered c;
  c.x_means = column_means(X);
  c.y_mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  c.x = Matrix(p, n);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < n; ++i) c.x(j, i) = X(i, j) - c.x_means[j];
  c.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.y[i] = y[i] - c.y_mean;
  return c;
}

}  // namespace

double lasso_max_penalty(const DataMatrix& X, std::span<const double> y) {
  const Centered c = center(X, y);
  const double n = static_cast<double>(X.n_rows());
  double worst = 0.0;
  for (std::size_t j = 0; j < X.n_cols(); ++j)
    worst = std::max(worst, std::abs(dot(c.x.row(j), c.y)) / n);
  return worst;
}

LassoFit lasso_fit(const DataMatrix& X, std::span<const double> y, const LassoOptions& options,
                   std::string response) {
  if (!(options.penalty >= 0.0) || !std::isfinite(options.penalty))
    throw InvalidArgument("lasso penalty must be finite and >= 0");
  if (options.max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
  if (!(options.tol > 0.0)) throw InvalidArgument("lasso tolerance must be positive");

  const std::size_t n = X.n_rows();
  const std::size_t p = X.n_cols();
  const Centered c = center(X, y);
  const double nd = static_cast<double>(n);

  std::vector<double> col_scale(p);  // x_j^T x_j / n
  for (std::size_t j = 0; j < p; ++j) col_scale[j] = dot(c.x.row(j), c.x.row(j)) / nd;

  std::vector<double> beta(p, 0.0);
  std::vector<double> resid = c.y;

  LassoFit fit;
  fit.response = std::move(response);
  fit.predictors = X.col_names();
  fit.penalty = options.penalty;

  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    double max_change = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      if (col_scale[j] == 0.0) continue;  // constant column stays at zero
      const auto xj = c.x.row(j);
      const double z = dot(xj, resid) / nd + col_scale[j] * beta[j];
      const double updated = soft_threshold(z, options.penalty) / col_scale[j];
      const double delta = updated - beta[j];
      if (delta != 0.0) {
        for (std::size_t i = 0; i < n; ++i) resid[i] -= delta * xj[i];
        beta[j] = updated;
        max_change = std::max(max_change, std::abs(delta));
      }
    }
    fit.iterations = iter;
    if (max_change < options.tol) {
      fit.converged = true;
      break;
    }
  }

  double kkt = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    const double grad = dot(c.x.row(j), resid) / nd;
    const double v = beta[j] != 0.0
                         ? std::abs(grad - options.penalty * std::copysign(1.0, beta[j]))
                         : std::max(0.0, std::abs(grad) - options.penalty);
    kkt = std::max(kkt, v);
  }
  fit.kkt_violation = kkt;
  fit.intercept = c.y_mean - dot(c.x_means, beta);
  fit.coefficients = std::move(beta);
  return fit;
}

LassoNetworkResult lasso_network(const DataMatrix& data, double penalty, EdgeRule rule,
                                 const LassoNetworkOptions& options) {
  const std::size_t p = data.n_cols();
  if (p < 2) throw InvalidArgument("nodewise estimation needs at least two columns");

  LassoNetworkResult out;
  out.fits.resize(p);
  const LassoOptions fit_options{penalty, options.max_iter, options.tol};
  parallel_for(p, options.threads, [&](std::size_t i) {
    out.fits[i] = lasso_fit(data.drop(i), data.column(i), fit_options, data.col_names()[i]);
  });

  out.coefficients = Matrix(p, p);
  std::vector<std::vector<bool>> selected(p, std::vector<bool>(p, false));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0, j = 0; j < p; ++j) {
      if (j == i) continue;
      const double beta = out.fits[i].coefficients[k++];
      out.coefficients(i, j) = beta;
      selected[i][j] = beta != 0.0;
    }
  }
  out.graph = combine_directed(out.coefficients, selected, rule);
  return out;
}

PenaltySelection select_penalty_by_validation(const DataMatrix& train,
                                              const DataMatrix& validation,
                                              std::span<const double> grid,
                                              const LassoNetworkOptions& options) {
  if (grid.empty()) throw InvalidArgument("penalty grid is empty");
  if (train.n_cols() != validation.n_cols())
    throw InvalidArgument("training and validation data differ in columns");
  const std::size_t p = train.n_cols();
  const std::size_t m = validation.n_rows();

  PenaltySelection out;
  out.grid.assign(grid.begin(), grid.end());
  out.validation_error.assign(grid.size(), 0.0);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const LassoNetworkResult net = lasso_network(train, grid[g], EdgeRule::or_rule, options);
    double err = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      const LassoFit& fit = net.fits[i];
      double sse = 0.0;
      for (std::size_t r = 0; r < m; ++r) {
        double pred = fit.intercept;
        for (std::size_t k = 0, j = 0; j < p; ++j) {
          if (j == i) continue;
          pred += fit.coefficients[k++] * validation(r, j);
        }
        const double e = validation(r, i) - pred;
        sse += e * e;
      }
      err += sse / static_cast<double>(m);
    }
    out.validation_error[g] = err;
    if (err < best || (err == best && grid[g] > out.penalty)) {
      best = err;
      out.penalty = grid[g];
    }
  }
  return out;
}

}  // namespace lvnet
