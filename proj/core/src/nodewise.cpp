#include "lvnet/nodewise.hpp"

#include <cmath>
#include <string>

#include "lvnet/errors.hpp"

namespace lvnet {

Selector Selector::significance(double alpha, bool bonferroni) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
  return Selector{Kind::significance, alpha, bonferroni};
}

Selector Selector::magnitude(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) throw InvalidArgument("tolerance must be >= 0");
  return Selector{Kind::magnitude, tol, false};
}

namespace {

// Estimated partial correlation from the two directed coefficients. With
// exact OLS the product beta_ij * beta_ji equals rho_ij^2; when one side is
// zero (lasso) the other coefficient is used as is.
double edge_weight(double bij, double bji) {
  const double product = bij * bji;
  if (product > 0.0) return std::copysign(std::sqrt(product), bij);
  if (bij == 0.0) return bji;
  if (bji == 0.0) return bij;
  return std::abs(bij) >= std::abs(bji) ? bij : bji;
}

}  // namespace

Graph combine_directed(const Matrix& coefficients,
                       const std::vector<std::vector<bool>>& selected, EdgeRule rule) {
  const std::size_t p = coefficients.rows();
  Graph g(p, WeightKind::partial_correlation);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const bool keep = rule == EdgeRule::and_rule ? (selected[i][j] && selected[j][i])
                                                   : (selected[i][j] || selected[j][i]);
      if (!keep) continue;
      const double w = edge_weight(coefficients(i, j), coefficients(j, i));
      if (w != 0.0) g.add_edge(i, j, w);
    }
  }
  return g;
}

NodewiseResult nodewise_network(const DataMatrix& data, const Selector& selector, EdgeRule rule,
                                const NodewiseOptions& options) {
  const std::size_t p = data.n_cols();
  if (p < 2) throw InvalidArgument("nodewise estimation needs at least two columns");

  NodewiseResult out;
  out.fits.resize(p);
  parallel_for(p, options.threads, [&](std::size_t i) {
    out.fits[i] = ols_fit(data, i, FitOptions{options.mode, Denominator::n_minus_1});
  });

  double alpha = selector.threshold;
  if (selector.kind == Selector::Kind::significance && selector.bonferroni)
    alpha /= static_cast<double>(p * (p - 1));

  out.coefficients = Matrix(p, p);
  out.selected.assign(p, std::vector<bool>(p, false));
  for (std::size_t i = 0; i < p; ++i) {
    const RegressionFit& fit = out.fits[i];
    for (std::size_t k = 0, j = 0; j < p; ++j) {
      if (j == i) continue;
      const double beta = fit.coefficients[k];
      out.coefficients(i, j) = beta;
      if (selector.kind == Selector::Kind::magnitude) {
        out.selected[i][j] = std::abs(beta) > selector.threshold;
      } else {
        out.selected[i][j] = two_sided_p_value(fit.t_statistics[k], fit.dof) < alpha;
      }
      ++k;
    }
  }
  out.graph = combine_directed(out.coefficients, out.selected, rule);
  return out;
}

}  // namespace lvnet
