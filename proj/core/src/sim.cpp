#include "lvnet/sim.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "lvnet/errors.hpp"
#include "lvnet/linalg.hpp"
#include "lvnet/rng.hpp"

namespace lvnet {

namespace {

void require_rows(std::size_t n, std::size_t minimum) {
  if (n < minimum)
    throw InvalidArgument("sample size must be at least " + std::to_string(minimum) + ", got " +
                          std::to_string(n));
}

double covariance(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  double ma = 0.0;
  double mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += (a[i] - ma) * (b[i] - mb);
  return s / static_cast<double>(n - 1);
}

}  // namespace

UlvmSample sample_ulvm(const UlvmModel& model, std::size_t n, std::uint64_t seed) {
  require_rows(n, 2);
  const auto& l = model.loadings();
  const std::size_t p = l.size();
  NormalStream z(seed);
  Matrix x(n, p);
  std::vector<double> eta(n);
  for (std::size_t i = 0; i < n; ++i) {
    eta[i] = model.latent_mean() + z.next();
    for (std::size_t j = 0; j < p; ++j) x(i, j) = l[j] * eta[i] + z.next();
  }
  return {DataMatrix(std::move(x)), std::move(eta)};
}

DataMatrix sample_covariance_model(const SymMatrix& sigma, std::size_t n, std::uint64_t seed,
                                   std::vector<std::string> names) {
  require_rows(n, 2);
  cholesky(sigma);  // positive definiteness check
  const SymMatrix root = sqrt_sym(sigma);
  const std::size_t p = sigma.dim();
  NormalStream stream(seed);
  Matrix x(n, p);
  std::vector<double> z(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : z) v = stream.next();
    for (std::size_t a = 0; a < p; ++a) x(i, a) = dot(root.matrix().row(a), z);
  }
  return DataMatrix(std::move(x), std::move(names));
}

SymMatrix chain_concentration(std::size_t p, double offdiag, double diagonal) {
  if (p < 2) throw InvalidArgument("chain needs at least two nodes");
  SymMatrix theta(p);
  for (std::size_t i = 0; i < p; ++i) {
    theta.set(i, i, diagonal);
    if (i + 1 < p) theta.set(i, i + 1, offdiag);
  }
  return theta;
}

DataMatrix table1_dataset(std::size_t n, std::uint64_t seed) {
  require_rows(n, 2);
  NormalStream z(seed);
  std::vector<double> noise(n), x1(n), x2(n), y(n);
  for (auto& v : noise) v = z.next();
  for (auto& v : x1) v = z.next();
  for (std::size_t i = 0; i < n; ++i) x2[i] = Table1Design::x2_on_x1 * x1[i] + z.next();
  for (std::size_t i = 0; i < n; ++i)
    y[i] = Table1Design::beta1 * x1[i] + Table1Design::beta2 * x2[i] + noise[i];
  return DataMatrix::from_columns({x1, x2, y}, {"x1", "x2", "y"});
}

ExperimentReport run_table1(std::size_t n, std::uint64_t seed) {
  require_rows(n, 10);
  const DataMatrix data = table1_dataset(n, seed);
  const std::vector<std::size_t> predictors{0, 1};
  const DataMatrix design = data.select(predictors);
  const std::vector<double> y = data.column(2);

  ExperimentReport report;
  report.n = n;
  report.seed = seed;
  report.standard_fit = ols_fit(design, y, {}, "y");

  const ProjectedDesign projected = type1_project(design, predictors);
  std::vector<std::string> names{"x1", "x2p"};
  const DataMatrix projected_design(projected.columns.values(), names);
  report.projected_fit = ols_fit(projected_design, y, {}, "y");

  const std::vector<double> x1 = design.column(0);
  const std::vector<double> x2 = design.column(1);
  const std::vector<double> x2p = projected_design.column(1);
  auto& c = report.covariances;
  c.x1_y = covariance(x1, y);
  c.x2_y = covariance(x2, y);
  c.x2p_y = covariance(x2p, y);
  c.x1_x2 = covariance(x1, x2);
  c.x1_x2p = covariance(x1, x2p);
  c.var_y = covariance(y, y);
  return report;
}

std::string format_table1(const ExperimentReport& r) {
  std::ostringstream out;
  char line[256];
  const auto& s = r.standard_fit;
  const auto& q = r.projected_fit;
  std::snprintf(line, sizeof line, "n = %zu, seed = %llu\n", r.n,
                static_cast<unsigned long long>(r.seed));
  out << line;
  std::snprintf(line, sizeof line, "%-6s %-38s %-38s\n", "", "standard (type II)",
                "projected (type I)");
  out << line;
  std::snprintf(line, sizeof line, "%-6s %12s %12s %12s %12s %12s %12s\n", "", "estimate",
                "std. error", "cov(xi,y)", "estimate", "std. error", "cov(xi,y)");
  out << line;
  for (std::size_t k = 0; k < 2; ++k) {
    std::snprintf(line, sizeof line, "%-6s %12.5f %12.5f %12.5f %12.5f %12.5f %12.5f\n",
                  s.predictors[k].c_str(), s.coefficients[k], s.std_errors[k], s.covariances[k],
                  q.coefficients[k], q.std_errors[k], q.covariances[k]);
    out << line;
  }
  std::snprintf(line, sizeof line, "%-6s cov(x1,x2)  = %.5f, R2 = %.4f          cov(x1,x2p) = %.5f, R2 = %.4f\n",
                "", r.covariances.x1_x2, s.r_squared, r.covariances.x1_x2p, q.r_squared);
  out << line;
  std::snprintf(line, sizeof line, "%-6s R2 terms: %.5f + %.5f                R2 terms: %.5f + %.5f\n",
                "", s.contributions[0], s.contributions[1], q.contributions[0],
                q.contributions[1]);
  out << line;
  std::snprintf(line, sizeof line, "%-6s var(y) = %.5f\n", "", r.covariances.var_y);
  out << line;
  return out.str();
}

DataMatrix simulate(const SimSpec& spec) {
  require_rows(spec.n, 2);
  struct Visitor {
    const SimSpec& spec;
    DataMatrix operator()(const Table1Preset&) const { return table1_dataset(spec.n, spec.seed); }
    DataMatrix operator()(const UlvmModel& m) const {
      return sample_ulvm(m, spec.n, spec.seed).data;
    }
    DataMatrix operator()(const SymMatrix& sigma) const {
      return sample_covariance_model(sigma, spec.n, spec.seed);
    }
  };
  return std::visit(Visitor{spec}, spec.kind);
}

}  // namespace lvnet
