#include "lvnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "lvnet/errors.hpp"

namespace lvnet {

Matrix cholesky(const SymMatrix& m) {
  const std::size_t p = m.dim();
  Matrix L(p, p);
  for (std::size_t j = 0; j < p; ++j) {
    double pivot = m(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= L(j, k) * L(j, k);
    if (!(pivot > kPivotTolerance))
      {
      char buf[96];
      std::snprintf(buf, sizeof buf, "Cholesky pivot %.3g at index %zu", pivot, j);
      throw NotPositiveDefinite(buf);
    }
    const double ljj = std::sqrt(pivot);
    L(j, j) = ljj;
    for (std::size_t i = j + 1; i < p; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / ljj;
    }
  }
  return L;
}

namespace {

// Inverse of a lower-triangular matrix with positive diagonal.
Matrix invert_lower(const Matrix& L) {
  const std::size_t p = L.rows();
  Matrix inv(p, p);
  for (std::size_t j = 0; j < p; ++j) {
    inv(j, j) = 1.0 / L(j, j);
    for (std::size_t i = j + 1; i < p; ++i) {
      double s = 0.0;
      for (std::size_t k = j; k < i; ++k) s -= L(i, k) * inv(k, j);
      inv(i, j) = s / L(i, i);
    }
  }
  return inv;
}

}  // namespace

SymMatrix invert_pd(const SymMatrix& m) {
  const Matrix Linv = invert_lower(cholesky(m));
  // m^{-1} = L^{-T} L^{-1}; only the lower triangle is computed.
  const std::size_t p = m.dim();
  SymMatrix inv(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = i; k < p; ++k) s += Linv(k, i) * Linv(k, j);
      inv.set(i, j, s);
    }
  }
  return inv;
}

std::vector<double> solve_pd(const SymMatrix& m, std::span<const double> b) {
  if (b.size() != m.dim()) throw InvalidArgument("solve_pd: size mismatch");
  const Matrix L = cholesky(m);
  const std::size_t p = m.dim();
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < i; ++k) x[i] -= L(i, k) * x[k];
    x[i] /= L(i, i);
  }
  for (std::size_t i = p; i-- > 0;) {
    for (std::size_t k = i + 1; k < p; ++k) x[i] -= L(k, i) * x[k];
    x[i] /= L(i, i);
  }
  return x;
}

namespace {

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius(const Matrix& a) {
  const auto d = a.data();
  return std::sqrt(std::inner_product(d.begin(), d.end(), d.begin(), 0.0));
}

}  // namespace

EigenPair eigen_sym(const SymMatrix& m) {
  constexpr int kMaxSweeps = 100;
  const std::size_t p = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(p);
  // Absolute 1e-12 for unit-scale input; relative for large entries.
  const double target = 1e-12 * std::max(1.0, frobenius(a));

  int sweep = 0;
  while (sweep < kMaxSweeps && offdiag_norm(a) >= target) {
    ++sweep;
    for (std::size_t r = 0; r + 1 < p; ++r) {
      for (std::size_t q = r + 1; q < p; ++q) {
        const double arq = a(r, q);
        if (arq == 0.0) continue;
        const double theta = (a(q, q) - a(r, r)) / (2.0 * arq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        for (std::size_t k = 0; k < p; ++k) {
          const double akr = a(k, r);
          const double akq = a(k, q);
          a(k, r) = c * akr - s * akq;
          a(k, q) = s * akr + c * akq;
        }
        for (std::size_t k = 0; k < p; ++k) {
          const double ark = a(r, k);
          const double aqk = a(q, k);
          a(r, k) = c * ark - s * aqk;
          a(q, k) = s * ark + c * aqk;
        }
        a(r, q) = 0.0;
        a(q, r) = 0.0;
        for (std::size_t k = 0; k < p; ++k) {
          const double vkr = v(k, r);
          const double vkq = v(k, q);
          v(k, r) = c * vkr - s * vkq;
          v(k, q) = s * vkr + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenPair out;
  out.sweeps = sweep;
  out.eigenvalues.resize(p);
  out.eigenvectors = Matrix(p, p);
  for (std::size_t k = 0; k < p; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < p; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

SymMatrix sqrt_sym(const SymMatrix& m) {
  const EigenPair eig = eigen_sym(m);
  const std::size_t p = m.dim();
  std::vector<double> root(p);
  for (std::size_t k = 0; k < p; ++k) {
    const double l = eig.eigenvalues[k];
    if (l < -kEigenClampTolerance) throw NegativeEigenvalue(std::to_string(l));
    root[k] = std::sqrt(std::max(l, 0.0));
  }
  const Matrix& u = eig.eigenvectors;
  SymMatrix s(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < p; ++k) acc += u(i, k) * root[k] * u(j, k);
      s.set(i, j, acc);
    }
  }
  return s;
}

std::vector<double> column_means(const DataMatrix& data) {
  const std::size_t n = data.n_rows();
  std::vector<double> means(data.n_cols());
  for (std::size_t j = 0; j < data.n_cols(); ++j) {
    const double first = data(0, j);
    bool constant = true;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += data(i, j);
      constant = constant && data(i, j) == first;
    }
    if (constant) {
      means[j] = first;
      continue;
    }
    double mean = sum / static_cast<double>(n);
    // One refinement pass removes most of the summation rounding.
    double correction = 0.0;
    for (std::size_t i = 0; i < n; ++i) correction += data(i, j) - mean;
    means[j] = mean + correction / static_cast<double>(n);
  }
  return means;
}

SymMatrix sample_covariance(const DataMatrix& data, Denominator denominator) {
  const std::size_t n = data.n_rows();
  if (n < 2) throw TooFewRows("sample covariance needs at least 2 rows, got " + std::to_string(n));
  const std::size_t p = data.n_cols();
  const std::vector<double> means = column_means(data);

  Matrix centered(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) centered(i, j) = data(i, j) - means[j];

  const double denom = denominator == Denominator::n ? static_cast<double>(n)
                                                     : static_cast<double>(n - 1);
  SymMatrix cov(p);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += centered(i, a) * centered(i, b);
      cov.set(a, b, s / denom);
    }
  }
  return cov;
}

SymMatrix correlation_from_covariance(const SymMatrix& cov) {
  const std::size_t p = cov.dim();
  SymMatrix r(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (!(cov(i, i) > 0.0)) throw NotPositiveDefinite("zero or negative variance at " + std::to_string(i));
    r.set(i, i, 1.0);
    for (std::size_t j = 0; j < i; ++j) r.set(i, j, cov(i, j) / std::sqrt(cov(i, i) * cov(j, j)));
  }
  return r;
}

}  // namespace lvnet
