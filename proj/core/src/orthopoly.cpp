#include "splq/orthopoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "splq/errors.hpp"

namespace splq {

double jacobi(int n, double a, double b, double x) {
  if (n < 0) return 0.0;
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 0.5 * ((a - b) + (a + b + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (c - 2.0);
    const double a2 = (c - 1.0) * (a * a - b * b);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
    const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double gegenbauer(int n, double lam, double x) {
  if (n < 0) return 0.0;
  double c0 = 1.0;
  if (n == 0) return c0;
  double c1 = 2.0 * lam * x;
  for (int k = 2; k <= n; ++k) {
    const double c2 = (2.0 * x * (k + lam - 1.0) * c1 - (k + 2.0 * lam - 2.0) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

namespace {

double jacobi_derivative(int n, double a, double b, int k, double x) {
  if (k > n) return 0.0;
  double scale = 1.0;
  for (int j = 1; j <= k; ++j) scale *= 0.5 * (n + a + b + j);
  return scale * jacobi(n - k, a + k, b + k, x);
}

double gegenbauer_derivative(int n, double lam, int k, double x) {
  if (k > n) return 0.0;
  double scale = 1.0;
  for (int j = 0; j < k; ++j) scale *= 2.0 * (lam + j);
  return scale * gegenbauer(n - k, lam + k, x);
}

}  // namespace

double derivative(poly_family f, int n, int k, double x) {
  if (n < 0) return 0.0;
  switch (f) {
    case poly_family::legendre:
      return jacobi_derivative(n, 0.0, 0.0, k, x);
    case poly_family::jacobi_1_0:
      return jacobi_derivative(n, 1.0, 0.0, k, x);
    case poly_family::jacobi_2_0:
      return jacobi_derivative(n, 2.0, 0.0, k, x);
    case poly_family::gegenbauer_3_2:
      return gegenbauer_derivative(n, 1.5, k, x);
    case poly_family::gegenbauer_5_2:
      return gegenbauer_derivative(n, 2.5, k, x);
  }
  return 0.0;
}

eval_triple eval(poly_family f, int n, double x) {
  return {derivative(f, n, 0, x), derivative(f, n, 1, x), derivative(f, n, 2, x)};
}

std::vector<double> chebyshev_coefficients(const std::function<double(double)>& f, int m) {
  std::vector<double> fx(m), c(m, 0.0);
  const double pi = std::numbers::pi;
  for (int j = 0; j < m; ++j) fx[j] = f(std::cos(pi * (j + 0.5) / m));
  for (int k = 0; k < m; ++k) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += fx[j] * std::cos(pi * k * (j + 0.5) / m);
    c[k] = 2.0 * s / m;
  }
  c[0] *= 0.5;
  return c;
}

namespace {

std::vector<std::complex<double>> colleague_eigenvalues(const std::vector<double>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d == 1) return {std::complex<double>(-c[0] / c[1], 0.0)};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  m(0, 1) = 1.0;
  for (int i = 1; i < d - 1; ++i) {
    m(i, i - 1) = 0.5;
    m(i, i + 1) = 0.5;
  }
  m(d - 1, d - 2) += 0.5;
  for (int j = 0; j < d; ++j) m(d - 1, j) -= 0.5 * c[j] / c[d];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) throw convergence_failure("eigenvalue solver did not converge");
  std::vector<std::complex<double>> out(d);
  for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()[i];
  return out;
}

std::string count_message(int found, int degree, double lo, double hi) {
  std::ostringstream os;
  os << "found " << found << " real roots in [" << lo << ", " << hi << "], expected " << degree;
  return os.str();
}

}  // namespace

std::vector<double> real_roots(const poly_evaluator& f, int degree, double lo, double hi) {
  if (degree <= 0) return {};
  auto c = chebyshev_coefficients([&](double x) { return f(x).value; }, degree + 1);
  double cmax = 0.0;
  for (double v : c) cmax = std::max(cmax, std::abs(v));
  if (!(cmax > 0.0) || !std::isfinite(cmax))
    throw root_count_mismatch("polynomial vanishes identically or is not finite");
  if (std::abs(c[degree]) <= 1e-13 * cmax)
    throw root_count_mismatch("degree drop: leading Chebyshev coefficient vanishes");

  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> roots;
  for (auto z : colleague_eigenvalues(c)) {
    if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z.real()))) continue;
    double x = z.real();
    if (x < lo - 1e-6 || x > hi + 1e-6) continue;
    bool done = false;
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 60; ++it) {
      const auto t = f(x);
      if (t.value == 0.0) {
        done = true;
        break;
      }
      if (t.d1 == 0.0) break;
      const double step = t.value / t.d1;
      const double scale = std::max(1.0, std::abs(x));
      // stop at machine resolution, or once steps stop shrinking in the noise floor
      if (std::abs(step) <= 4.0 * eps * scale || (std::abs(step) < 1e-12 * scale && std::abs(step) >= 0.5 * prev)) {
        done = true;
        break;
      }
      x -= step;
      prev = std::abs(step);
    }
    if (!done) throw convergence_failure("Newton polish stalled near x = " + std::to_string(z.real()));
    const auto t = f(x);
    if (std::abs(t.value) > 1e-13 * std::max(1.0, std::abs(t.d1)))
      throw convergence_failure("root residual too large at x = " + std::to_string(x));
    if (x >= lo && x <= hi) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  for (size_t i = 1; i < roots.size(); ++i)
    if (roots[i] - roots[i - 1] <= 1e-9 * std::max(1.0, std::abs(roots[i])))
      throw root_count_mismatch("coincident roots near x = " + std::to_string(roots[i]));
  if (static_cast<int>(roots.size()) != degree)
    throw root_count_mismatch(count_message(static_cast<int>(roots.size()), degree, lo, hi));
  return roots;
}

}  // namespace splq
