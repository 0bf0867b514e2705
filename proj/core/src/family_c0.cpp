#include "splq/family_c0.hpp"

#include <cmath>

#include "splq/errors.hpp"
#include "terms.hpp"

namespace splq {

using detail::combine;
using detail::sum_terms;

double f_c0(int n, double alpha) { return 1.0 + alpha * n * (n + 1); }

double h_c0(param_c0 left, param_c0 right, int n) {
  const double al = left.alpha, ar = right.alpha;
  return 1.0 + double(n) * n * (al + ar + (n - 1.0) * (n + 1.0) * al * ar);
}

eval_triple q_eval_c0(param_c0 p, int n, double x) {
  if (n < 0) return {};
  const double a = p.alpha;
  // (F + a n) P + a (1 - x) P'
  return sum_terms(poly_family::jacobi_1_0, n, x, {{f_c0(n, a) + a * n, 0.0, 0}, {a, -a, 1}});
}

eval_triple m_eval_c0(param_c0 left, param_c0 right, int n, double x) {
  if (n < 0) return {};
  const double al = left.alpha, ar = right.alpha;
  const double h = h_c0(left, right, n);
  const double h1 = al + ar + 2.0 * n * (n + 1.0) * al * ar;
  const double gl = al * f_c0(n, ar);
  const double gr = -ar * f_c0(n, al);
  // (H + n H1) P + gl (1 - x) P' + gr (1 + x) P'
  return sum_terms(poly_family::legendre, n, x, {{h + n * h1, 0.0, 0}, {gl + gr, gr - gl, 1}});
}

reference_rule boundary_rule_c0(param_c0 p, int n, std::optional<double> omega) {
  const double w = omega.value_or(0.0);
  auto rooted = [&](double x) {
    const auto q = q_eval_c0(p, n, x);
    return omega ? combine(q, q_eval_c0(p, n - 1, x), w) : q;
  };
  reference_rule r;
  r.nodes = real_roots(rooted, n);
  const double f = f_c0(n, p.alpha);
  const double num = 2.0 * (2 * n + 1) * f * f;
  for (double x : r.nodes) {
    const double den = n * (n + 1.0) * rooted(x).d1 * q_eval_c0(p, n - 1, x).value * (1.0 - x);
    if (den == 0.0) throw degenerate_denominator("boundary weight denominator vanishes");
    r.weights.push_back(num / den);
  }
  return r;
}

param_c0 step_alpha(param_c0 p, int n, double lambda, std::optional<double> omega) {
  const double a = p.alpha;
  const double w = omega.value_or(0.0);
  double gamma, next;
  if (!omega) {
    gamma = (n + 1.0) * (1.0 + n * (n + 2.0) * a);
    if (gamma == 0.0) throw degenerate_denominator("Gamma vanishes in alpha recursion");
    next = (1.0 + (n + 1.0) * (n + 1.0) * a) / ((n + 1.0) * gamma);
  } else {
    gamma = (n + 1.0) * (1.0 + n * (n + 2.0) * a) + w * n * (1.0 + (n - 1.0) * (n + 1.0) * a);
    if (gamma == 0.0) throw degenerate_denominator("Gamma vanishes in alpha recursion");
    next = (n * (1.0 + (n + 1.0) * (n + 1.0) * a) + w * (n + 1.0) * (1.0 + double(n) * n * a)) /
           (n * (n + 1.0) * gamma);
  }
  return {next / lambda};
}

double omega_pair_c0(param_c0 p, int n, double lambda) {
  const double a = p.alpha;
  const double num = n * (1.0 + (n + 1.0) * (n + 1.0) * a) + lambda * (n + 1.0) * (1.0 + n * (n + 2.0) * a);
  const double den = (n + 1.0) * (1.0 + double(n) * n * a) + lambda * n * (1.0 + (n - 1.0) * (n + 1.0) * a);
  if (den == 0.0) throw degenerate_denominator("omega denominator vanishes");
  return -num / den;
}

reference_rule middle_rule_c0(param_c0 left, param_c0 right, int n, double omega) {
  auto rooted = [&](double x) {
    return combine(m_eval_c0(left, right, n, x), m_eval_c0(left, right, n - 1, x), omega);
  };
  reference_rule r;
  r.nodes = real_roots(rooted, n);
  const double h = h_c0(left, right, n);
  for (double x : r.nodes) {
    const double den = n * rooted(x).d1 * m_eval_c0(left, right, n - 1, x).value;
    if (den == 0.0) throw degenerate_denominator("middle weight denominator vanishes");
    r.weights.push_back(2.0 * h * h / den);
  }
  return r;
}

std::pair<param_c0, param_c0> middle_pair_params_c0(double omega_free, double lambda) {
  return {{omega_free}, {-omega_free / lambda}};
}

double gegenbauer_q_c0(param_c0 p, int n, double x) {
  const double a = p.alpha;
  return (gegenbauer(n, 1.5, x) * f_c0(n, a) + gegenbauer(n - 1, 1.5, x) * f_c0(n + 1, a)) / (n + 1.0);
}

double gegenbauer_m_c0(param_c0 left, param_c0 right, int n, double x) {
  return (gegenbauer(n, 1.5, x) * h_c0(left, right, n) - gegenbauer(n - 2, 1.5, x) * h_c0(left, right, n + 1)) /
             (2.0 * n + 1.0) +
         gegenbauer(n - 1, 1.5, x) * (left.alpha - right.alpha);
}

}  // namespace splq
