#include "splq/family_c1.hpp"

#include <cmath>

#include "splq/errors.hpp"
#include "terms.hpp"

namespace splq {

using detail::combine;
using detail::ipow;
using detail::sum_terms;

double f_c1(int n, param_c1 p) {
  const double a = p.alpha, b = p.beta;
  return 1.0 + n * (n + 2.0) *
                   (a + 6.0 * (n * n + 2.0 * n - 1.0) * b -
                    3.0 * (n - 1.0) * n * ipow(n + 1.0, 2) * (n + 2.0) * (n + 3.0) * b * b);
}

double f1_c1(int n, param_c1 p) {
  const double a = p.alpha, b = p.beta;
  return a + 12.0 * b * ((n * n + 3.0 * n + 1.0) - n * ipow(n + 1.0, 2) * ipow(n + 2.0, 2) * (n + 3.0) * b);
}

double f2_c1(int n, param_c1 p) {
  const double b = p.beta;
  return b * (1.0 - 3.0 * n * (n + 1.0) * (n + 2.0) * (n + 3.0) * b);
}

namespace {

double h0(int n, param_c1 p) {
  const double a = p.alpha, b = p.beta;
  return 1.0 + n * (n - 1.0) * (a + (n + 1.0) * (n - 2.0) * b * (6.0 - 3.0 * b * (n + 2.0) * n * (n - 1.0) * (n - 3.0)));
}

double h1(int n, param_c1 p) {
  const double a = p.alpha, b = p.beta;
  return a + 12.0 * n * (n + 1.0) * b * (1.0 - (n - 1.0) * (n + 2.0) * (n * n + n + 3.0) * b);
}

double h2(int n, param_c1 p) {
  const double b = p.beta;
  return b * (1.0 - 3.0 * (n - 1.0) * n * (n + 1.0) * (n + 2.0) * b);
}

double h3(int n, param_c1 p) { return h0(n + 1, p) + 24.0 * n * (n + 1.0) * h2(n, p); }

double h4(int n, param_c1 p) {
  const double a = p.alpha, b = p.beta;
  return 1.0 + n * (n + 1.0) * (2.0 * a + 3.0 * (n - 1.0) * n * (n + 1.0) * (n + 2.0) * (13.0 * n * n + 13.0 * n - 18.0) * b * b);
}

}  // namespace

double h_c1(param_c1 left, param_c1 right, int n) {
  const double db = left.beta - right.beta;
  return 0.5 * (h0(n, left) * h0(n + 1, right) + h0(n, right) * h0(n + 1, left)) -
         36.0 * (n - 1.0) * n * n * (n + 1.0) * db * db;
}

eval_triple q_eval_c1(param_c1 p, int n, double x) {
  if (n < 0) return {};
  const double f = f_c1(n, p), f1 = f1_c1(n, p), f2 = f2_c1(n, p);
  // (F + n F1) P + F1 (1 - x) P' - 36 F2 P' + 12 F2 (1 - x) P''
  return sum_terms(poly_family::jacobi_2_0, n, x,
                   {{f + n * f1, 0.0, 0}, {f1 - 36.0 * f2, -f1, 1}, {12.0 * f2, -12.0 * f2, 2}});
}

eval_triple m_eval_c1(param_c1 left, param_c1 right, int n, double x) {
  if (n < 0) return {};
  const double hl = h0(n + 1, left), hr = h0(n + 1, right);
  const double bl = left.beta, br = right.beta;
  const double p0 = 0.5 * (h3(n, left) * hr + h3(n, right) * hl);
  const double u = h1(n, left) * hr, v = h1(n, right) * hl;
  const double s = 12.0 * h2(n, left) * hr, t = 12.0 * h2(n, right) * hl;
  // asymmetric part, zero when the two states agree
  const double k = -36.0 * (bl - br) * (bl - br) * n * (n + 1.0);
  const double g = 12.0 * (h2(n, right) * h4(n, left) - h2(n, left) * h4(n, right));
  const double e = 72.0 * n * (n + 1.0) * (bl - br) * (bl + br - 6.0 * (n - 1.0) * n * (n + 1.0) * (n + 2.0) * bl * br);
  return sum_terms(poly_family::legendre, n, x,
                   {{p0 + k * n * (n + 1.0), 0.0, 0},
                    {u - v + g, -u - v - 2.0 * k, 1},
                    {s + t + 2.0 * k, t - s + e, 2}});
}

reference_rule boundary_rule_c1(param_c1 p, int n, std::optional<double> omega) {
  const double w = omega.value_or(0.0);
  auto rooted = [&](double x) {
    const auto q = q_eval_c1(p, n, x);
    return omega ? combine(q, q_eval_c1(p, n - 1, x), w) : q;
  };
  reference_rule r;
  r.nodes = real_roots(rooted, n);
  const double f = f_c1(n, p);
  const double num = 8.0 * (n + 1.0) * f * f;
  for (double x : r.nodes) {
    const double den = n * (n + 2.0) * rooted(x).d1 * q_eval_c1(p, n - 1, x).value * (1.0 - x) * (1.0 - x);
    if (den == 0.0) throw degenerate_denominator("boundary weight denominator vanishes");
    r.weights.push_back(num / den);
  }
  return r;
}

namespace {

param_c1 step_plain(param_c1 p, int n) {
  const double a = p.alpha, b = p.beta;
  const double gamma = (n + 1.0) * (n + 2.0) *
                       (1.0 + n * (n + 3.0) * a + 6.0 * n * (n + 3.0) * (n * n + 3.0 * n - 1.0) * b -
                        3.0 * n * n * (n - 1.0) * (n + 1.0) * (n + 2.0) * ipow(n + 3.0, 2) * (n + 4.0) * b * b) /
                       2.0;
  if (gamma == 0.0) throw degenerate_denominator("Gamma vanishes in (alpha, beta) recursion");
  const double e = 1.0 + (n + 1.0) * (n + 2.0) * (a + 3.0 * n * (n + 3.0) * b * (2.0 - (n - 1.0) * (n + 1.0) * (n + 2.0) * (n + 4.0) * b));
  const double g = 1.0 - 3.0 * n * (n + 1.0) * (n + 2.0) * (n + 3.0) * b;
  const double inner =
      4.0 * (2.0 * n * n + 6.0 * n + 3.0) +
      n * (n + 3.0) *
          ((11.0 * n * n + 33.0 * n + 16.0) * a + 12.0 * (4.0 * ipow(n, 4) + 24.0 * ipow(n, 3) + 34.0 * n * n - 6.0 * n - 8.0) * b +
           3.0 * n * (n + 1.0) * (n + 2.0) * (n + 3.0) *
               (-4.0 * (n + 1.0) * (n + 2.0) * (2.0 * n * n + 6.0 * n - 5.0) * b * b -
                3.0 * (n - 1.0) * n * (n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0) * a * b * b +
                2.0 * (3.0 * n * n + 9.0 * n - 6.0) * a * b + a * a));
  return {-a + e * inner / (12.0 * gamma * gamma), b + e * g / (6.0 * (n + 1.0) * (n + 2.0) * gamma)};
}

param_c1 step_omega(param_c1 p, int nn, double w) {
  const double n = nn, a = p.alpha, b = p.beta;
  const double gamma =
      -(n + 2)*(1 + n*(n + 3)*a + 6*n*(n + 3)*(ipow(n, 2) + 3*n - 1)*b -
      3*ipow(n, 2)*(n - 1)*(n + 1)*(n + 2)*ipow(n + 3, 2)*(n + 4)*ipow(b, 2)) +
      w*(-a*n*(n + 2)*(n - 1) +
      3*b*n*(n + 2)*(n - 1)*(b*n*(n - 2)*(n + 3)*(n + 1)*(n + 2)*(n - 1) -
      2*(ipow(n, 2) + n - 3)) - n);
  if (gamma == 0.0) throw degenerate_denominator("Gamma vanishes in (alpha, beta) recursion");
  const double big_a =
      ipow(w, 2)*(ipow(a, 2)*n*(n - 1)*(n + 2)*(n + 1)*(2*ipow(n, 2) + 2*n - 3) +
      a*(-3*ipow(b, 2)*ipow(n, 2)*(2*ipow(n, 2) + 2*n - 9)*(2*ipow(n, 2) + 2*n - 3)*ipow(n - 1, 2)*
          ipow(n + 2, 2)*ipow(n + 1, 2) +
      6*b*n*(n - 1)*(n + 2)*(n + 1)*(2*ipow(n, 2) + 2*n - 5)*(2*ipow(n, 2) + 2*n - 3) +
      (2*ipow(n, 2) + 2*n - 3)*(2*ipow(n, 2) + 2*n - 1)) +
      9*ipow(b, 4)*ipow(n, 4)*(n - 2)*(n + 3)*(2*ipow(n, 2) + 2*n - 9)*ipow(n + 2, 3)*ipow(n - 1, 3)*
          ipow(n + 1, 4) -
      36*ipow(b, 3)*ipow(n, 2)*(2*ipow(n, 4) + 4*ipow(n, 3) - 9*ipow(n, 2) - 11*n +
      6)*(ipow(n, 2) + n - 3)*ipow(n - 1, 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      6*ipow(b, 2)*n*(n - 1)*(n + 2)*(n + 1)*(10*ipow(n, 6) + 30*ipow(n, 5) - 35*ipow(n, 4) -
      120*ipow(n, 3) + 67*ipow(n, 2) + 132*n - 72) +
      12*b*(n + 2)*(n - 1)*(2*ipow(n, 2) + 2*n - 3)*(ipow(n, 2) + n - 1) + 2*ipow(n, 2) + 2*n -
      1) + w*(2*ipow(a, 2)*n*(n + 2)*(2*ipow(n, 2) + 4*n - 3)*ipow(n + 1, 2) +
      a*(-6*ipow(b, 2)*ipow(n, 2)*(n + 3)*(n - 1)*(4*ipow(n, 4) + 16*ipow(n, 3) + 20*ipow(n, 2) +
      8*n - 27)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      12*b*n*(n + 2)*ipow(n + 1, 2)*ipow(2*ipow(n, 2) + 4*n - 3, 2) +
      2*(2*ipow(n, 2) + 4*n - 1)*(2*ipow(n, 2) + 4*n + 3)) +
      18*ipow(b, 4)*ipow(n, 3)*(2*ipow(n, 4) + 8*ipow(n, 3) - 5*ipow(n, 2) - 26*n +
      12)*ipow(n + 3, 2)*ipow(n - 1, 2)*ipow(n + 2, 3)*ipow(n + 1, 4) -
      72*ipow(b, 3)*ipow(n, 2)*(n + 3)*(n - 1)*(2*ipow(n, 2) + 4*n - 7)*(ipow(n, 4) + 4*
          ipow(n, 3) + 4*ipow(n, 2) - 3)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      12*ipow(b, 2)*n*(n - 1)*(n + 3)*(n + 2)*(10*ipow(n, 4) + 40*ipow(n, 3) - ipow(n, 2) -
      82*n + 30)*ipow(n + 1, 2) + b*(72 + 600*ipow(n, 4) - 192*n + 288*ipow(n, 5) +
      480*ipow(n, 3) + 48*ipow(n, 6)) + 6 + 8*n + 4*ipow(n, 2)) +
      ipow(a, 2)*n*(n + 3)*(n + 2)*(n + 1)*(2*ipow(n, 2) + 6*n + 1) +
      a*(-3*ipow(b, 2)*ipow(n, 2)*(2*ipow(n, 2) + 6*n - 5)*(2*ipow(n, 2) + 6*n + 1)*ipow(n + 3, 2)*
          ipow(n + 2, 2)*ipow(n + 1, 2) +
      6*b*n*(n + 3)*(n + 2)*(n + 1)*(2*ipow(n, 2) + 6*n - 1)*(2*ipow(n, 2) + 6*n + 1) +
      (2*ipow(n, 2) + 6*n + 1)*(2*ipow(n, 2) + 6*n + 3)) +
      9*ipow(b, 4)*ipow(n, 3)*(n - 1)*(n + 4)*(2*ipow(n, 2) + 6*n - 5)*ipow(n + 3, 3)*ipow(n + 2, 4)*
          ipow(n + 1, 4) -
      36*ipow(b, 3)*ipow(n, 2)*(2*ipow(n, 4) + 12*ipow(n, 3) + 15*ipow(n, 2) - 9*n -
      8)*(ipow(n, 2) + 3*n - 1)*ipow(n + 3, 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      6*ipow(b, 2)*n*(n + 3)*(n + 2)*(n + 1)*(10*ipow(n, 6) + 90*ipow(n, 5) + 265*ipow(n, 4) +
      240*ipow(n, 3) - 53*ipow(n, 2) - 24*n + 12) +
      12*b*n*(n + 3)*(ipow(n, 2) + 3*n + 1)*(2*ipow(n, 2) + 6*n + 1) + 2*ipow(n, 2) + 6*n + 3;
  const double big_b =
      w*(-a*n*(n + 2)*(n + 1) + 3*ipow(b, 2)*ipow(n, 3)*(n - 1)*ipow(n + 2, 2)*ipow(n + 1, 3) -
      6*b*n*(n + 2)*(n + 1)*(ipow(n, 2) + n - 1) - 2 - n) - a*n*(n + 2)*(n + 1) +
      3*ipow(b, 2)*ipow(n, 2)*(n + 3)*ipow(n + 2, 3)*ipow(n + 1, 3) -
      6*b*n*(n + 2)*(n + 1)*(ipow(n, 2) + 3*n + 1) - n;
  return {4.0 / 3.0 * big_a / ipow((n + 1.0) * gamma, 2), big_b / (3.0 * gamma * ipow(n + 1.0, 2) * (n + 2.0) * n)};
}

}  // namespace

param_c1 step_ab(param_c1 p, int n, double lambda, std::optional<double> omega) {
  const param_c1 next = omega ? step_omega(p, n, *omega) : step_plain(p, n);
  return {next.alpha / lambda, next.beta / (lambda * lambda)};
}

quadratic omega_coefficients_c1(param_c1 p, int nn, double lambda) {
  const double n = nn, a = p.alpha, b = p.beta, lam = lambda;
  quadratic q;
  q.a = ipow(a, 2)*(3*ipow(lam, 4)*ipow(n, 2)*ipow(n - 1, 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      4*ipow(lam, 3)*ipow(n, 2)*(n - 1)*(n + 1)*(2*ipow(n, 2) + 2*n - 3)*ipow(n + 2, 2) +
      6*ipow(lam, 2)*ipow(n, 2)*(n - 1)*(n + 1)*(ipow(n, 2) + 2*n - 1)*ipow(n + 2, 2) -
      ipow(n, 2)*(n - 1)*(n + 3)*ipow(n + 2, 2)*ipow(n + 1, 2)) +
      a*(ipow(b, 2)*(-18*ipow(lam, 4)*ipow(n, 3)*(n - 2)*(n + 3)*ipow(n - 1, 3)*ipow(n + 2, 3)*
          ipow(n + 1, 3) -
      12*ipow(lam, 3)*ipow(n, 3)*(2*ipow(n, 2) + 2*n - 9)*(2*ipow(n, 2) + 2*n - 3)*ipow(n - 1, 2)*
          ipow(n + 1, 2)*ipow(n + 2, 3) -
      36*ipow(lam, 2)*ipow(n, 3)*(ipow(n, 2) + n - 3)*(ipow(n, 2) + 2*n - 1)*ipow(n - 1, 2)*
          ipow(n + 1, 2)*ipow(n + 2, 3) +
      6*ipow(n, 4)*(n + 3)*ipow(n - 1, 2)*ipow(n + 2, 3)*ipow(n + 1, 4)) +
      b*(36*ipow(lam, 4)*ipow(n, 2)*(ipow(n, 2) + n - 3)*ipow(n - 1, 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      24*ipow(lam, 3)*ipow(n, 2)*(n - 1)*(n + 1)*(2*ipow(n, 2) + 2*n - 5)*(2*ipow(n, 2) + 2*n - 3)*
          ipow(n + 2, 2) +
      72*ipow(lam, 2)*ipow(n, 2)*(n + 1)*(ipow(n, 2) + 2*n - 1)*ipow(n - 1, 2)*ipow(n + 2, 3) -
      12*ipow(n, 2)*(n - 1)*(n + 3)*(ipow(n, 2) + n - 1)*ipow(n + 2, 2)*ipow(n + 1, 2)) +
      6*ipow(lam, 4)*ipow(n, 2)*(n + 2)*(n - 1)*ipow(n + 1, 2) +
      4*ipow(lam, 3)*n*(n + 2)*(2*ipow(n, 2) + 2*n - 3)*(2*ipow(n, 2) + 2*n - 1) +
      12*ipow(lam, 2)*n*(n + 2)*(ipow(n, 2) + n - 1)*(ipow(n, 2) + 2*n - 1) -
      2*n*(n - 1)*(n + 3)*(n + 1)*ipow(n + 2, 2)) +
      ipow(b, 4)*(27*ipow(lam, 4)*ipow(n, 4)*ipow(n - 2, 2)*ipow(n + 3, 2)*ipow(n - 1, 4)*
          ipow(n + 2, 4)*ipow(n + 1, 4) +
      36*ipow(lam, 3)*ipow(n, 5)*(n - 2)*(n + 3)*(2*ipow(n, 2) + 2*n - 9)*ipow(n - 1, 3)*
          ipow(n + 2, 4)*ipow(n + 1, 4) +
      54*ipow(lam, 2)*ipow(n, 5)*(n - 2)*(n + 3)*(ipow(n, 2) + 2*n - 1)*ipow(n - 1, 3)*ipow(n + 2, 4)*
          ipow(n + 1, 4) -
      9*ipow(n, 6)*(n + 3)*ipow(n - 1, 3)*ipow(n + 2, 4)*ipow(n + 1, 6)) +
      ipow(b, 3)*(-108*ipow(lam, 4)*ipow(n, 3)*(n - 2)*(n + 3)*(ipow(n, 2) + n - 3)*ipow(n - 1, 3)*
          ipow(n + 2, 3)*ipow(n + 1, 3) -
      144*ipow(lam, 3)*ipow(n, 3)*(2*ipow(n, 4) + 4*ipow(n, 3) - 9*ipow(n, 2) - 11*n +
      6)*(ipow(n, 2) + n - 3)*ipow(n - 1, 2)*ipow(n + 1, 2)*ipow(n + 2, 3) -
      216*ipow(lam, 2)*ipow(n, 3)*(ipow(n, 2) + 2*n - 1)*(ipow(n, 4) + 2*ipow(n, 3) -
      4*ipow(n, 2) - 5*n + 3)*ipow(n - 1, 2)*ipow(n + 1, 2)*ipow(n + 2, 3) +
      36*ipow(n, 4)*(n + 3)*(ipow(n, 2) + n - 1)*ipow(n - 1, 2)*ipow(n + 2, 3)*ipow(n + 1, 4)) +
      ipow(b, 2)*(18*ipow(lam, 4)*ipow(n, 2)*(5*ipow(n, 4) + 10*ipow(n, 3) - 25*ipow(n, 2) -
      30*n + 54)*ipow(n - 1, 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      24*ipow(lam, 3)*ipow(n, 2)*(n - 1)*(n + 1)*(10*ipow(n, 6) + 30*ipow(n, 5) - 35*ipow(n, 4) -
      120*ipow(n, 3) + 67*ipow(n, 2) + 132*n - 72)*ipow(n + 2, 2) +
      36*ipow(lam, 2)*ipow(n, 2)*(n - 1)*(n + 1)*(ipow(n, 2) + 2*n - 1)*(5*ipow(n, 4) +
      10*ipow(n, 3) - 15*ipow(n, 2) - 20*n + 12)*ipow(n + 2, 2) -
      6*ipow(n, 2)*(n - 1)*(n + 3)*(5*ipow(n, 4) + 10*ipow(n, 3) - 5*ipow(n, 2) - 10*n +
      6)*ipow(n + 2, 2)*ipow(n + 1, 2)) +
      b*(36*ipow(lam, 4)*ipow(n, 2)*(n + 2)*(n - 1)*(ipow(n, 2) + n - 3)*ipow(n + 1, 2) +
      48*ipow(lam, 3)*n*(n - 1)*(2*ipow(n, 2) + 2*n - 3)*(ipow(n, 2) + n - 1)*ipow(n + 2, 2) +
      72*ipow(lam, 2)*n*(n + 2)*(ipow(n, 2) + 2*n - 1)*(ipow(n, 4) + 2*ipow(n, 3) -
      2*ipow(n, 2) - 3*n + 3) -
      12*n*(n - 1)*(n + 3)*(n + 1)*(ipow(n, 2) + n - 1)*ipow(n + 2, 2)) +
      3*ipow(lam, 4)*ipow(n, 2)*ipow(n + 1, 2) +
      4*ipow(lam, 3)*n*(n + 2)*(2*ipow(n, 2) + 2*n - 1) +
      6*ipow(lam, 2)*n*(n + 2)*(ipow(n, 2) + 2*n - 1) - (n - 1)*(n + 3)*ipow(n + 2, 2);
  q.b = ipow(a, 2)*(6*ipow(lam, 4)*ipow(n, 2)*(n - 1)*(n + 3)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      8*ipow(lam, 3)*ipow(n, 2)*(2*ipow(n, 2) + 4*n - 3)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      12*ipow(lam, 2)*ipow(n, 2)*(ipow(n, 2) + 2*n - 1)*ipow(n + 2, 2)*ipow(n + 1, 2) -
      2*ipow(n, 2)*(n - 1)*(n + 3)*ipow(n + 2, 2)*ipow(n + 1, 2)) +
      a*(ipow(b, 2)*(-36*ipow(lam, 4)*ipow(n, 3)*ipow(n - 1, 2)*ipow(n + 3, 2)*ipow(n + 2, 3)*
          ipow(n + 1, 4) -
      24*ipow(lam, 3)*ipow(n, 3)*(n - 1)*(n + 3)*(4*ipow(n, 4) + 16*ipow(n, 3) + 20*ipow(n, 2) +
      8*n - 27)*ipow(n + 1, 2)*ipow(n + 2, 3) -
      72*ipow(lam, 2)*ipow(n, 3)*(n - 1)*(n + 3)*(ipow(n, 2) + 2*n + 4)*(ipow(n, 2) + 2*n - 1)*
          ipow(n + 1, 2)*ipow(n + 2, 3) +
      12*ipow(n, 3)*(n - 1)*(n + 3)*(3 + 2*n + ipow(n, 2))*ipow(n + 2, 3)*ipow(n + 1, 4)) +
      b*(72*ipow(lam, 4)*ipow(n, 2)*(n - 1)*(n + 3)*(ipow(n, 2) + 2*n - 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      48*ipow(lam, 3)*ipow(n, 2)*ipow(n + 2, 2)*ipow(n + 1, 2)*ipow(2*ipow(n, 2) + 4*n - 3, 2) +
      144*ipow(lam, 2)*ipow(n, 2)*ipow(n + 2, 2)*ipow(n + 1, 2)*ipow(ipow(n, 2) + 2*n - 1, 2) -
      24*ipow(n, 3)*(n - 1)*(n + 3)*ipow(n + 1, 2)*ipow(n + 2, 3)) +
      12*ipow(lam, 4)*n*(n + 2)*(ipow(n, 2) + 2*n - 1)*ipow(n + 1, 2) +
      8*ipow(lam, 3)*n*(n + 2)*(2*ipow(n, 2) + 4*n - 1)*(2*ipow(n, 2) + 4*n + 3) +
      24*ipow(lam, 2)*n*(n + 2)*(ipow(n, 2) + 2*n + 2)*(ipow(n, 2) + 2*n - 1) -
      4*n*(n - 1)*(n + 3)*(n + 2)*ipow(n + 1, 2)) +
      ipow(b, 4)*(54*ipow(lam, 4)*ipow(n, 4)*(n + 4)*(n - 2)*ipow(n - 1, 3)*ipow(n + 3, 3)*
          ipow(n + 2, 4)*ipow(n + 1, 4) +
      72*ipow(lam, 3)*ipow(n, 4)*(2*ipow(n, 4) + 8*ipow(n, 3) - 5*ipow(n, 2) - 26*n +
      12)*ipow(n - 1, 2)*ipow(n + 3, 2)*ipow(n + 2, 4)*ipow(n + 1, 4) +
      108*ipow(lam, 2)*ipow(n, 4)*(ipow(n, 2) + 2*n - 2)*(ipow(n, 2) + 2*n - 1)*ipow(n - 1, 2)*
          ipow(n + 3, 2)*ipow(n + 2, 4)*ipow(n + 1, 4) -
      18*ipow(n, 5)*ipow(n - 1, 2)*ipow(n + 3, 2)*ipow(n + 2, 5)*ipow(n + 1, 6)) +
      ipow(b, 3)*(-216*ipow(lam, 4)*ipow(n, 3)*(ipow(n, 2) + 2*n - 5)*ipow(n - 1, 2)*ipow(n + 3, 2)*
          ipow(n + 2, 3)*ipow(n + 1, 4) -
      288*ipow(lam, 3)*ipow(n, 3)*(n - 1)*(n + 3)*(2*ipow(n, 2) + 4*n - 7)*(ipow(n, 4) + 4*
          ipow(n, 3) + 4*ipow(n, 2) - 3)*ipow(n + 1, 2)*ipow(n + 2, 3) -
      432*ipow(lam, 2)*ipow(n, 3)*(n - 1)*(n + 3)*(ipow(n, 2) + 2*n + 2)*(ipow(n, 2) + 2*n - 1)*
          (ipow(n, 2) + 2*n - 2)*ipow(n + 1, 2)*ipow(n + 2, 3) +
      72*ipow(n, 3)*(n - 1)*(n + 3)*(ipow(n, 4) + 4*ipow(n, 3) + 4*ipow(n, 2) - 3)*ipow(n + 2, 3)*
          ipow(n + 1, 4)) +
      ipow(b, 2)*(36*ipow(lam, 4)*ipow(n, 2)*(n - 1)*(n + 3)*(5*ipow(n, 4) + 20*ipow(n, 3) -
      13*ipow(n, 2) - 66*n + 16)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      48*ipow(lam, 3)*ipow(n, 2)*(n - 1)*(n + 3)*(10*ipow(n, 4) + 40*ipow(n, 3) - ipow(n, 2) -
      82*n + 30)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      72*ipow(lam, 2)*ipow(n, 2)*(ipow(n, 2) + 2*n - 1)*(5*ipow(n, 4) + 20*ipow(n, 3) -
      3*ipow(n, 2) - 46*n + 36)*ipow(n + 2, 2)*ipow(n + 1, 2) -
      12*ipow(n, 2)*(n - 1)*(n + 3)*(5*ipow(n, 4) + 20*ipow(n, 3) + 7*ipow(n, 2) - 26*n -
      12)*ipow(n + 2, 2)*ipow(n + 1, 2)) + b*(72*ipow(lam, 4)*n*(n + 2)*(ipow(n, 4) +
      4*ipow(n, 3) + 2*ipow(n, 2) - 4*n + 3)*ipow(n + 1, 2) + 96*ipow(lam, 3)*n*(n + 2)*(3 +
      25*ipow(n, 4) - 8*n + 12*ipow(n, 5) + 20*ipow(n, 3) + 2*ipow(n, 6)) +
      144*ipow(lam, 2)*n*(n + 2)*(ipow(n, 2) + 2*n - 1)*(ipow(n, 4) + 4*ipow(n, 3) +
      6*ipow(n, 2) + 4*n - 2) - 24*n*(n - 1)*(n + 3)*(n + 2)*ipow(n + 1, 4)) +
      6*ipow(lam, 4)*n*(n + 2)*ipow(n + 1, 2) +
      8*ipow(lam, 3)*n*(n + 2)*(2*ipow(n, 2) + 4*n + 3) +
      12*ipow(lam, 2)*(ipow(n, 2) + 2*n + 2)*(ipow(n, 2) + 2*n - 1) - 2*n*(n - 1)*(n + 3)*(n + 2);
  q.c = ipow(a, 2)*(3*ipow(lam, 4)*ipow(n, 2)*ipow(n + 3, 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      4*ipow(lam, 3)*ipow(n, 2)*(n + 3)*(n + 1)*(2*ipow(n, 2) + 6*n + 1)*ipow(n + 2, 2) +
      6*ipow(lam, 2)*ipow(n, 2)*(n + 3)*(n + 1)*(ipow(n, 2) + 2*n - 1)*ipow(n + 2, 2) -
      ipow(n, 2)*(n - 1)*(n + 3)*ipow(n + 2, 2)*ipow(n + 1, 2)) +
      a*(ipow(b, 2)*(-18*ipow(lam, 4)*ipow(n, 3)*(n - 1)*(n + 4)*ipow(n + 3, 3)*ipow(n + 2, 3)*
          ipow(n + 1, 3) -
      12*ipow(lam, 3)*ipow(n, 3)*(2*ipow(n, 2) + 6*n - 5)*(2*ipow(n, 2) + 6*n + 1)*ipow(n + 3, 2)*
          ipow(n + 1, 2)*ipow(n + 2, 3) -
      36*ipow(lam, 2)*ipow(n, 3)*(ipow(n, 2) + 2*n - 1)*(ipow(n, 2) + 3*n - 1)*ipow(n + 3, 2)*
          ipow(n + 1, 2)*ipow(n + 2, 3) +
      6*ipow(n, 3)*(n - 1)*ipow(n + 3, 2)*ipow(n + 2, 4)*ipow(n + 1, 4)) +
      b*(36*ipow(lam, 4)*ipow(n, 2)*(ipow(n, 2) + 3*n - 1)*ipow(n + 3, 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      24*ipow(lam, 3)*ipow(n, 2)*(n + 3)*(n + 1)*(2*ipow(n, 2) + 6*n - 1)*(2*ipow(n, 2) + 6*n + 1)*
          ipow(n + 2, 2) +
      72*ipow(lam, 2)*ipow(n, 3)*(n + 1)*(ipow(n, 2) + 2*n - 1)*ipow(n + 3, 2)*ipow(n + 2, 2) -
      12*ipow(n, 2)*(n - 1)*(n + 3)*(ipow(n, 2) + 3*n + 1)*ipow(n + 2, 2)*ipow(n + 1, 2)) +
      6*ipow(lam, 4)*n*(n + 3)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      4*ipow(lam, 3)*n*(n + 2)*(2*ipow(n, 2) + 6*n + 1)*(2*ipow(n, 2) + 6*n + 3) +
      12*ipow(lam, 2)*n*(n + 2)*(ipow(n, 2) + 3*n + 1)*(ipow(n, 2) + 2*n - 1) -
      2*ipow(n, 2)*(n - 1)*(n + 3)*(n + 2)*(n + 1)) +
      ipow(b, 4)*(27*ipow(lam, 4)*ipow(n, 4)*ipow(n - 1, 2)*ipow(n + 4, 2)*ipow(n + 3, 4)*
          ipow(n + 2, 4)*ipow(n + 1, 4) +
      36*ipow(lam, 3)*ipow(n, 4)*(n - 1)*(n + 4)*(2*ipow(n, 2) + 6*n - 5)*ipow(n + 3, 3)*
          ipow(n + 1, 4)*ipow(n + 2, 5) +
      54*ipow(lam, 2)*ipow(n, 4)*(n - 1)*(n + 4)*(ipow(n, 2) + 2*n - 1)*ipow(n + 3, 3)*ipow(n + 1, 4)*
          ipow(n + 2, 5) -
      9*ipow(n, 4)*(n - 1)*ipow(n + 3, 3)*ipow(n + 2, 6)*ipow(n + 1, 6)) +
      ipow(b, 3)*(-108*ipow(lam, 4)*ipow(n, 3)*(n - 1)*(n + 4)*(ipow(n, 2) + 3*n - 1)*ipow(n + 3, 3)*
          ipow(n + 2, 3)*ipow(n + 1, 3) -
      144*ipow(lam, 3)*ipow(n, 3)*(2*ipow(n, 4) + 12*ipow(n, 3) + 15*ipow(n, 2) - 9*n -
      8)*(ipow(n, 2) + 3*n - 1)*ipow(n + 3, 2)*ipow(n + 1, 2)*ipow(n + 2, 3) -
      216*ipow(lam, 2)*ipow(n, 3)*(ipow(n, 2) + 2*n - 1)*(ipow(n, 4) + 6*ipow(n, 3) +
      8*ipow(n, 2) - 3*n - 3)*ipow(n + 3, 2)*ipow(n + 1, 2)*ipow(n + 2, 3) +
      36*ipow(n, 3)*(n - 1)*(ipow(n, 2) + 3*n + 1)*ipow(n + 3, 2)*ipow(n + 2, 4)*ipow(n + 1, 4)) +
      ipow(b, 2)*(18*ipow(lam, 4)*ipow(n, 2)*(5*ipow(n, 4) + 30*ipow(n, 3) + 35*ipow(n, 2) -
      30*n + 14)*ipow(n + 3, 2)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      24*ipow(lam, 3)*ipow(n, 2)*(n + 3)*(n + 1)*(10*ipow(n, 6) + 90*ipow(n, 5) +
      265*ipow(n, 4) + 240*ipow(n, 3) - 53*ipow(n, 2) - 24*n + 12)*ipow(n + 2, 2) +
      36*ipow(lam, 2)*ipow(n, 2)*(n + 3)*(n + 1)*(ipow(n, 2) + 2*n - 1)*(5*ipow(n, 4) +
      30*ipow(n, 3) + 45*ipow(n, 2) - 8)*ipow(n + 2, 2) -
      6*ipow(n, 2)*(n - 1)*(n + 3)*(5*ipow(n, 4) + 30*ipow(n, 3) + 55*ipow(n, 2) + 30*n +
      6)*ipow(n + 2, 2)*ipow(n + 1, 2)) +
      b*(36*ipow(lam, 4)*n*(n + 3)*(ipow(n, 2) + 3*n - 1)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      48*ipow(lam, 3)*ipow(n, 2)*(n + 3)*(n + 2)*(ipow(n, 2) + 3*n + 1)*(2*ipow(n, 2) + 6*n + 1) +
      72*ipow(lam, 2)*n*(n + 2)*(ipow(n, 2) + 2*n - 1)*(ipow(n, 4) + 6*ipow(n, 3) +
      10*ipow(n, 2) + 3*n + 1) -
      12*ipow(n, 2)*(n - 1)*(n + 3)*(n + 2)*(n + 1)*(ipow(n, 2) + 3*n + 1)) +
      3*ipow(lam, 4)*ipow(n + 2, 2)*ipow(n + 1, 2) +
      4*ipow(lam, 3)*n*(n + 2)*(2*ipow(n, 2) + 6*n + 3) +
      6*ipow(lam, 2)*n*(n + 2)*(ipow(n, 2) + 2*n - 1) - ipow(n, 2)*(n - 1)*(n + 3);
  return q;
}

double omega_pair_c1(param_c1 p, int n, double lambda, branch br) {
  const auto q = omega_coefficients_c1(p, n, lambda);
  const double disc = q.b * q.b - 4.0 * q.a * q.c;
  if (disc < 0.0) throw negative_discriminant("no real omega for this pair");
  if (q.a == 0.0) throw degenerate_denominator("leading omega coefficient vanishes");
  const double root = std::sqrt(disc);
  // pair the two roots without subtracting nearly equal terms
  const double t = -0.5 * (q.b + std::copysign(root, q.b));
  const double big = t / q.a;
  const double small = t != 0.0 ? q.c / t : big;
  const bool plus_is_big = q.b < 0.0;
  return (br == branch::plus) == plus_is_big ? big : small;
}

reference_rule middle_rule_c1(param_c1 left, param_c1 right, int n, double omega) {
  auto rooted = [&](double x) {
    return combine(m_eval_c1(left, right, n, x), m_eval_c1(left, right, n - 1, x), omega);
  };
  reference_rule r;
  r.nodes = real_roots(rooted, n);
  const double h = h_c1(left, right, n);
  for (double x : r.nodes) {
    const double den = n * rooted(x).d1 * m_eval_c1(left, right, n - 1, x).value;
    if (den == 0.0) throw degenerate_denominator("middle weight denominator vanishes");
    r.weights.push_back(2.0 * h * h / den);
  }
  return r;
}

namespace {

struct pair_eq {
  double a, b, c, dd;
};

// the two equations quadratic in beta_{R,M} and linear in alpha_{R,M}
pair_eq pair_coefficients(param_c1 p, int nn) {
  const double n = nn, a = p.alpha, b = p.beta;
  pair_eq e;
  e.a = 9.0 * n * n * ipow(n + 2.0, 2) * ipow(n + 1.0, 4) *
        (-a * (n + 3.0) * (n - 1.0) + 3.0 * b * b * n * (n + 4.0) * (n - 2.0) * (n + 2.0) * ipow(n + 3.0, 2) * ipow(n - 1.0, 2) -
         6.0 * b * (n + 3.0) * (n - 1.0) * (n * n + 2.0 * n - 4.0) - 1.0);
  e.b = 18.0 * n * (n + 2.0) * ipow(n + 1.0, 2) *
        (a * (n * n + 2.0 * n - 1.0) - 3.0 * b * b * n * (n - 1.0) * (n + 3.0) * (n + 2.0) * (n * n + 2.0 * n - 4.0) * ipow(n + 1.0, 2) +
         6.0 * b * (n * n + 2.0 * n - 2.0) * (n * n + 2.0 * n - 1.0) + 1.0);
  e.c = 3.0 * (a * ipow(n + 1.0, 2) - 3.0 * b * b * n * n * ipow(n + 2.0, 2) * ipow(n + 1.0, 4) + 6.0 * b * n * (n + 2.0) * ipow(n + 1.0, 2) + 1.0);
  e.dd = 3.0 * ipow(n + 1.0, 2) *
         (a * n * (n + 2.0) - 3.0 * b * b * n * n * (n + 3.0) * (n - 1.0) * ipow(n + 2.0, 2) * ipow(n + 1.0, 2) +
          6.0 * b * n * (n + 2.0) * (n * n + 2.0 * n - 1.0) + 1.0);
  return e;
}

}  // namespace

std::pair<param_c1, param_c1> middle_pair_params_c1(param_c1 left, param_c1 right, int n, double lambda) {
  const auto e1 = pair_coefficients(left, n);
  auto e2 = pair_coefficients(right, n);
  e2.b *= lambda * lambda;
  e2.c *= ipow(lambda, 4);
  e2.dd *= -ipow(lambda, 3);

  const double a3 = e2.dd * e1.a - e1.dd * e2.a;
  const double b3 = e2.dd * e1.b - e1.dd * e2.b;
  const double c3 = e2.dd * e1.c - e1.dd * e2.c;
  const double b4 = e2.a * e1.b - e1.a * e2.b;
  const double c4 = e2.a * e1.c - e1.a * e2.c;
  const double d4 = e2.a * e1.dd - e1.a * e2.dd;

  const double sq = b3 * b3 - 4.0 * a3 * c3;
  if (sq < 0.0) throw negative_discriminant("no real beta for the middle pair");
  if (a3 == 0.0 || d4 == 0.0) throw degenerate_denominator("middle pair elimination is singular");
  const double beta_rm = (-b3 - std::sqrt(sq)) / (2.0 * a3);
  const double alpha_rm = -(c4 + b4 * beta_rm) / d4;
  return {{alpha_rm, beta_rm}, {-alpha_rm / lambda, beta_rm / (lambda * lambda)}};
}

double gegenbauer_q_c1(param_c1 p, int nn, double x) {
  const double n = nn, a = p.alpha, b = p.beta;
  const double e = 1.0 + (n + 1.0) * (n + 2.0) * (a + 3.0 * n * (n + 3.0) * b * (2.0 - (n - 1.0) * (n + 1.0) * (n + 2.0) * (n + 4.0) * b));
  return gegenbauer(nn, 2.5, x) * 6.0 * f_c1(nn, p) / (n + 2.0) / (2.0 * n + 3.0) +
         gegenbauer(nn - 1, 2.5, x) * 6.0 * e / (n + 1.0) / (n + 2.0) +
         gegenbauer(nn - 2, 2.5, x) * 6.0 * f_c1(nn + 1, p) / (n + 1.0) / (2.0 * n + 3.0);
}

namespace {

double j0(double n, param_c1 p) {
  const double a = p.alpha, b = p.beta;
  return 1.0 + (3.0 + n + n * n) * a + 6.0 * (6.0 + n * n + 2.0 * ipow(n, 3) + ipow(n, 4)) * b -
         3.0 * (n - 3.0) * (n - 2.0) * (n - 1.0) * n * (n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0) * b * b;
}

double j1(double n, param_c1 p) {
  const double a = p.alpha, b = p.beta;
  return 1.0 + n * (n + 1.0) * (a + 3.0 * (n - 1.0) * (n + 2.0) * b * (2.0 - (n - 2.0) * n * (n + 1.0) * (n + 3.0) * b));
}

}  // namespace

double gegenbauer_m_c1(param_c1 left, param_c1 right, int nn, double x) {
  const double n = nn;
  const double al = left.alpha, bl = left.beta, ar = right.alpha, br = right.beta;
  const double j = 0.5 * (j0(n, left) * j1(n, right) + j0(n, right) * j1(n, left)) +
                   108.0 * (n - 1.0) * n * (n + 1.0) * (n + 2.0) * (bl - br) * (bl - br);
  const double s = br + bl;
  const double c1 = (al - ar) * (3.0 * n * s * (n - 1.0) * (n + 1.0) * (n + 2.0) - 2.0) *
                    (3.0 * n * s * (n - 2.0) * (n - 1.0) * (n + 1.0) - 2.0);
  const double c3 = (al - ar) * (3.0 * n * s * (n - 1.0) * (n + 1.0) * (n + 2.0) - 2.0) *
                    (3.0 * n * s * (n + 1.0) * (n + 2.0) * (n + 3.0) - 2.0);
  auto f13 = [&](double m) {
    return (bl - br) * m * m *
           (48.0 - 144.0 * (m - 2.0) * (m + 2.0) * (m * m - 6.0) * ipow(m - 1.0, 2) * ipow(m + 1.0, 2) * bl * br +
            12.0 * (m - 1.0) * (m + 1.0) * (al + ar) - 48.0 * ipow(m - 1.0, 2) * ipow(m + 1.0, 2) * (br + bl) -
            9.0 * (m - 2.0) * (m + 2.0) * ipow(m - 1.0, 2) * ipow(m + 1.0, 2) * (3.0 * bl * ar + 3.0 * al * br + bl * al + ar * br));
  };
  auto c = [&](int k) { return gegenbauer(k, 2.5, x); };
  return c(nn) * 3.0 * h_c1(left, right, nn) / (2.0 * n + 1.0) / (2.0 * n + 3.0) -
         c(nn - 2) * 6.0 * j / (2.0 * n - 1.0) / (2.0 * n + 3.0) +
         c(nn - 4) * 3.0 * h_c1(left, right, nn + 1) / (2.0 * n - 1.0) / (2.0 * n + 1.0) +
         (c(nn - 1) * (c1 + f13(n)) - c(nn - 3) * (c3 + f13(n + 1.0))) * 3.0 / (2.0 * n + 1.0) / 4.0;
}

}  // namespace splq
