#include "splq/realline.hpp"

#include <cmath>

#include "splq/errors.hpp"
#include "splq/family_c0.hpp"

namespace splq {

limit_rule realline_rule_c0(int n, int delta_sign) {
  if (n < 1) throw validation_error("real-line rule needs n >= 1");
  const double delta = (delta_sign < 0 ? -1.0 : 1.0) * std::sqrt((n + 2.0) / n);
  const auto f = poly_family::gegenbauer_3_2;
  auto r = [&](double x) {
    const auto p = eval(f, n, x), q = eval(f, n - 1, x);
    return eval_triple{p.value + delta * q.value, p.d1 + delta * q.d1, p.d2 + delta * q.d2};
  };
  limit_rule out;
  out.kind = limit_kind::c0_interior;
  out.nodes = real_roots(r, n);
  for (double x : out.nodes) {
    const double s = gegenbauer(n - 1, 1.5, x) * (2.0 * n + 1.0 + delta * x * n) - gegenbauer(n - 2, 1.5, x) * (n + 1.0) * x;
    out.weights.push_back(2.0 * (n + 1.0) * (2.0 * n + 1.0) / (r(x).d1 * s));
  }
  return out;
}

limit_rule realline_rule_c1(int n) {
  if (n < 2) throw validation_error("C^1 real-line rule needs n >= 2");
  const auto f = poly_family::gegenbauer_5_2;
  limit_rule out;
  out.kind = limit_kind::c1_interior;
  out.nodes.push_back(-1.0);
  out.weights.push_back(16.0 * (2.0 * n * n + 6.0 * n + 1.0) / (3.0 * n * (n + 1.0) * (n + 2.0) * (n + 3.0)));
  for (double x : real_roots([&](double x) { return eval(f, n - 1, x); }, n - 1)) {
    const double s = 1.0 - x * x;
    out.nodes.push_back(x);
    out.weights.push_back(2.0 / 9.0 * n * (n + 1.0) * (n + 2.0) /
                          (derivative(f, n - 1, 1, x) * gegenbauer(n - 2, 2.5, x) * s * s));
  }
  return out;
}

param_c1 half_map(int continuity, param_c1 p, int n, branch br) {
  if (continuity == 0) {
    const double w = omega_pair_c0({p.alpha}, n, 1.0);
    const auto p1 = step_alpha({p.alpha}, n, 1.0, w);
    return {step_alpha(p1, n - 1, 1.0).alpha, 0.0};
  }
  const double w = omega_pair_c1(p, n, 1.0, br);
  return step_ab(step_ab(p, n, 1.0, w), n - 1, 1.0);
}

namespace {

param_c1 full_map(int continuity, param_c1 p, int n) {
  if (continuity == 0) return {step_alpha({p.alpha}, n, 1.0).alpha, 0.0};
  return step_ab(p, n, 1.0);
}

double distance(param_c1 p, param_c1 q) { return std::abs(p.alpha - q.alpha) + std::abs(p.beta - q.beta); }

}  // namespace

fixed_point_result fixed_point(int continuity, sweep_mode mode, int n, int max_iterations, double tol) {
  if (continuity != 0 && continuity != 1) throw validation_error("continuity must be 0 or 1");
  if (n < 1 || (mode == sweep_mode::half && n < 2)) throw validation_error("n too small for this map");
  auto map = [&](param_c1 p) {
    return mode == sweep_mode::full ? full_map(continuity, p, n) : half_map(continuity, p, n);
  };
  fixed_point_result r;
  param_c1 p;
  try {
    for (r.iterations = 1; r.iterations <= max_iterations; ++r.iterations) {
      const auto q = map(p);
      const double d = distance(p, q);
      p = q;
      if (d < tol) {
        r.converged = true;
        break;
      }
    }
    r.residual = distance(p, map(p));
  } catch (const numeric_error&) {
    r.converged = false;
  }
  if (!r.converged) r.iterations = std::min(r.iterations, max_iterations);
  r.params = p;
  return r;
}

double seed_alpha_c1(double beta, int n) {
  const double x = 6.0 * (n * n + 2.0 * n - 1.0) * beta -
                   3.0 * (n - 1.0) * n * (n + 1.0) * (n + 1.0) * (n + 2.0) * (n + 3.0) * beta * beta;
  return -1.0 / (n * (n + 2.0)) - x;
}

std::optional<param_c1> second_fixed_point_c1(int n) {
  const auto first = fixed_point(1, sweep_mode::full, n);
  auto g = [&](param_c1 p) {
    const auto q = step_ab(p, n, 1.0);
    return param_c1{q.alpha - p.alpha, q.beta - p.beta};
  };
  const double scale = 1.0 / ((n + 1.0) * (n + 2.0));
  for (int i = -8; i <= 8; ++i) {
    for (int j = -8; j <= 8; ++j) {
      param_c1 p{i * scale / 2.0, j * scale * scale / 4.0};
      try {
        for (int it = 0; it < 60; ++it) {
          const auto f = g(p);
          const double ha = 1e-7 * std::max(1e-3, std::abs(p.alpha)), hb = 1e-7 * std::max(1e-5, std::abs(p.beta));
          const auto fa = g({p.alpha + ha, p.beta}), fb = g({p.alpha, p.beta + hb});
          const double j11 = (fa.alpha - f.alpha) / ha, j12 = (fb.alpha - f.alpha) / hb;
          const double j21 = (fa.beta - f.beta) / ha, j22 = (fb.beta - f.beta) / hb;
          const double det = j11 * j22 - j12 * j21;
          if (det == 0.0 || !std::isfinite(det)) break;
          p.alpha -= (j22 * f.alpha - j12 * f.beta) / det;
          p.beta -= (j11 * f.beta - j21 * f.alpha) / det;
          if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) break;
        }
        const auto f = g(p);
        if (std::abs(f.alpha) + std::abs(f.beta) < 1e-12 && distance(p, first.params) > 1e-6) return p;
      } catch (const numeric_error&) {
      }
    }
  }
  return std::nullopt;
}

}  // namespace splq
