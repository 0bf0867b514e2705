// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "golden.hpp"
#include "oracles.hpp"
#include "splq/engine.hpp"
#include "splq/errors.hpp"
#include "splq/family_c0.hpp"
#include "splq/family_c1.hpp"
#include "splq/realline.hpp"
#include "splq/splinecheck.hpp"

using namespace splq;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& summary) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, summary.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool criterion_fixture(int id, const golden::fixture& fx) {
  const auto t0 = clock_type::now();
  const partition part(fx.a, fx.b, fx.lengths);
  double worst = INFINITY;
  bool shape = false;
  try {
    const auto r = generate(fx.request, part);
    shape = r.flat.size() == fx.expected.size();
    worst = 0.0;
    for (size_t i = 0; shape && i < fx.expected.size(); ++i) {
      const auto& e = fx.expected[i];
      shape = r.flat[i].subinterval == e.subinterval;
      worst = std::max({worst, std::abs(r.flat[i].x - e.x) / std::abs(e.x), std::abs(r.flat[i].w - e.w) / std::abs(e.w)});
    }
  } catch (const std::exception& e) {
    std::printf("  %s\n", e.what());
  }
  const double dt = seconds_since(t0);
  const bool pass = shape && worst <= 1e-12 && dt < 1.0;
  report(id, pass,
         fmt("golden fixture %s, %zu nodes, max relative error %.3e (tol 1e-12), %.4f s (limit 1 s)", std::string(fx.name).c_str(),
             fx.expected.size(), worst, dt));
  return pass;
}

void criterion_3() {
  const partition p(-1.0, 1.0, {2.0});
  double worst = 0.0;
  int rules = 0;
  bool ok = true;
  for (int m = 1; m <= 6; ++m) {
    std::vector<double> x, w;
    oracle::gauss_legendre(m, x, w);
    const std::vector<rule_request> reqs{{0, m - 1, rule_family::full, 1, {}},
                                         {1, m - 1, rule_family::full, 1, {}},
                                         {0, m, rule_family::half, 1, {}},
                                         {1, m - 1, rule_family::half, 1, {}}};
    for (const auto& req : reqs) {
      if (req.nodes < 1) continue;
      try {
        const auto r = generate(req, p);
        if (r.flat.size() != size_t(m)) {
          ok = false;
          continue;
        }
        for (int i = 0; i < m; ++i)
          worst = std::max({worst, std::abs(r.flat[i].x - x[i]), std::abs(r.flat[i].w - w[i])});
        ++rules;
      } catch (const std::exception& e) {
        std::printf("  size %d: %s\n", m, e.what());
        ok = false;
      }
    }
  }
  report(3, ok && worst <= 1e-14,
         fmt("S = 1 rules of sizes 1-6 (%d rules over both continuities and families) vs Gauss-Legendre, max abs error "
             "%.3e (tol 1e-14)",
             rules, worst));
}

struct cell_key {
  int c, n, s;
  rule_family fam;
  auto operator<=>(const cell_key&) const = default;
};

const char* fam_name(rule_family f) { return f == rule_family::full ? "full" : "half"; }

// max over the basis of |Q - I| / |I|; every basis element is nonnegative so |I| > 0
double sharpness(const quadrature_rule& r, const partition& p, int c) {
  const spline_space sp{r.meta.degree + 1, c, p.a(), p.b(), p.inner_knots()};
  double worst = 0.0;
  for (const auto& e : residuals(r, sp).per_basis)
    worst = std::max(worst, std::abs(e.quadrature - e.exact) / std::abs(e.exact));
  return worst;
}

bool is_gauss_legendre(const quadrature_rule& r, const partition& p) {
  if (p.size() != 1) return false;
  std::vector<double> x, w;
  const int m = static_cast<int>(r.flat.size());
  oracle::gauss_legendre(m, x, w);
  const double h = 0.5 * (p.b() - p.a()), mid = 0.5 * (p.a() + p.b());
  for (int i = 0; i < m; ++i)
    if (std::abs(r.flat[i].x - (mid + h * x[i])) > 1e-13 * h || std::abs(r.flat[i].w - h * w[i]) > 1e-13 * h)
      return false;
  return true;
}

struct sweep_result {
  int cells = 0, draws = 0, generated = 0, infeasible = 0;
  int exact_fail = 0, sharp_fail = 0, gauss_legendre = 0;
  double worst_exact = 0.0, min_sharp = INFINITY, min_weight = INFINITY;
  int negative_weight_rules = 0;
  std::map<cell_key, int> infeasible_by_cell;
  std::vector<std::string> sharp_fail_detail;
  std::map<cell_key, std::pair<int, int>> excess_seen;  // excess, count
  bool counting_ok = true;
  double seconds = 0.0;
};

int expected_excess(int c, rule_family fam, int s) {
  if (fam == rule_family::full) return c == 0 ? 1 : 0;
  if (c == 0) return s % 2 == 0 ? 1 : 0;
  return s % 2 == 0 ? 0 : 1;
}

sweep_result run_sweep() {
  sweep_result out;
  const auto t0 = clock_type::now();
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-std::log(2.0), std::log(2.0));
  for (int c = 0; c <= 1; ++c)
    for (auto fam : {rule_family::full, rule_family::half})
      for (int n = 1; n <= 4; ++n)
        for (int s = 1; s <= 8; ++s) {
          const cell_key key{c, n, s, fam};
          bool defined = false;
          for (int draw = 0; draw < 5; ++draw) {
            std::vector<double> l(s);
            for (auto& v : l) v = std::exp(u(rng));
            const partition p(l);
            const rule_request shape{c, n, fam, 1, {}};
            const auto middles = admissible_middles(shape, p);
            if (middles.empty()) break;
            defined = true;
            ++out.draws;
            bool built = false;
            for (int sm : middles) {
              rule_request req = shape;
              req.middle = sm;
              const auto pl = plan(req, p);
              if (pl.excess() != expected_excess(c, fam, s)) out.counting_ok = false;
              out.excess_seen[key] = {pl.excess(), out.excess_seen[key].second + 1};
              quadrature_rule r;
              try {
                r = generate(req, p);
              } catch (const numeric_error&) {
                continue;
              }
              built = true;
              ++out.generated;
              const double ex = residuals(r, spline_space{r.meta.degree, c, p.a(), p.b(), p.inner_knots()}).max_residual;
              out.worst_exact = std::max(out.worst_exact, ex);
              if (ex > 1e-9) ++out.exact_fail;
              double wmin = INFINITY;
              for (const auto& e : r.flat) wmin = std::min(wmin, e.w);
              out.min_weight = std::min(out.min_weight, wmin);
              if (wmin <= 0.0) ++out.negative_weight_rules;
              const double sh = sharpness(r, p, c);
              if (sh > 1e-6) {
                out.min_sharp = std::min(out.min_sharp, sh);
              } else if (is_gauss_legendre(r, p)) {
                ++out.gauss_legendre;
              } else {
                ++out.sharp_fail;
                out.sharp_fail_detail.push_back(fmt("c=%d %s N=%d S=%d S_M=%d draw %d: degree D+1 residual %.3e", c,
                                                    fam_name(fam), n, s, sm, draw, sh));
              }
              break;
            }
            if (!built) {
              ++out.infeasible;
              ++out.infeasible_by_cell[key];
            }
          }
          if (defined) ++out.cells;
        }
  out.seconds = seconds_since(t0);
  return out;
}

void criterion_4(const sweep_result& r) {
  const bool pass = r.exact_fail == 0 && r.sharp_fail == 0 && r.seconds < 60.0 && r.generated > 0;
  report(4, pass,
         fmt("%d cells, %d draws, %d rules generated, %d draws infeasible; max residual %.3e (tol 1e-9), %d not "
             "exact, %d exact at degree D+1; %.2f s (limit 60 s)",
             r.cells, r.draws, r.generated, r.infeasible, r.worst_exact, r.exact_fail, r.sharp_fail, r.seconds));
  std::printf("  smallest degree D+1 residual among sharp rules %.3e (threshold 1e-6)\n", r.min_sharp);
  std::printf("  %d single-subinterval rules coincide with Gauss-Legendre (exact at D+1 by construction, see criterion 3)\n",
              r.gauss_legendre);
  for (const auto& d : r.sharp_fail_detail) std::printf("  not sharp: %s\n", d.c_str());
  std::printf("  min weight over the sweep %.3e; rules with a nonpositive weight: %d (recorded, not asserted)\n",
              r.min_weight, r.negative_weight_rules);
  if (!r.infeasible_by_cell.empty()) {
    std::printf("  infeasible draws (no admissible middle yields nodes inside their subintervals):\n");
    for (const auto& [k, cnt] : r.infeasible_by_cell)
      std::printf("    c=%d %s N=%d S=%d: %d of 5\n", k.c, fam_name(k.fam), k.n, k.s, cnt);
  }
}

void criterion_5(const sweep_result& r) {
  int zero = 0, one = 0;
  for (const auto& [k, v] : r.excess_seen) (v.first == 0 ? zero : one)++;
  report(5, r.counting_ok && !r.excess_seen.empty(),
         fmt("2 T - dim over %zu cells: %d Gaussian (0), %d one-parameter (1), all match the counting law",
             r.excess_seen.size(), zero, one));
}

void criterion_6() {
  std::mt19937 rng(606);
  std::uniform_real_distribution<double> ua(-0.2, 0.5), ub(-0.003, 0.005), ux(-1.0, 1.0);
  std::uniform_int_distribution<int> un(1, 10);
  double worst[4] = {0, 0, 0, 0};
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); };
  for (int k = 0; k < 100; ++k) {
    const double x = ux(rng);
    const int n = un(rng);
    const double a = ua(rng), al = ua(rng), ar = ua(rng);
    worst[0] = std::max(worst[0], rel(q_eval_c0({a}, n, x).value, gegenbauer_q_c0({a}, n, x)));
    worst[1] = std::max(worst[1], rel(m_eval_c0({al}, {ar}, n, x).value, gegenbauer_m_c0({al}, {ar}, n, x)));
    const param_c1 p{ua(rng), ub(rng)}, q{ua(rng), ub(rng)};
    worst[2] = std::max(worst[2], rel(q_eval_c1(p, n, x).value, gegenbauer_q_c1(p, n, x)));
    worst[3] = std::max(worst[3], rel(m_eval_c1(p, q, n, x).value, gegenbauer_m_c1(p, q, n, x)));
  }
  const double w = *std::max_element(worst, worst + 4);
  report(6, w <= 1e-10,
         fmt("Jacobi vs Gegenbauer forms, 100 samples each, n <= 10: Q c0 %.2e, M c0 %.2e, Q c1 %.2e, M c1 %.2e (tol 1e-10)",
             worst[0], worst[1], worst[2], worst[3]));
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void criterion_7() {
  bool ok = true;
  int max_it = 0;
  double worst = 0.0, w1 = NAN;
  for (int n = 2; n <= 10; ++n) {
    const auto fp = fixed_point(1, sweep_mode::full, n, 200);
    max_it = std::max(max_it, fp.iterations);
    if (!fp.converged) {
      ok = false;
      std::printf("  n=%d: no convergence in 200 iterations\n", n);
      continue;
    }
    try {
      const auto rule = boundary_rule_c1(fp.params, n);
      const auto lim = realline_rule_c1(n);
      worst = std::max({worst, max_abs_diff(rule.nodes, lim.nodes), max_abs_diff(rule.weights, lim.weights)});
      if (n == 2) w1 = rule.weights[0];
    } catch (const std::exception& e) {
      ok = false;
      std::printf("  n=%d: %s\n", n, e.what());
    }
  }
  const bool w1_ok = std::abs(w1 - 14.0 / 15.0) <= 1e-10;
  report(7, ok && worst <= 1e-10 && w1_ok,
         fmt("C^1 fixed point for n = 2..10 within %d iterations (limit 200), interior rule vs closed form %.3e "
             "(tol 1e-10), n = 2 w1 = %.15f (14/15)",
             max_it, worst, w1));
}

void criterion_8() {
  const partition part(std::vector<double>(40, 1.0));
  double worst = 0.0, min_asym = INFINITY;
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    try {
      const auto r = generate({0, n, rule_family::full, 20, {}}, part);
      std::vector<double> x, w;
      for (const auto& e : r.flat)
        if (e.subinterval == 10) {
          x.push_back(2.0 * (e.x - 9.0) - 1.0);
          w.push_back(2.0 * e.w);
        }
      const auto lim = realline_rule_c0(n);
      worst = std::max({worst, max_abs_diff(x, lim.nodes), max_abs_diff(w, lim.weights)});
      if (n >= 2) {
        double asym = 0.0;
        for (size_t i = 0; i < x.size(); ++i) asym = std::max(asym, std::abs(x[i] + x[x.size() - 1 - i]));
        min_asym = std::min(min_asym, asym);
      }
    } catch (const std::exception& e) {
      ok = false;
      std::printf("  n=%d: %s\n", n, e.what());
    }
  }
  report(8, ok && worst <= 1e-8 && min_asym > 1e-6,
         fmt("uniform S = 40 C^0 rule, subinterval 10 vs closed form for n = 1..6: %.3e (tol 1e-8); node asymmetry "
             "for n >= 2 at least %.3e",
             worst, min_asym));
}

}  // namespace

int main() {
  criterion_fixture(1, golden::c1_full_nonuniform());
  criterion_fixture(2, golden::c0_half_pinned());
  criterion_3();
  const auto sweep = run_sweep();
  criterion_4(sweep);
  criterion_5(sweep);
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
