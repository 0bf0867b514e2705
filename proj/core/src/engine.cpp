#include "splq/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "splq/errors.hpp"
#include "splq/family_c0.hpp"

namespace splq {

partition::partition(double a, double b, std::vector<double> lengths) : a_(a), b_(b), lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw validation_error("partition needs at least one subinterval");
  if (!std::isfinite(a_) || !std::isfinite(b_) || !(a_ < b_))
    throw validation_error("interval must satisfy a < b with finite ends");
  double lo = lengths_.front(), hi = lengths_.front();
  for (size_t i = 0; i < lengths_.size(); ++i) {
    const double l = lengths_[i];
    if (!std::isfinite(l) || !(l > 0.0))
      throw validation_error("length of subinterval " + std::to_string(i + 1) + " must be positive");
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  if (hi / lo > 1e12) throw validation_error("subinterval length ratio exceeds 1e12");
  const double sum = std::accumulate(lengths_.begin(), lengths_.end(), 0.0);
  if (std::abs(sum - (b_ - a_)) > 1e-12 * (b_ - a_))
    throw validation_error("subinterval lengths do not add up to b - a");
  knots_.push_back(a_);
  double acc = a_;
  for (size_t i = 0; i + 1 < lengths_.size(); ++i) knots_.push_back(acc += lengths_[i]);
  knots_.push_back(b_);
}

partition::partition(std::vector<double> lengths)
    : partition(0.0, std::accumulate(lengths.begin(), lengths.end(), 0.0), lengths) {}

std::vector<double> partition::inner_knots() const { return {knots_.begin() + 1, knots_.end() - 1}; }

partition partition::reversed() const { return partition(a_, b_, {lengths_.rbegin(), lengths_.rend()}); }

std::vector<double> quadrature_rule::nodes() const {
  std::vector<double> out;
  for (const auto& n : flat) out.push_back(n.x);
  return out;
}

std::vector<double> quadrature_rule::weights() const {
  std::vector<double> out;
  for (const auto& n : flat) out.push_back(n.w);
  return out;
}

int rule_degree(int continuity, int nodes, rule_family family) {
  const bool full = family == rule_family::full;
  if (continuity == 0) return full ? 2 * nodes : 2 * nodes - 1;
  return full ? 2 * nodes + 1 : 2 * nodes;
}

int spline_dimension(int degree, int continuity, int subintervals) {
  return degree + 1 + (subintervals - 1) * (degree - continuity);
}

rule_plan plan(const rule_request& req, const partition& part) {
  const int c = req.continuity, n = req.nodes, s = part.size(), sm = req.middle;
  if (c != 0 && c != 1) throw validation_error("--continuity must be 0 or 1");
  if (n < 1) throw validation_error("--nodes must be at least 1");
  if (sm < 1 || sm > s) throw validation_error("--middle must lie in 1.." + std::to_string(s));

  rule_plan p;
  p.counts.assign(s, n);
  if (req.family == rule_family::full) {
    p.counts[sm - 1] = n + 1;
  } else {
    if (sm % 2 == 0)
      throw unsupported_configuration("half rules need an odd middle index, got " + std::to_string(sm));
    for (int k = 1; k < sm; ++k) p.counts[k - 1] = (k % 2 == 1) ? n : n - 1;
    if (s % 2 == 1) {
      for (int k = s; k > sm; --k) p.counts[k - 1] = ((s - k) % 2 == 0) ? n : n - 1;
      p.counts[sm - 1] = c == 0 ? n : n + 1;
    } else {
      for (int k = s; k > sm + 1; --k) p.counts[k - 1] = ((s - k) % 2 == 0) ? n : n - 1;
    }
  }
  p.total = std::accumulate(p.counts.begin(), p.counts.end(), 0);
  p.degree = rule_degree(c, n, req.family);
  p.dimension = spline_dimension(p.degree, c, s);
  if (p.excess() != 0 && p.excess() != 1)
    throw unsupported_configuration("node distribution does not fit the spline space");
  return p;
}

std::vector<int> admissible_middles(const rule_request& req, const partition& part) {
  std::vector<int> out;
  for (int sm = 1; sm <= part.size(); ++sm) {
    rule_request r = req;
    r.middle = sm;
    try {
      plan(r, part);
      out.push_back(sm);
    } catch (const validation_error&) {
    }
  }
  const double centre = 0.5 * (part.size() + 1);
  std::stable_sort(out.begin(), out.end(),
                   [&](int x, int y) { return std::abs(x - centre) < std::abs(y - centre); });
  return out;
}

namespace {

using state = param_c1;

// one construction with fixed omega branches; pair_cursor tracks progress for the branch search
class attempt {
 public:
  attempt(const rule_request& req, const partition& part, const rule_plan& pl, std::vector<branch> branches)
      : req_(req), part_(part), plan_(pl), branches_(std::move(branches)) {
    c_ = req.continuity;
    n_ = req.nodes;
    s_ = part.size();
    sm_ = req.middle;
  }

  static int pair_count(const rule_request& req, const partition& part) {
    if (req.continuity != 1 || req.family != rule_family::half) return 0;
    const int s = part.size(), sm = req.middle;
    const int right = s % 2 == 1 ? s - sm : s - sm - 1;
    return (sm - 1) / 2 + right / 2;
  }

  int pair_cursor() const { return pair_cursor_; }
  const std::vector<branch>& branches() const { return branches_; }

  void run_sweeps() {
    const bool full = req_.family == rule_family::full;
    std::vector<int> left, right;
    for (int k = 1; k < sm_; ++k) left.push_back(k);
    const int stop = (full || s_ % 2 == 1) ? sm_ : sm_ + 1;
    for (int k = s_; k > stop; --k) right.push_back(k);
    left_ = sweep(left, sm_, false);
    right_ = sweep(right, stop, true);
  }

  void close(double omega) {
    const bool full = req_.family == rule_family::full;
    if (full) {
      ref_[sm_] = at(sm_, [&] { return middle_rule(left_, right_, n_ + 1, c_ == 0 ? omega : 0.0); });
    } else if (s_ % 2 == 1) {
      ref_[sm_] = at(sm_, [&] {
        return c_ == 0 ? middle_rule(left_, right_, n_, 0.0) : middle_rule(left_, right_, n_ + 1, omega);
      });
    } else {
      const auto [rm, lm] = at(sm_, [&] { return middle_pair(omega); });
      ref_[sm_] = at(sm_, [&] { return middle_rule(left_, rm, n_, 0.0); });
      ref_[sm_ + 1] = at(sm_ + 1, [&] { return middle_rule(lm, right_, n_, 0.0); });
    }
  }

  // subintervals whose rule moves with the free parameter
  std::vector<int> free_subintervals() const {
    if (!plan_.has_free_parameter()) return {};
    if (req_.family == rule_family::half && s_ % 2 == 0) return {sm_, sm_ + 1};
    return {sm_};
  }

  // value of the polynomial rooted on subinterval s at reference abscissa xi
  double rooted_value(int s, double omega, double xi) const {
    if (req_.family == rule_family::half && s_ % 2 == 0) {
      const auto [rm, lm] = middle_pair(omega);
      return s == sm_ ? m_value(left_, rm, n_, xi) : m_value(lm, right_, n_, xi);
    }
    return m_value(left_, right_, n_ + 1, xi) + omega * m_value(left_, right_, n_, xi);
  }

  quadrature_rule finish(std::optional<double> free_value) const {
    quadrature_rule out;
    out.meta.degree = plan_.degree;
    out.meta.dimension = plan_.dimension;
    out.meta.free_value = free_value;
    out.meta.branches = branches_;
    const auto& t = part_.knots();
    for (const auto& [s, r] : ref_) {
      subinterval_rule sr;
      sr.index = s;
      const double l = part_.length(s);
      for (size_t i = 0; i < r.nodes.size(); ++i) {
        const double xi = std::clamp(r.nodes[i], -1.0, 1.0);
        sr.nodes.push_back(xi == 1.0 ? t[s] : std::min(t[s - 1] + (xi + 1.0) * l / 2.0, t[s]));
        sr.weights.push_back(r.weights[i] * l / 2.0);
        out.flat.push_back({s, sr.nodes.back(), sr.weights.back()});
      }
      if (static_cast<int>(sr.nodes.size()) != plan_.counts[s - 1]) {
        root_count_mismatch e("subinterval " + std::to_string(s) + " received the wrong number of nodes");
        e.set_subinterval(s);
        throw e;
      }
      out.per_subinterval.push_back(std::move(sr));
    }
    std::sort(out.flat.begin(), out.flat.end(), [](const auto& p, const auto& q) { return p.x < q.x; });
    for (size_t i = 1; i < out.flat.size(); ++i) {
      if (!(out.flat[i].x > out.flat[i - 1].x)) {
        root_count_mismatch e("coincident nodes at x = " + std::to_string(out.flat[i].x));
        e.set_subinterval(out.flat[i].subinterval);
        throw e;
      }
    }
    return out;
  }

 private:
  template <class F>
  static auto at(int s, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (numeric_error& e) {
      if (!e.subinterval()) e.set_subinterval(s);
      throw;
    }
  }

  reference_rule q_rule(const state& st, int n, std::optional<double> omega) const {
    if (c_ == 0) return boundary_rule_c0({st.alpha}, n, omega);
    return boundary_rule_c1(st, n, omega);
  }

  state step(const state& st, int n, double lambda, std::optional<double> omega) const {
    if (c_ == 0) return {step_alpha({st.alpha}, n, lambda, omega).alpha, 0.0};
    return step_ab(st, n, lambda, omega);
  }

  reference_rule middle_rule(const state& l, const state& r, int n, double omega) const {
    if (c_ == 0) return middle_rule_c0({l.alpha}, {r.alpha}, n, omega);
    return middle_rule_c1(l, r, n, omega);
  }

  double m_value(const state& l, const state& r, int n, double xi) const {
    if (c_ == 0) return m_eval_c0({l.alpha}, {r.alpha}, n, xi).value;
    return m_eval_c1(l, r, n, xi).value;
  }

  std::pair<state, state> middle_pair(double omega) const {
    const double lambda = part_.length(sm_ + 1) / part_.length(sm_);
    if (c_ == 0) {
      const auto [rm, lm] = middle_pair_params_c0(omega, lambda);
      return {{rm.alpha, 0.0}, {lm.alpha, 0.0}};
    }
    return middle_pair_params_c1(left_, right_, n_, lambda);
  }

  static reference_rule mirrored(reference_rule r) {
    std::reverse(r.nodes.begin(), r.nodes.end());
    std::reverse(r.weights.begin(), r.weights.end());
    for (double& x : r.nodes) x = -x;
    return r;
  }

  state sweep(const std::vector<int>& order, int next, bool reflect) {
    state st;
    auto emit = [&](int s, reference_rule r) { ref_[s] = reflect ? mirrored(std::move(r)) : std::move(r); };
    auto lam = [&](int from, int to) { return part_.length(to) / part_.length(from); };
    if (req_.family == rule_family::full) {
      for (size_t k = 0; k < order.size(); ++k) {
        const int s = order[k];
        const int nx = k + 1 < order.size() ? order[k + 1] : next;
        emit(s, at(s, [&] { return q_rule(st, n_, std::nullopt); }));
        st = at(s, [&] { return step(st, n_, lam(s, nx), std::nullopt); });
      }
      return st;
    }
    for (size_t k = 0; k + 1 < order.size(); k += 2) {
      const int s = order[k], s2 = order[k + 1];
      const int nx = k + 2 < order.size() ? order[k + 2] : next;
      const double l = lam(s, s2);
      const double w = at(s, [&] {
        if (c_ == 0) return omega_pair_c0({st.alpha}, n_, l);
        return omega_pair_c1(st, n_, l, branches_.at(pair_cursor_));
      });
      emit(s, at(s, [&] { return q_rule(st, n_, w); }));
      st = at(s, [&] { return step(st, n_, l, w); });
      emit(s2, n_ > 1 ? at(s2, [&] { return q_rule(st, n_ - 1, std::nullopt); }) : reference_rule{});
      st = at(s2, [&] { return step(st, n_ - 1, lam(s2, nx), std::nullopt); });
      if (c_ == 1) ++pair_cursor_;
    }
    return st;
  }

  const rule_request& req_;
  const partition& part_;
  const rule_plan& plan_;
  std::vector<branch> branches_;
  int c_, n_, s_, sm_;
  int pair_cursor_ = 0;
  state left_, right_;
  std::map<int, reference_rule> ref_;
};

// Runs f on attempts over all omega branch choices, plus first, earlier pairs varying slowest.
// A failure at pair k skips every choice sharing the first k+1 branches.
template <class F>
auto search_branches(const rule_request& req, const partition& part, const rule_plan& pl, F&& f) {
  const int pairs = attempt::pair_count(req, part);
  if (pairs > 20) throw unsupported_configuration("too many subinterval pairs for the branch search");
  const unsigned long long total = 1ull << pairs;
  std::exception_ptr first;
  unsigned long long mask = 0;
  while (mask < total) {
    std::vector<branch> br(pairs);
    for (int k = 0; k < pairs; ++k) br[k] = (mask >> (pairs - 1 - k)) & 1ull ? branch::minus : branch::plus;
    attempt at(req, part, pl, br);
    try {
      return f(at);
    } catch (const numeric_error&) {
      if (!first) first = std::current_exception();
      if (pairs == 0) break;
      const int shift = pairs - 1 - std::min(at.pair_cursor(), pairs - 1);
      mask = ((mask >> shift) + 1) << shift;
    }
  }
  std::rethrow_exception(first);
}

double solve_pin(attempt& at, const partition& part, double x_target) {
  const auto& t = part.knots();
  const double tol = 1e-14 * std::max({1.0, std::abs(part.a()), std::abs(part.b())});
  std::vector<double> candidates;
  std::vector<std::pair<int, double>> spots;
  for (int s : at.free_subintervals()) {
    if (x_target < t[s - 1] - tol || x_target > t[s] + tol) continue;
    const double xi = std::clamp(2.0 * (x_target - t[s - 1]) / part.length(s) - 1.0, -1.0, 1.0);
    spots.emplace_back(s, xi);
  }
  if (spots.empty())
    throw target_unreachable("x = " + std::to_string(x_target) + " is not in a subinterval moved by the free parameter");

  for (const auto& [s, xi] : spots) {
    auto g = [&](double w) { return at.rooted_value(s, w, xi); };
    const int m = 720;
    const double h = std::numbers::pi / m;
    double w0 = std::tan(-0.5 * std::numbers::pi + h), g0 = g(w0);
    for (int k = 2; k < m; ++k) {
      const double w1 = std::tan(-0.5 * std::numbers::pi + k * h), g1 = g(w1);
      if (g0 == 0.0) candidates.push_back(w0);
      if (g0 * g1 < 0.0) {
        double lo = w0, hi = w1, glo = g0;
        for (int it = 0; it < 40; ++it) {
          const double mid = 0.5 * (lo + hi), gm = g(mid);
          if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
          } else {
            hi = mid;
          }
        }
        // secant polish inside the bracket
        double a = lo, b = hi, ga = g(a), gb = g(b);
        for (int it = 0; it < 20 && gb != ga; ++it) {
          const double c = b - gb * (b - a) / (gb - ga);
          if (!(c >= std::min(lo, hi) - 1e-300) || !(c <= std::max(lo, hi) + 1e-300)) break;
          a = b;
          ga = gb;
          b = c;
          gb = g(b);
          if (gb == 0.0 || std::abs(b - a) <= 2e-16 * std::abs(b)) break;
        }
        candidates.push_back(std::abs(gb) <= std::abs(g(lo)) ? b : lo);
      }
      w0 = w1;
      g0 = g1;
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](double p, double q) { return std::abs(p) < std::abs(q); });
  return candidates.empty() ? std::nan("") : candidates.front();
}

bool has_node_at(const quadrature_rule& r, double x) {
  const double tol = 1e-12 * std::max(1.0, std::abs(x));
  return std::any_of(r.flat.begin(), r.flat.end(), [&](const auto& n) { return std::abs(n.x - x) <= tol; });
}

}  // namespace

double pin_free_parameter(const rule_request& req, const partition& part, double x_target) {
  const auto pl = plan(req, part);
  if (!pl.has_free_parameter()) throw unsupported_configuration("this rule family has no free parameter to pin");
  if (!(x_target >= part.a() && x_target <= part.b()))
    throw target_unreachable("pin target " + std::to_string(x_target) + " lies outside [a, b]");
  return search_branches(req, part, pl, [&](attempt& at) {
    at.run_sweeps();
    const double w = solve_pin(at, part, x_target);
    if (!std::isfinite(w)) throw target_unreachable("no free parameter value places a node at " + std::to_string(x_target));
    at.close(w);
    if (!has_node_at(at.finish(w), x_target))
      throw target_unreachable("pinned rule misses the target node at " + std::to_string(x_target));
    return w;
  });
}

quadrature_rule generate(const rule_request& req, const partition& part) {
  const auto pl = plan(req, part);
  std::optional<double> free_value;
  if (pl.has_free_parameter()) {
    switch (req.free.mode) {
      case free_parameter::kind::zero:
        free_value = 0.0;
        break;
      case free_parameter::kind::value:
        if (!std::isfinite(req.free.value)) throw validation_error("free parameter value must be finite");
        free_value = req.free.value;
        break;
      case free_parameter::kind::pin:
        free_value = pin_free_parameter(req, part, req.free.value);
        break;
    }
  } else if (req.free.mode != free_parameter::kind::zero) {
    throw unsupported_configuration("this rule family has no free parameter");
  }
  return search_branches(req, part, pl, [&](attempt& at) {
    at.run_sweeps();
    at.close(free_value.value_or(0.0));
    return at.finish(free_value);
  });
}

}  // namespace splq
