#include "splq/splinecheck.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "splq/engine.hpp"
#include "splq/errors.hpp"

namespace splq {

void spline_space::validate() const {
  if (continuity < 0 || degree <= continuity) throw validation_error("spline space needs degree > continuity >= 0");
  if (!(a < b)) throw validation_error("spline space needs a < b");
  double prev = a;
  for (double t : knots) {
    if (!(t > prev) || !(t < b)) throw validation_error("inner knots must increase strictly inside (a, b)");
    prev = t;
  }
}

int spline_space::dimension() const {
  return degree + 1 + static_cast<int>(knots.size()) * (degree - continuity);
}

double basis_element::operator()(double x) const {
  const double d = x - knot;
  if (truncated && d <= 0.0) return 0.0;
  return std::pow(d, power);
}

std::string basis_element::id() const {
  std::ostringstream os;
  os.precision(17);
  if (truncated)
    os << "(x-" << knot << ")_+^" << power;
  else
    os << "(x-" << knot << ")^" << power;
  return os.str();
}

std::vector<basis_element> basis(const spline_space& space) {
  space.validate();
  std::vector<basis_element> out;
  for (int j = 0; j <= space.degree; ++j) out.push_back({false, space.a, j});
  for (double t : space.knots)
    for (int m = space.continuity + 1; m <= space.degree; ++m) out.push_back({true, t, m});
  return out;
}

double exact_integral(const basis_element& e, const spline_space& space) {
  return std::pow(space.b - e.knot, e.power + 1) / (e.power + 1);
}

residual_report residuals(std::span<const double> x, std::span<const double> w, const spline_space& space) {
  if (x.size() != w.size()) throw validation_error("node and weight counts differ");
  residual_report r;
  r.min_weight = w.empty() ? 0.0 : *std::min_element(w.begin(), w.end());
  for (const auto& e : basis(space)) {
    residual_entry en;
    en.id = e.id();
    en.exact = exact_integral(e, space);
    for (size_t i = 0; i < x.size(); ++i) en.quadrature += w[i] * e(x[i]);
    en.residual = std::abs(en.quadrature - en.exact) / std::max(1.0, std::abs(en.exact));
    r.max_residual = std::max(r.max_residual, en.residual);
    r.per_basis.push_back(std::move(en));
  }
  return r;
}

residual_report residuals(const quadrature_rule& rule, const spline_space& space) {
  const auto x = rule.nodes(), w = rule.weights();
  return residuals(x, w, space);
}

}  // namespace splq
