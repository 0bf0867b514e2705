#pragma once

#include <span>
#include <string>
#include <vector>

namespace splq {

struct quadrature_rule;

struct spline_space {
  int degree = 0;
  int continuity = 0;
  double a = 0.0;
  double b = 1.0;
  std::vector<double> knots;  // inner knots, strictly increasing inside (a, b)

  void validate() const;
  int dimension() const;
};

// (x - a)^power when knot is unset, else (x - knot)_+^power
struct basis_element {
  bool truncated = false;
  double knot = 0.0;
  int power = 0;

  double operator()(double x) const;
  std::string id() const;
};

std::vector<basis_element> basis(const spline_space& space);

double exact_integral(const basis_element& e, const spline_space& space);

struct residual_entry {
  std::string id;
  double exact = 0.0;
  double quadrature = 0.0;
  double residual = 0.0;
};

struct residual_report {
  std::vector<residual_entry> per_basis;
  double max_residual = 0.0;
  double min_weight = 0.0;
};

// Relative residual |sum w f(x) - int f| / max(1, |int f|) per basis element.
residual_report residuals(std::span<const double> x, std::span<const double> w, const spline_space& space);
residual_report residuals(const quadrature_rule& rule, const spline_space& space);

}  // namespace splq
