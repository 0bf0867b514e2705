#pragma once

#include <functional>
#include <vector>

namespace splq {

enum class poly_family { legendre, jacobi_1_0, jacobi_2_0, gegenbauer_3_2, gegenbauer_5_2 };

struct eval_triple {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// Jacobi P_n^{(a,b)} by the three-term recurrence; zero for n < 0.
double jacobi(int n, double a, double b, double x);

// Gegenbauer C_n^{(lam)}; zero for n < 0.
double gegenbauer(int n, double lam, double x);

// k-th derivative of the n-th member of a family.
double derivative(poly_family f, int n, int k, double x);

// value, first and second derivative
eval_triple eval(poly_family f, int n, double x);

using poly_evaluator = std::function<eval_triple(double)>;

inline constexpr double root_bracket_slack = 1e-10;

/// All real roots of a polynomial of exact degree `degree` inside [lo, hi].
/// Chebyshev samples -> colleague matrix eigenvalues -> Newton polish.
/// Throws root_count_mismatch unless exactly `degree` simple roots land in the
/// bracket, convergence_failure if polishing stalls.
std::vector<double> real_roots(const poly_evaluator& f, int degree,
                               double lo = -1.0 - root_bracket_slack,
                               double hi = 1.0 + root_bracket_slack);

// Chebyshev coefficients c_0..c_{m-1} of f interpolated at m first-kind points.
std::vector<double> chebyshev_coefficients(const std::function<double(double)>& f, int m);

}  // namespace splq
