#pragma once

#include <optional>
#include <utility>

#include "splq/orthopoly.hpp"
#include "splq/reference_rule.hpp"

namespace splq {

// Recursion state for C^1 rules. (0, 0) on the first and last subinterval.
struct param_c1 {
  double alpha = 0.0;
  double beta = 0.0;
};

enum class branch { plus, minus };

// F, F_1, F_2 of the boundary polynomials
double f_c1(int n, param_c1 p);
double f1_c1(int n, param_c1 p);
double f2_c1(int n, param_c1 p);

// H(n) of the middle polynomials
double h_c1(param_c1 left, param_c1 right, int n);

// Q_n(alpha, beta, x) over Jacobi P^{(2,0)}; D(P)^2 is the second derivative.
eval_triple q_eval_c1(param_c1 p, int n, double x);

// M_n(alpha_L, beta_L, alpha_R, beta_R, x) over Legendre.
eval_triple m_eval_c1(param_c1 left, param_c1 right, int n, double x);

/// Roots of Q_n (or Q_n + omega Q_{n-1}); weights
/// 8(n+1)F(n)^2 / (n(n+2) r'(x) Q_{n-1}(x) (1-x)^2).
reference_rule boundary_rule_c1(param_c1 p, int n, std::optional<double> omega = std::nullopt);

// (alpha, beta) for the next subinterval, divided by lambda and lambda^2.
param_c1 step_ab(param_c1 p, int n, double lambda, std::optional<double> omega = std::nullopt);

struct quadratic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// A omega^2 + B omega + C = 0 for a (N, N-1) pair with stretch lambda.
quadratic omega_coefficients_c1(param_c1 p, int n, double lambda);

double omega_pair_c1(param_c1 p, int n, double lambda, branch br = branch::plus);

/// Roots of M_n + omega M_{n-1}; weights 2H(n)^2 / (n r'(x) M_{n-1}(x)).
reference_rule middle_rule_c1(param_c1 left, param_c1 right, int n, double omega = 0.0);

/// Parameters (right-of-left, left-of-right) of the two middle subintervals of
/// an even half rule. lambda = L_{S_M+1}/L_{S_M}.
std::pair<param_c1, param_c1> middle_pair_params_c1(param_c1 left, param_c1 right, int n, double lambda);

// Gegenbauer C^{(5/2)} forms of Q_n and M_n.
double gegenbauer_q_c1(param_c1 p, int n, double x);
double gegenbauer_m_c1(param_c1 left, param_c1 right, int n, double x);

}  // namespace splq
