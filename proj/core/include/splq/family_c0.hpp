#pragma once

#include <optional>
#include <utility>

#include "splq/orthopoly.hpp"
#include "splq/reference_rule.hpp"

namespace splq {

// Recursion state for C^0 rules. alpha = 0 on the first and last subinterval.
struct param_c0 {
  double alpha = 0.0;
};

// F(n) = 1 + alpha n (n+1)
double f_c0(int n, double alpha);

// H(n) of the middle polynomials
double h_c0(param_c0 left, param_c0 right, int n);

// Boundary-sweep polynomial Q_n(alpha, x) over Jacobi P^{(1,0)}.
eval_triple q_eval_c0(param_c0 p, int n, double x);

// Middle polynomial M_n(alpha_L, alpha_R, x) over Legendre.
eval_triple m_eval_c0(param_c0 left, param_c0 right, int n, double x);

/// Roots of Q_n, or of Q_n + omega Q_{n-1} when omega is given, with weights
/// 2(2n+1)F(n)^2 / (n(n+1) r'(x) Q_{n-1}(x) (1-x)) where r is the rooted polynomial.
reference_rule boundary_rule_c0(param_c0 p, int n, std::optional<double> omega = std::nullopt);

// alpha for the next subinterval, already divided by lambda.
param_c0 step_alpha(param_c0 p, int n, double lambda, std::optional<double> omega = std::nullopt);

// omega closing a (N, N-1) pair with stretch lambda = L_{s+1}/L_s.
double omega_pair_c0(param_c0 p, int n, double lambda);

/// Roots of M_n + omega M_{n-1}; weights 2H(n)^2 / (n r'(x) M_{n-1}(x)).
reference_rule middle_rule_c0(param_c0 left, param_c0 right, int n, double omega = 0.0);

// (alpha_{R,M}, alpha_{L,M}) for the two middle subintervals of an even half rule.
std::pair<param_c0, param_c0> middle_pair_params_c0(double omega_free, double lambda);

// Gegenbauer C^{(3/2)} forms of Q_n and M_n. Used as an independent evaluator.
double gegenbauer_q_c0(param_c0 p, int n, double x);
double gegenbauer_m_c0(param_c0 left, param_c0 right, int n, double x);

}  // namespace splq
