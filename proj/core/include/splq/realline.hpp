#pragma once

#include <optional>
#include <vector>

#include "splq/family_c1.hpp"

namespace splq {

enum class limit_kind { c0_interior, c1_interior };

struct limit_rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  limit_kind kind = limit_kind::c0_interior;
};

/// Interior rule of uniform C^0 rules of degree 2n as S grows. delta_sign = -1
/// gives the mirror image.
limit_rule realline_rule_c0(int n, int delta_sign = 1);

/// Interior rule of uniform C^1 rules of degree 2n+1: node -1 plus the roots of
/// C^{(5/2)}_{n-1}.
limit_rule realline_rule_c1(int n);

enum class sweep_mode { full, half };

struct fixed_point_result {
  param_c1 params;  // beta unused for c = 0
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;  // distance moved by one more map application
};

// Two-subinterval map of the half sweeps at lambda = 1: (N, N-1) pair, back to an N subinterval.
param_c1 half_map(int continuity, param_c1 p, int n, branch br = branch::plus);

// Iterates the uniform recursion map from the zero state.
fixed_point_result fixed_point(int continuity, sweep_mode mode, int n, int max_iterations = 500,
                               double tol = 1e-13);

// alpha that removes the lowest Gegenbauer term of Q_n (F(n) = 0), for a given beta.
double seed_alpha_c1(double beta, int n);

// A second fixed point of the C^1 full map, searched by Newton from a seed grid.
std::optional<param_c1> second_fixed_point_c1(int n);

}  // namespace splq
