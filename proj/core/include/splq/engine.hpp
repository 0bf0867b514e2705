#pragma once

#include <optional>
#include <vector>

#include "splq/family_c1.hpp"

namespace splq {

// [a, b] cut into S subintervals of the given lengths.
class partition {
 public:
  partition(double a, double b, std::vector<double> lengths);
  // a = 0, b = sum of lengths
  explicit partition(std::vector<double> lengths);

  double a() const { return a_; }
  double b() const { return b_; }
  int size() const { return static_cast<int>(lengths_.size()); }
  const std::vector<double>& lengths() const { return lengths_; }
  double length(int s) const { return lengths_.at(s - 1); }

  // t_0 = a, ..., t_S = b
  const std::vector<double>& knots() const { return knots_; }
  std::vector<double> inner_knots() const;

  partition reversed() const;

 private:
  double a_, b_;
  std::vector<double> lengths_;
  std::vector<double> knots_;
};

enum class rule_family { full, half };

struct free_parameter {
  enum class kind { zero, value, pin };
  kind mode = kind::zero;
  double value = 0.0;  // omega for kind::value, x_target for kind::pin

  static free_parameter zero() { return {}; }
  static free_parameter fixed(double v) { return {kind::value, v}; }
  static free_parameter pin(double x) { return {kind::pin, x}; }
};

struct rule_request {
  int continuity = 0;
  int nodes = 1;  // N
  rule_family family = rule_family::full;
  int middle = 1;  // S_M, 1-based
  free_parameter free;
};

struct rule_plan {
  std::vector<int> counts;  // per subinterval
  int total = 0;
  int degree = 0;
  int dimension = 0;

  int excess() const { return 2 * total - dimension; }
  bool has_free_parameter() const { return excess() == 1; }
};

struct subinterval_rule {
  int index = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

struct weighted_node {
  int subinterval = 0;
  double x = 0.0;
  double w = 0.0;
};

struct rule_meta {
  int degree = 0;
  int dimension = 0;
  std::optional<double> free_value;
  std::vector<branch> branches;  // omega branches of the c = 1 half sweeps, left pairs first
};

struct quadrature_rule {
  std::vector<subinterval_rule> per_subinterval;
  std::vector<weighted_node> flat;
  rule_meta meta;

  std::vector<double> nodes() const;
  std::vector<double> weights() const;
};

// Spline degree of the requested family: 2N, 2N-1 (c = 0); 2N+1, 2N (c = 1).
int rule_degree(int continuity, int nodes, rule_family family);
int spline_dimension(int degree, int continuity, int subintervals);

rule_plan plan(const rule_request& req, const partition& part);

// Middle indices accepted by plan() for this request shape, central ones first.
std::vector<int> admissible_middles(const rule_request& req, const partition& part);

quadrature_rule generate(const rule_request& req, const partition& part);

double pin_free_parameter(const rule_request& req, const partition& part, double x_target);

}  // namespace splq
