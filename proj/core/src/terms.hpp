#pragma once

#include <initializer_list>

#include "splq/orthopoly.hpp"

namespace splq::detail {

// (c0 + c1 x) * D^k P_n
struct lin_term {
  double c0;
  double c1;
  int k;
};

// Sum of linear-factor times derivative terms, with two derivatives.
inline eval_triple sum_terms(poly_family f, int n, double x, std::initializer_list<lin_term> terms) {
  double d[5];
  for (int k = 0; k < 5; ++k) d[k] = derivative(f, n, k, x);
  eval_triple r;
  for (const auto& t : terms) {
    const double lin = t.c0 + t.c1 * x;
    r.value += lin * d[t.k];
    r.d1 += t.c1 * d[t.k] + lin * d[t.k + 1];
    r.d2 += 2.0 * t.c1 * d[t.k + 1] + lin * d[t.k + 2];
  }
  return r;
}

inline double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// combined polynomial p + w q, as rooted by the half-rule steps
inline eval_triple combine(const eval_triple& p, const eval_triple& q, double w) {
  return {p.value + w * q.value, p.d1 + w * q.d1, p.d2 + w * q.d2};
}

}  // namespace splq::detail
