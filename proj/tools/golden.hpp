#pragma once

#include <string_view>
#include <vector>

#include "splq/engine.hpp"

namespace splq::golden {

struct entry {
  int subinterval;
  double x;
  double w;
};

struct fixture {
  std::string_view name;
  rule_request request;
  std::vector<double> lengths;
  double a, b;
  std::vector<entry> expected;
};

// Exact algebraic values rounded to 30 significant digits.
inline fixture c1_full_nonuniform() {
  return {"5.1",
          {1, 1, rule_family::full, 3, free_parameter::zero()},
          {1, 2, 3, 1, 1, 1},
          0.0,
          9.0,
          {{1, 0.25, 0.592592592592592592592592592593},
           {2, 1.24590163934426229508196721311, 1.46854811838653222180167764935},
           {3, 3.16770110966937212125709652505, 2.35013464383737852528941214121},
           {3, 5.58282902405192609756608104703, 2.08872199927045862964347505851},
           {4, 6.99905923639592406240750919623, 0.997162095477486963888345651385},
           {5, 7.96739130434782608695652173913, 0.910247957842958474191904314364},
           {6, 8.75, 0.592592592592592592592592592593}}};
}

inline fixture c0_half_pinned() {
  return {"9.1",
          {0, 2, rule_family::half, 3, free_parameter::pin(3.0)},
          {1, 2, 3, 1, 1, 1},
          0.0,
          9.0,
          {{1, 0.236398874298326460388169277604, 0.56006630848886144951744780045},
           {1, 0.906458268558816396754687865253, 0.773267024844471883815885532884},
           {2, 2.0, 1.33333333333333333333333333333},
           {3, 3.0, 0.833333333333333333333333333333},
           {3, 4.5, 2.0},
           {4, 6.08463764954519109257145993161, 0.974441463590872927244826102116},
           {4, 6.84393377902623747885711149696, 0.692225203075793739421840564551},
           {5, 7.5, 0.666666666666666666666666666667},
           {6, 8.12984378812835756567558911627, 0.622376773805484849714359050862},
           {6, 8.77015621187164243432441088373, 0.544289892861181816952307615805}}};
}

inline std::vector<fixture> all() { return {c1_full_nonuniform(), c0_half_pinned()}; }

}  // namespace splq::golden
