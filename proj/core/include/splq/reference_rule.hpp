#pragma once

#include <vector>

namespace splq {

// Nodes and weights on [-1, 1] before mapping to a subinterval.
struct reference_rule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

}  // namespace splq
