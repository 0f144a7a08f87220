#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace eden {

// All-pairs shortest-path hop counts with an explicit unreachable state.
// The raw value -1 never leaks through the accessors.
struct DistanceMatrix {
  int n = 0;
  std::vector<std::int32_t> cells;  // row-major; -1 encodes unreachable

  bool reachable(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j] >= 0; }
  std::int32_t hops(int i, int j) const;  // throws if unreachable
  std::int32_t raw(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
};

// Per-source BFS; O(n*(n+|E|)) total.
DistanceMatrix apsp(const Graph& g);

// values[i] = max finite entry of row i (>= 0; the diagonal 0 is always finite).
std::vector<std::int32_t> diameter_vector(const DistanceMatrix& d);

}  // namespace eden
