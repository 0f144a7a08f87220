#include "distances.hpp"

#include <algorithm>
#include <stdexcept>

namespace eden {

std::int32_t DistanceMatrix::hops(int i, int j) const {
  const std::int32_t v = raw(i, j);
  if (v < 0) throw std::logic_error("hops() queried for an unreachable pair");
  return v;
}

DistanceMatrix apsp(const Graph& g) {
  DistanceMatrix d;
  d.n = g.n;
  d.cells.assign(static_cast<std::size_t>(g.n) * g.n, -1);

  std::vector<int> queue(g.n);
  for (int src = 0; src < g.n; ++src) {
    auto* row = d.cells.data() + static_cast<std::size_t>(src) * g.n;
    row[src] = 0;
    int head = 0, tail = 0;
    queue[tail++] = src;
    while (head < tail) {
      const int u = queue[head++];
      for (int v : g.adj[u])
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
    }
  }
  return d;
}

std::vector<std::int32_t> diameter_vector(const DistanceMatrix& d) {
  std::vector<std::int32_t> out(d.n, 0);
  for (int i = 0; i < d.n; ++i) {
    std::int32_t mx = 0;
    const auto* row = d.cells.data() + static_cast<std::size_t>(i) * d.n;
    for (int j = 0; j < d.n; ++j) mx = std::max(mx, row[j]);  // -1 never wins
    out[i] = mx;
  }
  return out;
}

}  // namespace eden
