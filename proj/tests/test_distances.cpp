#include <vector>

#include "distances.hpp"
#include "doctest.h"
#include "graph.hpp"

using eden::DistanceMatrix;
using eden::Graph;

namespace {

constexpr int kInf = 1 << 28;

// Independent oracle: Floyd-Warshall over the dense adjacency matrix.
std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kInf));
  for (int i = 0; i < g.n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < g.n; ++k)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

}  // namespace

TEST_CASE("apsp on a path and a disconnected graph") {
  const Graph p3 = eden::make_graph(3, {{0, 1}, {1, 2}});
  const DistanceMatrix d = eden::apsp(p3);
  CHECK(d.hops(0, 0) == 0);
  CHECK(d.hops(0, 1) == 1);
  CHECK(d.hops(0, 2) == 2);
  CHECK(d.hops(2, 0) == 2);

  const Graph split = eden::make_graph(4, {{0, 1}, {2, 3}});
  const DistanceMatrix ds = eden::apsp(split);
  CHECK(ds.reachable(0, 1));
  CHECK_FALSE(ds.reachable(0, 2));
  CHECK_FALSE(ds.reachable(3, 1));
  CHECK_THROWS_AS(ds.hops(0, 2), std::logic_error);

  const Graph k1 = eden::make_graph(1, {});
  const DistanceMatrix d1 = eden::apsp(k1);
  CHECK(d1.hops(0, 0) == 0);
}

TEST_CASE("apsp agrees with Floyd-Warshall oracle on random graphs") {
  for (int s = 0; s < 50; ++s) {
    const int n = 2 + s % 15;
    const Graph g = eden::erdos_renyi(n, (s % 3) * 0.25 + 0.15, 500 + s);
    const DistanceMatrix d = eden::apsp(g);
    const auto oracle = floyd_warshall(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (oracle[i][j] >= kInf)
          CHECK_FALSE(d.reachable(i, j));
        else
          CHECK(d.hops(i, j) == oracle[i][j]);
      }
  }
}

TEST_CASE("diameter_vector takes per-node maxima of finite rows") {
  const Graph p3 = eden::make_graph(3, {{0, 1}, {1, 2}});
  CHECK(eden::diameter_vector(eden::apsp(p3)) == std::vector<int32_t>{2, 1, 2});

  // Isolated node: only itself reachable, diameter 0.
  const Graph iso = eden::make_graph(3, {{0, 1}});
  CHECK(eden::diameter_vector(eden::apsp(iso)) == std::vector<int32_t>{1, 1, 0});

  for (int s = 0; s < 20; ++s) {
    const Graph g = eden::erdos_renyi(9, 0.3, 900 + s);
    const auto oracle = floyd_warshall(g);
    const auto diam = eden::diameter_vector(eden::apsp(g));
    for (int i = 0; i < g.n; ++i) {
      int want = 0;
      for (int j = 0; j < g.n; ++j)
        if (oracle[i][j] < kInf && oracle[i][j] > want) want = oracle[i][j];
      CHECK(diam[i] == want);
    }
  }
}
