#include "enumerate8.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace testsupport {

namespace {

inline int pair_bit(int i, int j) {  // requires i < j
  return j * (j - 1) / 2 + i;
}

// Adjacency bitmasks from an edge code.
std::vector<std::uint8_t> masks_of(std::uint32_t code, int n) {
  std::vector<std::uint8_t> m(n, 0);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code >> pair_bit(i, j) & 1u) {
        m[i] |= static_cast<std::uint8_t>(1u << j);
        m[j] |= static_cast<std::uint8_t>(1u << i);
      }
  return m;
}

// Iterated color refinement with label-free color renaming: the new color of
// a vertex is the rank of (old color, sorted neighbor colors) among all
// distinct such signatures. Stable partition after at most n rounds.
std::vector<int> refine_colors(const std::vector<std::uint8_t>& masks, int n) {
  std::vector<int> color(n, 0);
  int classes = 1;
  for (int round = 0; round < n; ++round) {
    using Sig = std::pair<int, std::vector<int>>;
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int u = 0; u < n; ++u)
        if (masks[v] >> u & 1u) sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Sig> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    const int now = static_cast<int>(uniq.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

std::uint32_t code_under(const std::vector<std::uint8_t>& masks,
                         const std::vector<int>& perm, int n) {
  std::uint32_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (masks[perm[i]] >> perm[j] & 1u)
        code |= 1u << pair_bit(i, j);
  return code;
}

}  // namespace

std::uint32_t canonical_code(std::uint32_t code, int n) {
  if (n == 1) return 0;
  const std::vector<std::uint8_t> masks = masks_of(code, n);
  const std::vector<int> color = refine_colors(masks, n);

  // Vertices grouped by refined color; orderings enumerate per-class
  // permutations only (the refinement ranking is isomorphism-invariant, so
  // the minimum over these orderings is too).
  const int classes = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> groups(classes);
  for (int v = 0; v < n; ++v) groups[color[v]].push_back(v);

  std::vector<int> perm;
  perm.reserve(n);
  std::uint32_t best = 0xffffffffu;
  while (true) {
    perm.clear();
    for (const auto& g : groups) perm.insert(perm.end(), g.begin(), g.end());
    best = std::min(best, code_under(masks, perm, n));
    // Odometer over per-class permutations.
    int c = classes - 1;
    while (c >= 0 && !std::next_permutation(groups[c].begin(), groups[c].end()))
      --c;
    if (c < 0) break;
  }
  return best;
}

std::vector<eden::Graph> all_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("all_graphs: n must be in [1,8]");

  std::vector<std::uint32_t> level = {0};  // single vertex
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> next;
    const int base = pair_bit(0, k - 1);
    for (std::uint32_t code : level) {
      for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        const std::uint32_t canon = canonical_code(code | (nb << base), k);
        if (seen.insert(canon).second) next.push_back(canon);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());

  std::vector<eden::Graph> out;
  out.reserve(level.size());
  for (std::uint32_t code : level) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (code >> pair_bit(i, j) & 1u) edges.emplace_back(i, j);
    out.push_back(eden::make_graph(n, std::move(edges)));
  }
  return out;
}

std::vector<eden::Graph> all_connected_graphs(int n) {
  std::vector<eden::Graph> out;
  for (eden::Graph& g : all_graphs(n)) {
    // BFS from vertex 0.
    std::vector<char> seen(g.n, 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w : g.adj[queue[h]])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    if (static_cast<int>(queue.size()) == g.n) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace testsupport
