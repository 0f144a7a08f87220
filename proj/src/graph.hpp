#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eden {

// Parse failure with the byte offset of the offending input position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Undirected simple graph over nodes 0..n-1. Construct via make_graph so the
// invariants (no self-loops, no duplicates, normalized u<v edges) always hold.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u<v, sorted, unique
  std::vector<std::vector<int>> adj;       // sorted neighbor lists

  int degree(int u) const { return static_cast<int>(adj[u].size()); }
  bool has_edge(int u, int v) const;
  std::size_t edge_count() const { return edges.size(); }
};

Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// mapping[u] = p(u); acts on graphs via A'[u][v] = A[p(u)][p(v)].
struct Permutation {
  std::vector<int> mapping;

  int size() const { return static_cast<int>(mapping.size()); }
  int operator()(int u) const { return mapping[u]; }
};

Permutation make_permutation(std::vector<int> mapping);
Permutation identity_permutation(int n);
Permutation inverse(const Permutation& p);
// compose(p, q)(i) = p(q(i)); satisfies apply(apply(g,p),q) = apply(g, compose(p,q)).
Permutation compose(const Permutation& p, const Permutation& q);

Graph apply_permutation(const Graph& g, const Permutation& p);
Permutation random_permutation(int n, std::uint64_t seed);
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// Named graphs embedded from their published adjacency matrices:
// decalin, bicyclopentyl, cospectral10, regular4_10, rook4x4, shrikhande.
Graph fixture_graph(std::string_view name);
const std::vector<std::string>& fixture_names();

// graph6: one line of printable ASCII (bytes 63..126). Header is n+63 for
// n < 63, or '~'+3 bytes / '~~'+6 bytes big-endian 6-bit groups. Body packs
// the upper triangle column-major (x01, x02, x12, x03, ...) 6 bits per byte,
// MSB first, zero-padded.
Graph parse_graph6(std::string_view line);
std::string serialize_graph6(const Graph& g);

// Whitespace-separated "u v" pairs, one edge per line; optional leading line
// "n <count>" declares the node count (for trailing isolated nodes).
Graph parse_edge_list(std::string_view text);

// Splits a graph6 file into per-line graphs; skips blank lines and an
// optional ">>graph6<<" prefix on the first line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace eden
