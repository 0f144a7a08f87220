#include "graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <random>
#include <sstream>

namespace eden {

namespace {

// Uniform draw from [0, bound) by rejection; unbiased and identical on every
// platform for a given engine state (std::uniform_int_distribution is not).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  g.edges = std::move(edges);
  return g;
}

Permutation make_permutation(std::vector<int> mapping) {
  const int n = static_cast<int>(mapping.size());
  std::vector<bool> seen(n, false);
  for (int v : mapping) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("mapping is not a permutation of 0..n-1");
    seen[v] = true;
  }
  return Permutation{std::move(mapping)};
}

Permutation identity_permutation(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return Permutation{std::move(m)};
}

Permutation inverse(const Permutation& p) {
  std::vector<int> inv(p.mapping.size());
  for (int i = 0; i < p.size(); ++i) inv[p.mapping[i]] = i;
  return Permutation{std::move(inv)};
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> m(p.mapping.size());
  for (int i = 0; i < p.size(); ++i) m[i] = p.mapping[q.mapping[i]];
  return Permutation{std::move(m)};
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.n) throw std::invalid_argument("permutation length != node count");
  // Output edge (u,v) exists iff input edge (p(u),p(v)) exists, i.e. each
  // input edge (a,b) lands at (p^-1(a), p^-1(b)).
  const Permutation inv = inverse(p);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [a, b] : g.edges) edges.emplace_back(inv.mapping[a], inv.mapping[b]);
  return make_graph(g.n, std::move(edges));
}

Permutation random_permutation(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(m[i], m[j]);
  }
  return Permutation{std::move(m)};
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double r = draw_unit(rng);
      if (p == 1.0 || r < p) edges.emplace_back(u, v);
    }
  return make_graph(n, std::move(edges));
}

namespace {

Graph graph_from_rows(const std::vector<std::string_view>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rows[u][v] == '1') edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

}  // namespace

Graph fixture_graph(std::string_view name) {
  if (name == "decalin") {
    return graph_from_rows({
        "0110001000", "1000010001", "1001000000", "0010100000", "0001010000",
        "0100100000", "1000000100", "0000001010", "0000000101", "0100000010"});
  }
  if (name == "bicyclopentyl") {
    return graph_from_rows({
        "0110010000", "1000001001", "1001000000", "0010100000", "0001010000",
        "1000100000", "0100000100", "0000001010", "0000000101", "0100000010"});
  }
  if (name == "cospectral10") {
    return graph_from_rows({
        "0101010100", "1011100000", "0100101001", "1100010100", "0110001001",
        "1001000011", "0010100110", "1001001010", "0000011101", "0010110010"});
  }
  if (name == "regular4_10") {
    return graph_from_rows({
        "0101001100", "1011100000", "0100110001", "1100010100", "0110001001",
        "0011000110", "1000100011", "1001010010", "0000011101", "0010101010"});
  }
  if (name == "rook4x4") {
    return graph_from_rows({
        "0111100010001000", "1011010001000100", "1101001000100010", "1110000100010001",
        "1000011110001000", "0100101101000100", "0010110100100010", "0001111000010001",
        "1000100001111000", "0100010010110100", "0010001011010010", "0001000111100001",
        "1000100010000111", "0100010001001011", "0010001000101101", "0001000100011110"});
  }
  if (name == "shrikhande") {
    return graph_from_rows({
        "0101110000001001", "1010011000001100", "0101001100000110", "1010100100000011",
        "1001010111000000", "1100101001100000", "0110010100110000", "0011101010010000",
        "0000100101011100", "0000110010100110", "0000011001010011", "0000001110101001",
        "1100000010010101", "0110000011001010", "0011000001100101", "1001000000111010"});
  }
  throw std::invalid_argument("unknown fixture graph: " + std::string(name));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "decalin", "bicyclopentyl", "cospectral10",
      "regular4_10", "rook4x4", "shrikhande"};
  return names;
}

namespace {

constexpr int kG6Min = 63;  // printable range for graph6 bytes
constexpr int kG6Max = 126;

void check_printable(std::string_view line, std::size_t i) {
  const unsigned char c = static_cast<unsigned char>(line[i]);
  if (c < kG6Min || c > kG6Max)
    throw ParseError("graph6 byte out of printable range 63..126", i);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 line", 0);

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    check_printable(line, 0);
    n = line[0] - kG6Min;
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw ParseError("truncated graph6 extended header", line.size());
    for (std::size_t i = 1; i < 4; ++i) check_printable(line, i);
    n = 0;
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (line[i] - kG6Min);
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("truncated graph6 extended header", line.size());
    for (std::size_t i = 2; i < 8; ++i) check_printable(line, i);
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | (line[i] - kG6Min);
    pos = 8;
  }
  if (n < 1) throw ParseError("graph6 header declares zero nodes", 0);
  if (n > 100000) throw ParseError("graph6 node count too large for this build", 0);

  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() < pos + nbytes)
    throw ParseError("graph6 body truncated: expected " + std::to_string(nbytes) +
                         " body bytes, found " + std::to_string(line.size() - pos),
                     line.size());
  if (line.size() > pos + nbytes)
    throw ParseError("graph6 body longer than header implies", pos + nbytes);

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      const std::size_t byte_idx = pos + static_cast<std::size_t>(bit / 6);
      check_printable(line, byte_idx);
      const int group = line[byte_idx] - kG6Min;
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  // trailing pad bits must be zero
  for (long long b = nbits; b < static_cast<long long>(nbytes) * 6; ++b) {
    const std::size_t byte_idx = pos + static_cast<std::size_t>(b / 6);
    const int group = line[byte_idx] - kG6Min;
    if ((group >> (5 - b % 6)) & 1)
      throw ParseError("graph6 nonzero padding bit", byte_idx);
  }
  return make_graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph6(const Graph& g) {
  std::string out;
  const long long n = g.n;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Min));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Min));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Min));
  }
  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  std::vector<int> groups(nbytes, 0);
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v)) groups[bit / 6] |= 1 << (5 - bit % 6);
  for (int grp : groups) out.push_back(static_cast<char>(grp + kG6Min));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<long long> nums;
  long long declared_n = -1;
  bool first = true;
  std::size_t consumed = 0;
  while (in >> tok) {
    consumed = static_cast<std::size_t>(in.tellg() == -1
                                            ? static_cast<long long>(text.size())
                                            : static_cast<long long>(in.tellg()));
    if (first && tok == "n") {
      long long cnt;
      if (!(in >> cnt) || cnt < 1)
        throw ParseError("bad node-count declaration after 'n'", consumed);
      declared_n = cnt;
      first = false;
      continue;
    }
    first = false;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      nums.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("unparseable token '" + tok + "'", consumed - tok.size());
    }
  }
  if (nums.size() % 2 != 0)
    throw ParseError("odd number of endpoints in edge list", text.size());

  long long max_idx = -1;
  for (long long v : nums) {
    if (v < 0) throw ParseError("negative node index", 0);
    max_idx = std::max(max_idx, v);
  }
  const long long n = declared_n >= 0 ? declared_n : max_idx + 1;
  if (n < 1) throw ParseError("edge list declares no nodes", 0);
  if (max_idx >= n)
    throw ParseError("node index " + std::to_string(max_idx) +
                         " >= declared node count " + std::to_string(n),
                     0);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < nums.size(); i += 2)
    edges.emplace_back(static_cast<int>(nums[i]), static_cast<int>(nums[i + 1]));
  return make_graph(static_cast<int>(n), std::move(edges));
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  bool first_line = true;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (first_line && line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
    first_line = false;
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " at input offset " +
                             std::to_string(start),
                         start + e.offset());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace eden
