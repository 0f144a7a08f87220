#include "isotest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace eden {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kNonIsomorphic: return "NON_ISOMORPHIC";
    case Verdict::kPossiblyIsomorphic: return "POSSIBLY_ISOMORPHIC";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "unknown";
}

Signature graph_signature(const Graph& g, const EncoderConfig& cfg) {
  EncoderConfig local = cfg;
  local.m = std::min(cfg.m, g.n);
  Encoding e = eden_encode(g, local);
  Signature s;
  s.n = g.n;
  s.m = local.m;
  s.singular_values.assign(e.singular_values.data(),
                           e.singular_values.data() + e.singular_values.size());
  s.rows = std::move(e.values);
  s.degenerate = e.degenerate;
  s.note = std::move(e.note);
  return s;
}

namespace {

// Perfect matching on edges {(i,j): cost(i,j) <= limit} via Kuhn's algorithm.
bool matchable_within(const Matrix& cost, double limit) {
  const int n = static_cast<int>(cost.rows());
  std::vector<int> match_of(n, -1);  // right vertex -> left vertex
  std::vector<char> visited(n, 0);

  std::function<bool(int)> try_augment = [&](int u) -> bool {
    for (int v = 0; v < n; ++v) {
      if (visited[v] || cost(u, v) > limit) continue;
      visited[v] = 1;
      if (match_of[v] < 0 || try_augment(match_of[v])) {
        match_of[v] = u;
        return true;
      }
    }
    return false;
  };

  for (int u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_augment(u)) return false;
  }
  return true;
}

bool lex_row_less(const Matrix& m, int a, int b) {
  for (int k = 0; k < m.cols(); ++k) {
    if (m(a, k) != m(b, k)) return m(a, k) < m(b, k);
  }
  return false;
}

}  // namespace

double row_multiset_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("row_multiset_distance: shape mismatch");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 0.0;

  Matrix cost(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cost(i, j) = (a.row(i) - b.row(j)).cwiseAbs().maxCoeff();

  // Upper bound from aligning lexicographically sorted rows.
  std::vector<int> oa(n), ob(n);
  for (int i = 0; i < n; ++i) oa[i] = ob[i] = i;
  std::sort(oa.begin(), oa.end(), [&](int x, int y) { return lex_row_less(a, x, y); });
  std::sort(ob.begin(), ob.end(), [&](int x, int y) { return lex_row_less(b, x, y); });
  double upper = 0.0;
  for (int i = 0; i < n; ++i) upper = std::max(upper, cost(oa[i], ob[i]));
  if (upper == 0.0) return 0.0;

  // Bottleneck value is one of the pairwise costs <= upper; binary search for
  // the smallest one admitting a perfect matching.
  std::vector<double> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cost(i, j) <= upper) candidates.push_back(cost(i, j));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;  // candidates[hi] = upper, feasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matchable_within(cost, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

PairReport compare_signatures(const Signature& a, const Signature& b,
                              const Thresholds& t) {
  PairReport r;
  if (a.n != b.n) {
    r.verdict = Verdict::kNonIsomorphic;
    r.reason = "node counts differ";
    return r;
  }
  if (a.m != b.m)
    throw std::invalid_argument("compare_signatures: projection widths differ");

  double sv_dist = 0.0;
  for (int i = 0; i < a.m; ++i)
    sv_dist = std::max(sv_dist, std::abs(a.singular_values[i] - b.singular_values[i]));
  r.sv_dist = sv_dist;
  char buf[128];
  if (sv_dist > t.tau_sv) {
    r.verdict = Verdict::kNonIsomorphic;
    std::snprintf(buf, sizeof(buf), "singular values differ by %.3e", sv_dist);
    r.reason = buf;
    return r;
  }

  if (a.degenerate || b.degenerate) {
    r.verdict = Verdict::kInconclusive;
    r.reason = "degenerate encoding";
    const std::string& extra = a.degenerate ? a.note : b.note;
    if (!extra.empty()) r.reason += ": " + extra;
    return r;
  }

  r.row_dist = row_multiset_distance(a.rows, b.rows);
  if (r.row_dist > t.tau_row) {
    r.verdict = Verdict::kNonIsomorphic;
    std::snprintf(buf, sizeof(buf), "row multisets differ by %.3e", r.row_dist);
    r.reason = buf;
    return r;
  }

  r.verdict = Verdict::kPossiblyIsomorphic;
  r.reason = "signatures agree within tolerances";
  return r;
}

PairReport compare_pair(const Graph& a, const Graph& b, const Thresholds& t,
                        const EncoderConfig& cfg) {
  if (a.n != b.n) {
    PairReport r;
    r.verdict = Verdict::kNonIsomorphic;
    r.reason = "node counts differ";
    return r;
  }
  return compare_signatures(graph_signature(a, cfg), graph_signature(b, cfg), t);
}

Thresholds calibrate_thresholds(const std::vector<Graph>& graphs, int trials,
                                uint64_t seed, const EncoderConfig& cfg,
                                double safety) {
  if (trials < 1)
    throw std::invalid_argument("calibrate_thresholds: trials must be >= 1");
  if (graphs.empty())
    throw std::invalid_argument("calibrate_thresholds: empty graph list");

  std::mt19937_64 rng(seed);
  double worst_sv = 0.0;
  double worst_row = 0.0;
  for (const Graph& g : graphs) {
    const Signature base = graph_signature(g, cfg);
    for (int tr = 0; tr < trials; ++tr) {
      const Permutation p = random_permutation(g.n, rng());
      const Signature copy = graph_signature(apply_permutation(g, p), cfg);
      for (int i = 0; i < base.m; ++i)
        worst_sv = std::max(
            worst_sv, std::abs(base.singular_values[i] - copy.singular_values[i]));
      if (!base.degenerate && !copy.degenerate)
        worst_row = std::max(worst_row, row_multiset_distance(base.rows, copy.rows));
    }
  }

  constexpr double kFloor = 1e-8;
  Thresholds t;
  t.tau_sv = std::max(kFloor, safety * worst_sv);
  t.tau_row = std::max(kFloor, safety * worst_row);
  return t;
}

namespace {

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-vertex colors after exactly n refinement rounds.
std::vector<uint64_t> wl1_colors(const Graph& g) {
  std::vector<uint64_t> color(g.n, 0x517cc1b727220a95ULL);
  std::vector<uint64_t> next(g.n);
  std::vector<uint64_t> around;
  for (int round = 0; round < g.n; ++round) {
    for (int u = 0; u < g.n; ++u) {
      around.assign(g.adj[u].size(), 0);
      for (std::size_t k = 0; k < g.adj[u].size(); ++k) around[k] = color[g.adj[u][k]];
      std::sort(around.begin(), around.end());
      uint64_t h = splitmix(color[u]);
      for (uint64_t c : around) h = splitmix(h ^ c);
      next[u] = h;
    }
    color.swap(next);
  }
  return color;
}

}  // namespace

std::vector<uint64_t> wl1_refine(const Graph& g) {
  std::vector<uint64_t> c = wl1_colors(g);
  std::sort(c.begin(), c.end());
  return c;
}

bool exact_isomorphic(const Graph& a, const Graph& b) {
  if (a.n > 12 || b.n > 12)
    throw std::invalid_argument("exact_isomorphic: supported only for n <= 12");
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  const int n = a.n;

  std::vector<int> da(n), db(n);
  for (int u = 0; u < n; ++u) {
    da[u] = a.degree(u);
    db[u] = b.degree(u);
  }
  {
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  const std::vector<uint64_t> ca = wl1_colors(a);
  const std::vector<uint64_t> cb = wl1_colors(b);
  {
    std::vector<uint64_t> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<uint16_t> ma(n, 0), mb(n, 0);
  for (const auto& [u, v] : a.edges) {
    ma[u] |= static_cast<uint16_t>(1u << v);
    ma[v] |= static_cast<uint16_t>(1u << u);
  }
  for (const auto& [u, v] : b.edges) {
    mb[u] |= static_cast<uint16_t>(1u << v);
    mb[v] |= static_cast<uint16_t>(1u << u);
  }

  std::vector<int> map_to(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int u) -> bool {
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || ca[u] != cb[v] || da[u] != db[v]) continue;
      bool ok = true;
      for (int w = 0; w < u; ++w) {
        const bool ea = (ma[u] >> w) & 1u;
        const bool eb = (mb[v] >> map_to[w]) & 1u;
        if (ea != eb) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[v] = 1;
      map_to[u] = v;
      if (place(u + 1)) return true;
      used[v] = 0;
      map_to[u] = -1;
    }
    return false;
  };
  return place(0);
}

ScanReport dataset_scan(const std::vector<Graph>& graphs, const Thresholds& t,
                        const EncoderConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport r;
  r.corpus_size = graphs.size();
  const std::size_t k = graphs.size();
  r.pairs_total = k * (k - 1) / 2;

  std::vector<Signature> sigs;
  sigs.reserve(k);
  for (const Graph& g : graphs) sigs.push_back(graph_signature(g, cfg));

  using Key = std::pair<int, std::vector<int64_t>>;
  std::map<Key, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < k; ++i) {
    Key key;
    key.first = sigs[i].n;
    key.second.reserve(sigs[i].singular_values.size());
    for (double sv : sigs[i].singular_values)
      key.second.push_back(std::llround(sv * 1e6));
    buckets[key].push_back(i);
  }

  // Pairs landing in different buckets are non-isomorphic by construction.
  std::size_t within_total = 0;
  for (const auto& [key, members] : buckets)
    within_total += members.size() * (members.size() - 1) / 2;
  r.non_isomorphic = r.pairs_total - within_total;

  for (const auto& [key, members] : buckets) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const PairReport rep =
            compare_signatures(sigs[members[x]], sigs[members[y]], t);
        switch (rep.verdict) {
          case Verdict::kNonIsomorphic: ++r.non_isomorphic; break;
          case Verdict::kPossiblyIsomorphic: ++r.possibly_isomorphic; break;
          case Verdict::kInconclusive: ++r.inconclusive; break;
        }
      }
    }
  }
  r.misjudged = r.possibly_isomorphic + r.inconclusive;

  const auto stop = std::chrono::steady_clock::now();
  r.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
          .count();
  return r;
}

}  // namespace eden
