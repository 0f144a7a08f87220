#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "encoders.hpp"
#include "graph.hpp"
#include "spectral.hpp"

namespace eden {

// Deterministic per-graph signature: canonical-signed projection rows plus the
// singular-value profile. Rows are kept in vertex order; comparisons treat
// them as an unordered multiset.
struct Signature {
  int n = 0;
  int m = 0;
  std::vector<double> singular_values;  // non-increasing
  Matrix rows;                          // n x m
  bool degenerate = false;
  std::string note;
};

enum class Verdict { kNonIsomorphic, kPossiblyIsomorphic, kInconclusive };
const char* verdict_name(Verdict v);

struct Thresholds {
  double tau_sv = 1e-8;
  double tau_row = 1e-8;
};

struct PairReport {
  Verdict verdict = Verdict::kInconclusive;
  std::string reason;
  double sv_dist = -1.0;   // negative when the comparison never reached it
  double row_dist = -1.0;
};

// Signature with the projection width clamped to min(cfg.m, n) so graphs
// smaller than the requested width still get a signature.
Signature graph_signature(const Graph& g, const EncoderConfig& cfg);

// Bottleneck distance between two row multisets: the minimum over row
// alignments of the largest absolute entry difference. Exact (assignment by
// threshold search); a sorted-row alignment only supplies the upper bound.
double row_multiset_distance(const Matrix& a, const Matrix& b);

// Verdict ladder: node count -> singular values -> degeneracy -> row
// multisets. A singular-value mismatch is decisive even for degenerate
// encodings; degeneracy only blocks the row-level test.
PairReport compare_signatures(const Signature& a, const Signature& b,
                              const Thresholds& t);
PairReport compare_pair(const Graph& a, const Graph& b, const Thresholds& t,
                        const EncoderConfig& cfg);

// Measures signature discrepancies between each graph and `trials` randomly
// relabeled copies, then sets each threshold to safety * (worst observed),
// floored at 1e-8. Row discrepancies are recorded only when both signatures
// are non-degenerate (degenerate rows never reach the row test).
Thresholds calibrate_thresholds(const std::vector<Graph>& graphs, int trials,
                                uint64_t seed, const EncoderConfig& cfg,
                                double safety = 10.0);

// 1-dimensional Weisfeiler-Leman color refinement, run for exactly n rounds
// from a uniform start so histograms computed independently are comparable.
// Returns the sorted multiset of final vertex colors.
std::vector<uint64_t> wl1_refine(const Graph& g);

// Exact isomorphism by pruned backtracking; guards against blowup by
// rejecting graphs with more than 12 nodes.
bool exact_isomorphic(const Graph& a, const Graph& b);

struct ScanReport {
  std::size_t corpus_size = 0;
  std::size_t pairs_total = 0;
  std::size_t non_isomorphic = 0;
  std::size_t possibly_isomorphic = 0;
  std::size_t inconclusive = 0;
  std::size_t misjudged = 0;  // possibly_isomorphic + inconclusive
  double wall_ms = 0.0;
};

// All-pairs sweep: graphs are bucketed by (n, singular values quantized at
// 1e-6); cross-bucket pairs count as non-isomorphic without an explicit
// comparison, within-bucket pairs run the full verdict ladder.
ScanReport dataset_scan(const std::vector<Graph>& graphs, const Thresholds& t,
                        const EncoderConfig& cfg);

}  // namespace eden
