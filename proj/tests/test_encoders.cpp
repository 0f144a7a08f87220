#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "distances.hpp"
#include "doctest.h"
#include "encoders.hpp"
#include "graph.hpp"

using eden::BaselineMode;
using eden::Encoding;
using eden::EncoderConfig;
using eden::Graph;
using eden::LaplacianWhich;
using eden::Matrix;

TEST_CASE("phase_propagation hand values on a path") {
  const Graph p3 = eden::make_graph(3, {{0, 1}, {1, 2}});
  const Matrix p = eden::phase_propagation(eden::apsp(p3), -1.5);
  // Node 0: diameter 2 -> [cos 0, cos(pi/2), cos(pi)].
  CHECK(p(0, 0) == 1.0);
  CHECK(std::abs(p(0, 1)) < 1e-12);
  CHECK(p(0, 2) == doctest::Approx(-1.0).epsilon(1e-12));
  // Node 1: diameter 1 -> both neighbors land on -1.
  CHECK(p(1, 1) == 1.0);
  CHECK(p(1, 0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(p(1, 2) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("phase_propagation marks unreachable pairs and isolated nodes") {
  const Graph g = eden::make_graph(4, {{0, 1}});  // nodes 2,3 isolated
  const Matrix p = eden::phase_propagation(eden::apsp(g), -2.0);
  CHECK(p(0, 2) == -2.0);
  CHECK(p(2, 0) == -2.0);
  CHECK(p(2, 2) == 1.0);  // isolated: diagonal 1, everything else unreachable
  CHECK(p(2, 3) == -2.0);
  CHECK(p(0, 1) == doctest::Approx(-1.0));  // diameter-1 row

  CHECK_THROWS_AS(eden::phase_propagation(eden::apsp(g), -0.5),
                  std::invalid_argument);
}

TEST_CASE("phase matrix range properties on random graphs") {
  for (int s = 0; s < 100; ++s) {
    const int n = 2 + s % 12;
    const Graph g = eden::erdos_renyi(n, (s % 2) ? 0.2 : 0.5, 4000 + s);
    const eden::DistanceMatrix d = eden::apsp(g);
    const std::vector<int32_t> diam = eden::diameter_vector(d);
    const Matrix p = eden::phase_propagation(d, -1.5);
    for (int i = 0; i < n; ++i) {
      CHECK(p(i, i) == 1.0);
      int ones = 0;
      for (int j = 0; j < n; ++j) {
        const bool in_band = p(i, j) >= -1.0 && p(i, j) <= 1.0;
        CHECK((in_band || p(i, j) == -1.5));
        if (p(i, j) == 1.0) ++ones;
      }
      if (diam[i] > 0) CHECK(ones == 1);  // the self entry only
    }
  }
}

TEST_CASE("eden_encode matches the published decalin singular values") {
  EncoderConfig cfg;  // m=3, column-mean centering
  const Encoding e = eden::eden_encode(eden::fixture_graph("decalin"), cfg);
  CHECK(e.singular_values[0] == doctest::Approx(4.9790).epsilon(1e-3));
  CHECK(e.singular_values[1] == doctest::Approx(3.5061).epsilon(1e-3));
  CHECK(e.singular_values[2] == doctest::Approx(2.1254).epsilon(1e-3));
  CHECK_FALSE(e.degenerate);
}

TEST_CASE("eden_encode is equivariant on clean graphs") {
  EncoderConfig cfg;
  int tested = 0;
  for (int seed = 300; seed < 340; ++seed) {
    const Graph g = eden::erdos_renyi(12, 0.4, seed);
    const Encoding e = eden::eden_encode(g, cfg);
    if (e.degenerate || e.sign_ties) continue;
    const eden::Permutation p = eden::random_permutation(12, seed + 1000);
    const Encoding pe = eden::eden_encode(eden::apply_permutation(g, p), cfg);
    for (int u = 0; u < 12; ++u)
      CHECK((pe.values.row(u) - e.values.row(p(u))).cwiseAbs().maxCoeff() <
            1e-8);
    ++tested;
  }
  CHECK(tested > 10);  // most dense random graphs have simple spectra
}

TEST_CASE("singular values are permutation-invariant even when degenerate") {
  // Regression: a graph whose centered phase matrix has rank 2, so the third
  // gram eigenvalue is pure solver noise; sqrt of that noise used to leak
  // labeling-dependent ~1e-8 values into the singular-value profile and flip
  // a permuted pair to NON_ISOMORPHIC.
  EncoderConfig cfg;
  const Graph g = eden::parse_graph6("G?LTE?");
  const Encoding e = eden::eden_encode(g, cfg);
  CHECK(e.degenerate);
  CHECK(e.singular_values[2] == 0.0);  // exactly zero after rank clamping
  for (uint64_t seed : {14479583944445290584ULL, 1ULL, 2ULL, 3ULL}) {
    const Encoding ep = eden::eden_encode(
        eden::apply_permutation(g, eden::random_permutation(8, seed)), cfg);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(ep.singular_values[i] - e.singular_values[i]) < 1e-8);
  }

  // The same property over random graphs with no degeneracy filter.
  std::mt19937_64 rng(1717);
  for (int k = 0; k < 60; ++k) {
    const int n = 3 + static_cast<int>(rng() % 15);
    const Graph h = eden::erdos_renyi(n, (k % 2) ? 0.5 : 0.2, rng());
    const Encoding a = eden::eden_encode(h, cfg);
    const Encoding b = eden::eden_encode(
        eden::apply_permutation(h, eden::random_permutation(n, rng())), cfg);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(a.singular_values[i] - b.singular_values[i]) < 1e-8);
  }
}

TEST_CASE("eden_encode validates m against n") {
  EncoderConfig cfg;
  cfg.m = 5;
  CHECK_THROWS_AS(eden::eden_encode(eden::make_graph(3, {{0, 1}}), cfg),
                  std::invalid_argument);
  cfg.m = 0;
  CHECK_THROWS_AS(eden::eden_encode(eden::make_graph(3, {{0, 1}}), cfg),
                  std::invalid_argument);
  cfg.m = 3;
  cfg.unreachable_value = -1.0;  // must be strictly below -1
  CHECK_THROWS_AS(eden::eden_encode(eden::make_graph(3, {{0, 1}}), cfg),
                  std::invalid_argument);
}

TEST_CASE("baseline matrices: raw, normalized, reversed") {
  const Graph g = eden::make_graph(4, {{0, 1}, {1, 2}});  // node 3 unreachable
  const Matrix s1 = eden::baseline_matrix(g, BaselineMode::kS1);
  CHECK(s1(0, 1) == 1.0);
  CHECK(s1(0, 2) == 2.0);
  CHECK(s1(0, 0) == 0.0);
  CHECK(s1(0, 3) == -1.0);  // unreachable sentinel

  bool collapsed = true;
  const Matrix s2 = eden::baseline_matrix(g, BaselineMode::kS2, &collapsed);
  CHECK_FALSE(collapsed);
  CHECK(s2(0, 0) == 0.0);        // min distance
  CHECK(s2(0, 2) == 1.0);        // max distance
  CHECK(s2(0, 1) == doctest::Approx(0.5));
  CHECK(s2(0, 3) == -1.0);

  const Matrix s3 = eden::baseline_matrix(g, BaselineMode::kS3);
  CHECK(s3(0, 0) == 1.0);
  CHECK(s3(0, 2) == 0.0);
  CHECK(s3(0, 3) == -1.0);

  // Single node: min == max collapses the normalization.
  const Graph k1 = eden::make_graph(1, {});
  const Matrix c2 = eden::baseline_matrix(k1, BaselineMode::kS2, &collapsed);
  CHECK(collapsed);
  CHECK(c2(0, 0) == 0.0);
  const Matrix c3 = eden::baseline_matrix(k1, BaselineMode::kS3, &collapsed);
  CHECK(c3(0, 0) == 1.0);

  EncoderConfig cfg;
  cfg.m = 1;
  const Encoding enc = eden::encode_baseline(k1, BaselineMode::kS2, cfg);
  CHECK(enc.note.find("collapsed") != std::string::npos);
}

TEST_CASE("S2/S3 finite entries stay in [0,1] on random graphs") {
  for (int s = 0; s < 60; ++s) {
    const Graph g = eden::erdos_renyi(3 + s % 10, 0.3, 6000 + s);
    for (BaselineMode mode : {BaselineMode::kS2, BaselineMode::kS3}) {
      const Matrix x = eden::baseline_matrix(g, mode);
      for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
          CHECK(((x(i, j) >= 0.0 && x(i, j) <= 1.0) || x(i, j) == -1.0));
    }
  }
}

TEST_CASE("laplacian_pe pinned spectra") {
  // P3 Laplacian eigenvalues {0, 1, 3}.
  const Graph p3 = eden::make_graph(3, {{0, 1}, {1, 2}});
  const Encoding largest = eden::laplacian_pe(p3, 2, LaplacianWhich::kLargest);
  CHECK(largest.singular_values[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(largest.singular_values[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(largest.degenerate);

  const Encoding small1 =
      eden::laplacian_pe(p3, 1, LaplacianWhich::kSmallestNontrivial);
  CHECK(small1.singular_values[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(small1.degenerate);

  // K3 Laplacian eigenvalues {0, 3, 3}: the selected eigenvalue repeats in
  // the full spectrum, so the encoding is degenerate.
  const Graph k3 = eden::make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const Encoding deg = eden::laplacian_pe(k3, 1, LaplacianWhich::kSmallestNontrivial);
  CHECK(deg.singular_values[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(deg.degenerate);

  CHECK_THROWS_AS(eden::laplacian_pe(p3, 3, LaplacianWhich::kSmallestNontrivial),
                  std::invalid_argument);
  CHECK_NOTHROW(eden::laplacian_pe(p3, 3, LaplacianWhich::kLargest));
  CHECK_THROWS_AS(eden::laplacian_pe(p3, 0, LaplacianWhich::kLargest),
                  std::invalid_argument);
}

TEST_CASE("laplacian eigenvectors reconstruct L") {
  const Graph g = eden::erdos_renyi(9, 0.4, 808);
  const Encoding full = eden::laplacian_pe(g, 9, LaplacianWhich::kLargest);
  // Selected values are the whole spectrum; check the smallest is ~0 and the
  // sum equals twice the edge count (trace of L).
  CHECK(full.singular_values[8] == doctest::Approx(0.0).epsilon(1e-9));
  double trace = 0.0;
  for (int i = 0; i < 9; ++i) trace += full.singular_values[i];
  CHECK(trace == doctest::Approx(2.0 * g.edge_count()).epsilon(1e-9));
}

TEST_CASE("normalize_unit rescales globally or per row") {
  Encoding e;
  e.n = 2;
  e.m = 2;
  e.values = Matrix(2, 2);
  e.values << 0.0, 1.0, 3.0, 4.0;
  e.singular_values = eden::Vector::Ones(2);

  const Encoding global = eden::normalize_unit(e);
  CHECK(global.values(0, 0) == 0.0);
  CHECK(global.values(1, 1) == 1.0);
  CHECK(global.values(0, 1) == doctest::Approx(0.25));
  CHECK(global.note.empty());
  CHECK((global.singular_values - e.singular_values).cwiseAbs().maxCoeff() ==
        0.0);

  const Encoding by_row = eden::normalize_unit(e, true);
  CHECK(by_row.values(0, 0) == 0.0);
  CHECK(by_row.values(0, 1) == 1.0);
  CHECK(by_row.values(1, 0) == 0.0);
  CHECK(by_row.values(1, 1) == 1.0);

  Encoding flat = e;
  flat.values.setConstant(2.5);
  const Encoding c = eden::normalize_unit(flat);
  CHECK(c.values(0, 0) == 0.5);
  CHECK(c.values(1, 1) == 0.5);
  CHECK(c.note.find("0.5") != std::string::npos);
}
