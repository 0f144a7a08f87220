#pragma once

#include <string>

#include "distances.hpp"
#include "graph.hpp"
#include "spectral.hpp"

namespace eden {

struct EncoderConfig {
  int m = 3;
  Centering centering = Centering::kColumnMean;
  double gap_tol = kDefaultGapTol;
  double tie_tol = kDefaultTieTol;
  double unreachable_value = -1.5;  // must stay < -1
};

void validate(const EncoderConfig& cfg);

// Phase propagation: entry (i,j) = cos(pi * D_ij / d_i) for finite distances,
// unreachable_value otherwise; rows with d_i = 0 keep only the diagonal 1.
// Every entry lies in [-1,1] or equals unreachable_value; the diagonal is 1
// and, for rows with positive diameter, 1 appears nowhere else in the row.
Matrix phase_propagation(const DistanceMatrix& d, double unreachable_value = -1.5);

// BFS distances -> per-node diameters -> phase propagation -> PCA projection.
Encoding eden_encode(const Graph& g, const EncoderConfig& cfg);

// Ablation encoders sharing the PCA stage: S1 projects raw hop counts
// (unreachable -> -1), S2 min-max normalizes finite entries to [0,1], S3
// reverses S2. Min/max are taken over finite entries of the whole matrix;
// an all-equal finite range collapses S2 to 0 / S3 to 1 and is reported in
// Encoding.note.
enum class BaselineMode { kS1, kS2, kS3 };
// The pre-projection matrix the baseline encoders feed into pca_project;
// exposed so range properties can be checked on the real intermediate.
Matrix baseline_matrix(const Graph& g, BaselineMode mode, bool* collapsed = nullptr);
Encoding encode_baseline(const Graph& g, BaselineMode mode, const EncoderConfig& cfg);

// Laplacian positional encoding: eigenvectors of L = Deg - A with the
// fix_signs convention. SMALLEST_NONTRIVIAL skips the single smallest
// eigenvalue and takes the next m; LARGEST takes the m largest.
// singular_values carries the selected eigenvalues (non-increasing); the
// degenerate flag fires when a selected eigenvalue repeats anywhere in the
// full spectrum within gap_tol.
enum class LaplacianWhich { kSmallestNontrivial, kLargest };
Encoding laplacian_pe(const Graph& g, int m, LaplacianWhich which,
                      double gap_tol = kDefaultGapTol,
                      double tie_tol = kDefaultTieTol);

// Rescales values into [0,1] by global (default) or per-row min/max; a
// constant range maps to 0.5 and is reported in Encoding.note. Singular
// values and flags pass through (display transform for coloring).
Encoding normalize_unit(const Encoding& e, bool per_row = false);

}  // namespace eden
