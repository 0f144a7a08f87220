#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace eden {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct SpectralDecomposition {
  Vector eigenvalues;           // non-increasing
  Matrix eigenvectors;          // orthonormal columns aligned with eigenvalues
  std::vector<bool> sign_ambiguous;  // per column, set by fix_signs
};

// Deterministic symmetric eigendecomposition. Throws std::invalid_argument if
// the input is asymmetric beyond 1e-10, std::runtime_error on solver
// non-convergence.
SpectralDecomposition sym_eigendecomp(const Matrix& m);

// Flips each eigenvector column so its largest-|value| entry is positive;
// ties within tie_tol resolve to the lowest index and set sign_ambiguous.
SpectralDecomposition fix_signs(SpectralDecomposition d, double tie_tol);

enum class Centering { kColumnMean, kNone };

struct Encoding {
  int n = 0;
  int m = 0;
  Matrix values;           // n x m scores
  Vector singular_values;  // length m, non-increasing
  bool degenerate = false; // retained spectrum has a repeat/near-repeat
  bool sign_ties = false;  // some retained column had a max-|value| tie
  std::string note;        // human-readable condition report (empty if none)
};

// Principal-component projection with a deterministic, permutation-invariant
// sign convention:
//   1. a score column with an untied (or same-signed) max-|value| entry is
//      flipped so that entry is positive;
//   2. a mixed-sign tie resolves by comparing the column's sorted values
//      against the sorted negated values (first difference > fuzz wins);
//   3. columns that are negation-symmetric as multisets get the eigenvector
//      lowest-index rule provisionally, then a global pass picks the flip
//      pattern maximizing the sorted-row multiset, so the emitted row
//      multiset is independent of input labeling.
// The degenerate flag fires on gap_tol-close adjacent eigenvalues anywhere in
// the retained window (quadratic scale, where perturbation bounds apply) or
// on a vanishing retained eigenvalue.
Encoding pca_project(const Matrix& x, int m, Centering centering,
                     double gap_tol = 1e-6, double tie_tol = 1e-9);

// Total preorder on row multisets, stable under fp noise well below fuzz:
// refines rows column-by-column into fuzzy-equal blocks and returns the sign
// of the first value difference exceeding fuzz (-1, 0, +1).
int compare_row_multisets(const Matrix& a, const Matrix& b, double fuzz);

inline constexpr double kDefaultGapTol = 1e-6;
inline constexpr double kDefaultTieTol = 1e-9;
inline constexpr double kMultisetFuzz = 1e-7;

}  // namespace eden
