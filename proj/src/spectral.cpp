#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eden {

SpectralDecomposition sym_eigendecomp(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("matrix is not symmetric within 1e-10");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigendecomposition failed to converge");

  const auto k = m.rows();
  SpectralDecomposition d;
  d.eigenvalues = solver.eigenvalues().reverse();  // ascending -> non-increasing
  d.eigenvectors = solver.eigenvectors().rowwise().reverse();
  d.sign_ambiguous.assign(static_cast<std::size_t>(k), false);
  return d;
}

SpectralDecomposition fix_signs(SpectralDecomposition d, double tie_tol) {
  const auto k = d.eigenvectors.cols();
  for (Eigen::Index c = 0; c < k; ++c) {
    auto col = d.eigenvectors.col(c);
    const double amax = col.cwiseAbs().maxCoeff();
    Eigen::Index lead = -1;
    int tied = 0;
    for (Eigen::Index i = 0; i < col.size(); ++i)
      if (std::abs(col[i]) >= amax - tie_tol) {
        ++tied;
        if (lead < 0) lead = i;
      }
    if (tied > 1) d.sign_ambiguous[static_cast<std::size_t>(c)] = true;
    if (col[lead] < 0) col = -col;
  }
  return d;
}

namespace {

// Sign of sorted(col) vs sorted(-col), descending, first difference > fuzz.
// Zero means the column's value multiset is negation-symmetric within fuzz.
int compare_with_negation(const Vector& col, double fuzz) {
  std::vector<double> p(col.data(), col.data() + col.size());
  std::vector<double> q;
  q.reserve(p.size());
  for (double v : p) q.push_back(-v);
  std::sort(p.begin(), p.end(), std::greater<>());
  std::sort(q.begin(), q.end(), std::greater<>());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] - q[i] > fuzz) return 1;
    if (q[i] - p[i] > fuzz) return -1;
  }
  return 0;
}

}  // namespace

int compare_row_multisets(const Matrix& a, const Matrix& b, double fuzz) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch in row-multiset comparison");
  const Eigen::Index n = a.rows(), m = a.cols();

  // Blocks of row indices currently fuzzy-equal between the two sides.
  struct Block {
    std::vector<int> ra, rb;
  };
  std::vector<Block> blocks(1);
  blocks[0].ra.resize(static_cast<std::size_t>(n));
  std::iota(blocks[0].ra.begin(), blocks[0].ra.end(), 0);
  blocks[0].rb = blocks[0].ra;

  for (Eigen::Index k = 0; k < m; ++k) {
    std::vector<Block> next;
    next.reserve(blocks.size());
    for (Block& blk : blocks) {
      auto by_col_desc = [&](const Matrix& mat) {
        return [&, k](int i, int j) { return mat(i, k) > mat(j, k); };
      };
      std::stable_sort(blk.ra.begin(), blk.ra.end(), by_col_desc(a));
      std::stable_sort(blk.rb.begin(), blk.rb.end(), by_col_desc(b));
      const std::size_t len = blk.ra.size();
      for (std::size_t i = 0; i < len; ++i) {
        const double va = a(blk.ra[i], k), vb = b(blk.rb[i], k);
        if (va - vb > fuzz) return 1;
        if (vb - va > fuzz) return -1;
      }
      std::size_t start = 0;
      for (std::size_t i = 1; i <= len; ++i) {
        if (i == len || a(blk.ra[i - 1], k) - a(blk.ra[i], k) > fuzz) {
          Block sub;
          sub.ra.assign(blk.ra.begin() + start, blk.ra.begin() + i);
          sub.rb.assign(blk.rb.begin() + start, blk.rb.begin() + i);
          next.push_back(std::move(sub));
          start = i;
        }
      }
    }
    blocks = std::move(next);
  }
  return 0;
}

namespace {

constexpr int kMaxAmbiguousColumns = 10;

void resolve_score_signs(Matrix& scores, const Matrix& eigvecs, double tie_tol,
                         double fuzz, bool& sign_ties, bool& overflow) {
  const Eigen::Index m = scores.cols();
  std::vector<Eigen::Index> ambiguous;

  for (Eigen::Index k = 0; k < m; ++k) {
    auto col = scores.col(k);
    const double amax = col.cwiseAbs().maxCoeff();
    bool pos = false, neg = false;
    int tied = 0;
    for (Eigen::Index i = 0; i < col.size(); ++i)
      if (std::abs(col[i]) >= amax - tie_tol) {
        ++tied;
        if (col[i] > 0) pos = true;
        if (col[i] < 0) neg = true;
      }
    if (tied > 1) sign_ties = true;
    if (!(pos && neg)) {
      if (neg) col = -col;
      continue;
    }
    const int cmp = compare_with_negation(col, fuzz);
    if (cmp != 0) {
      if (cmp < 0) col = -col;
      continue;
    }
    // Negation-symmetric column: provisional sign by the eigenvector
    // lowest-index rule, final sign by the global multiset pass below.
    ambiguous.push_back(k);
    auto vcol = eigvecs.col(k);
    const double vmax = vcol.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < vcol.size(); ++i)
      if (std::abs(vcol[i]) >= vmax - tie_tol) {
        if (vcol[i] < 0) col = -col;
        break;
      }
  }

  if (ambiguous.empty()) return;
  if (ambiguous.size() > kMaxAmbiguousColumns) {
    overflow = true;
    return;
  }
  const std::uint32_t patterns = 1u << ambiguous.size();
  Matrix best = scores;
  for (std::uint32_t bits = 1; bits < patterns; ++bits) {
    Matrix cand = scores;
    for (std::size_t i = 0; i < ambiguous.size(); ++i)
      if (bits >> i & 1u) cand.col(ambiguous[i]) = -cand.col(ambiguous[i]);
    if (compare_row_multisets(cand, best, fuzz) > 0) best = std::move(cand);
  }
  scores = std::move(best);
}

}  // namespace

Encoding pca_project(const Matrix& x, int m, Centering centering,
                     double gap_tol, double tie_tol) {
  const Eigen::Index n = x.rows(), k = x.cols();
  if (m < 1 || m > std::min(n, k))
    throw std::invalid_argument("target dimension m must be in [1, min(n,k)]");

  Matrix xc = x;
  if (centering == Centering::kColumnMean)
    xc.rowwise() -= x.colwise().mean();

  const Matrix gram = xc.transpose() * xc;
  SpectralDecomposition dec = sym_eigendecomp(gram);

  // Eigenvalues below the numerical-rank floor are indistinguishable from
  // zero at working precision. Pin them to zero so sqrt cannot amplify
  // labeling-dependent solver noise (~sqrt(eps*scale), which lands right at
  // comparison-threshold magnitude) into the singular values.
  const double rank_floor = std::max(0.0, dec.eigenvalues[0]) * 1e-12;
  for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
    if (dec.eigenvalues[i] < rank_floor) dec.eigenvalues[i] = 0.0;

  Encoding e;
  e.n = static_cast<int>(n);
  e.m = m;
  e.singular_values = Vector(m);
  for (int i = 0; i < m; ++i)
    e.singular_values[i] = std::sqrt(std::max(0.0, dec.eigenvalues[i]));
  e.values = xc * dec.eigenvectors.leftCols(m);

  for (int i = 0; i < m; ++i) {
    const double next = (i + 1 < k) ? dec.eigenvalues[i + 1]
                                    : -std::numeric_limits<double>::infinity();
    if (dec.eigenvalues[i] - next < gap_tol) e.degenerate = true;
  }
  if (dec.eigenvalues[m - 1] < gap_tol) e.degenerate = true;

  bool overflow = false;
  resolve_score_signs(e.values, dec.eigenvectors, tie_tol, kMultisetFuzz,
                      e.sign_ties, overflow);
  if (overflow) {
    e.degenerate = true;
    e.note = "sign canonicalization skipped: more than 10 ambiguous columns";
  }
  return e;
}

}  // namespace eden
