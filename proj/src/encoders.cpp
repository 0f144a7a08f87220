#include "encoders.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eden {

void validate(const EncoderConfig& cfg) {
  if (cfg.m < 1) throw std::invalid_argument("encoder config: m must be >= 1");
  if (!(cfg.unreachable_value < -1.0))
    throw std::invalid_argument("encoder config: unreachable_value must be < -1");
  if (!(cfg.gap_tol > 0.0) || !(cfg.tie_tol > 0.0))
    throw std::invalid_argument("encoder config: tolerances must be positive");
}

Matrix phase_propagation(const DistanceMatrix& d, double unreachable_value) {
  if (!(unreachable_value < -1.0))
    throw std::invalid_argument("phase_propagation: unreachable_value must be < -1");
  const int n = d.n;
  const std::vector<int32_t> diam = diameter_vector(d);
  Matrix p(n, n);
  for (int i = 0; i < n; ++i) {
    if (diam[i] == 0) {
      // Isolated vertex (or n = 1): nothing reachable but itself.
      for (int j = 0; j < n; ++j) p(i, j) = unreachable_value;
      p(i, i) = 1.0;
      continue;
    }
    const double di = static_cast<double>(diam[i]);
    for (int j = 0; j < n; ++j) {
      if (d.reachable(i, j))
        p(i, j) = std::cos(M_PI * static_cast<double>(d.hops(i, j)) / di);
      else
        p(i, j) = unreachable_value;
    }
    p(i, i) = 1.0;  // cos(0), kept exact
  }
  return p;
}

Encoding eden_encode(const Graph& g, const EncoderConfig& cfg) {
  validate(cfg);
  if (cfg.m > g.n)
    throw std::invalid_argument("eden_encode: m exceeds node count");
  const DistanceMatrix d = apsp(g);
  const Matrix p = phase_propagation(d, cfg.unreachable_value);
  return pca_project(p, cfg.m, cfg.centering, cfg.gap_tol, cfg.tie_tol);
}

Matrix baseline_matrix(const Graph& g, BaselineMode mode, bool* collapsed_out) {
  const DistanceMatrix d = apsp(g);
  const int n = g.n;
  Matrix x(n, n);

  bool collapsed = false;
  if (mode == BaselineMode::kS1) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        x(i, j) = d.reachable(i, j) ? static_cast<double>(d.hops(i, j)) : -1.0;
  } else {
    int32_t lo = std::numeric_limits<int32_t>::max();
    int32_t hi = std::numeric_limits<int32_t>::min();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d.reachable(i, j)) {
          lo = std::min(lo, d.hops(i, j));
          hi = std::max(hi, d.hops(i, j));
        }
    // The diagonal is always finite, so lo/hi are set for any graph.
    collapsed = (hi == lo);
    const double span = collapsed ? 1.0 : static_cast<double>(hi - lo);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!d.reachable(i, j)) {
          x(i, j) = -1.0;
          continue;
        }
        double v = collapsed ? 0.0 : (static_cast<double>(d.hops(i, j) - lo)) / span;
        x(i, j) = (mode == BaselineMode::kS3) ? 1.0 - v : v;
      }
  }
  if (collapsed_out) *collapsed_out = collapsed;
  return x;
}

Encoding encode_baseline(const Graph& g, BaselineMode mode, const EncoderConfig& cfg) {
  validate(cfg);
  if (cfg.m > g.n)
    throw std::invalid_argument("encode_baseline: m exceeds node count");
  bool collapsed = false;
  const Matrix x = baseline_matrix(g, mode, &collapsed);
  Encoding e = pca_project(x, cfg.m, cfg.centering, cfg.gap_tol, cfg.tie_tol);
  if (collapsed) {
    if (!e.note.empty()) e.note += "; ";
    e.note += "min-max collapsed: all finite distances equal";
  }
  return e;
}

Encoding laplacian_pe(const Graph& g, int m, LaplacianWhich which,
                      double gap_tol, double tie_tol) {
  const int n = g.n;
  if (m < 1) throw std::invalid_argument("laplacian_pe: m must be >= 1");
  const int avail = (which == LaplacianWhich::kSmallestNontrivial) ? n - 1 : n;
  if (m > avail)
    throw std::invalid_argument("laplacian_pe: m exceeds available eigenvalues");

  Matrix lap = Matrix::Zero(n, n);
  for (int u = 0; u < n; ++u) lap(u, u) = static_cast<double>(g.degree(u));
  for (const auto& [u, v] : g.edges) {
    lap(u, v) = -1.0;
    lap(v, u) = -1.0;
  }

  SpectralDecomposition dec = fix_signs(sym_eigendecomp(lap), tie_tol);

  // Eigenvalues are stored non-increasing; the smallest sits at index n-1.
  const int first = (which == LaplacianWhich::kSmallestNontrivial) ? n - 1 - m : 0;

  Encoding e;
  e.n = n;
  e.m = m;
  e.values = dec.eigenvectors.middleCols(first, m);
  e.singular_values.resize(m);
  e.degenerate = false;
  e.sign_ties = false;
  for (int j = 0; j < m; ++j) {
    const int s = first + j;
    e.singular_values[j] = std::max(0.0, dec.eigenvalues[s]);
    if (dec.sign_ambiguous[s]) e.sign_ties = true;
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      if (std::abs(dec.eigenvalues[s] - dec.eigenvalues[t]) < gap_tol) {
        e.degenerate = true;
        break;
      }
    }
  }
  return e;
}

Encoding normalize_unit(const Encoding& e, bool per_row) {
  Encoding out = e;
  const auto note_constant = [&out]() {
    if (out.note.find("constant block normalized to 0.5") != std::string::npos) return;
    if (!out.note.empty()) out.note += "; ";
    out.note += "constant block normalized to 0.5";
  };
  if (per_row) {
    for (int i = 0; i < out.values.rows(); ++i) {
      const double lo = out.values.row(i).minCoeff();
      const double hi = out.values.row(i).maxCoeff();
      if (hi - lo > 0.0)
        out.values.row(i) = (out.values.row(i).array() - lo) / (hi - lo);
      else {
        out.values.row(i).setConstant(0.5);
        note_constant();
      }
    }
  } else {
    const double lo = out.values.minCoeff();
    const double hi = out.values.maxCoeff();
    if (hi - lo > 0.0)
      out.values = (out.values.array() - lo) / (hi - lo);
    else {
      out.values.setConstant(0.5);
      note_constant();
    }
  }
  return out;
}

}  // namespace eden
