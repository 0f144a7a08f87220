#include "eden.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "encoders.hpp"
#include "graph.hpp"
#include "isotest.hpp"
#include "spectral.hpp"

struct eden_graph {
  eden::Graph g;
};

struct eden_encoding {
  eden::Encoding e;
  std::vector<double> row_major;  // rows*dims copy handed to C callers
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <typename F>
eden_status guarded(F&& body) {
  try {
    return body();
  } catch (const eden::ParseError& ex) {
    set_error(ex.what());
    return EDEN_ERR_PARSE;
  } catch (const std::invalid_argument& ex) {
    set_error(ex.what());
    return EDEN_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return EDEN_ERR_NO_MEMORY;
  } catch (const std::exception& ex) {
    set_error(ex.what());
    return EDEN_ERR_NUMERIC;
  }
}

eden_status require(bool ok, const char* message) {
  if (ok) return EDEN_OK;
  set_error(message);
  return EDEN_ERR_INVALID_ARGUMENT;
}

eden::EncoderConfig to_config(const eden_config* c) {
  eden::EncoderConfig cfg;
  if (!c) return cfg;
  cfg.m = c->m;
  switch (c->centering) {
    case EDEN_CENTERING_MEAN: cfg.centering = eden::Centering::kColumnMean; break;
    case EDEN_CENTERING_NONE: cfg.centering = eden::Centering::kNone; break;
    default: throw std::invalid_argument("unknown centering mode");
  }
  cfg.gap_tol = c->gap_tol;
  cfg.tie_tol = c->tie_tol;
  cfg.unreachable_value = c->unreachable_value;
  return cfg;
}

eden::Thresholds to_thresholds(const eden_thresholds* t) {
  eden::Thresholds out;
  if (t) {
    out.tau_sv = t->tau_sv;
    out.tau_row = t->tau_row;
  }
  return out;
}

eden_encoding* wrap(eden::Encoding e) {
  auto* out = new eden_encoding{std::move(e), {}};
  const auto rows = out->e.values.rows();
  const auto dims = out->e.values.cols();
  out->row_major.resize(static_cast<std::size_t>(rows) * dims);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < dims; ++j)
      out->row_major[static_cast<std::size_t>(i) * dims + j] = out->e.values(i, j);
  return out;
}

std::vector<eden::Graph> unwrap_all(const eden_graph* const* graphs, size_t count) {
  std::vector<eden::Graph> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (!graphs[i]) throw std::invalid_argument("graph list contains a null entry");
    out.push_back(graphs[i]->g);
  }
  return out;
}

}  // namespace

extern "C" {

eden_config eden_config_default(void) {
  eden_config c;
  c.m = 3;
  c.centering = EDEN_CENTERING_MEAN;
  c.gap_tol = eden::kDefaultGapTol;
  c.tie_tol = eden::kDefaultTieTol;
  c.unreachable_value = -1.5;
  return c;
}

eden_thresholds eden_thresholds_default(void) {
  eden_thresholds t;
  t.tau_sv = 1e-8;
  t.tau_row = 1e-8;
  return t;
}

const char* eden_last_error(void) { return g_last_error.c_str(); }

eden_status eden_graph_create(int n, const int* edges, size_t edge_count,
                              eden_graph** out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(edges != nullptr || edge_count == 0,
                              "null edge array with nonzero count"))
    return s;
  return guarded([&] {
    std::vector<std::pair<int, int>> e(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      e[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = new eden_graph{eden::make_graph(n, e)};
    return EDEN_OK;
  });
}

eden_status eden_graph_parse_graph6(const char* line, eden_graph** out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(line != nullptr, "null input line")) return s;
  return guarded([&] {
    *out = new eden_graph{eden::parse_graph6(line)};
    return EDEN_OK;
  });
}

eden_status eden_graph_parse_edge_list(const char* text, eden_graph** out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(text != nullptr, "null input text")) return s;
  return guarded([&] {
    *out = new eden_graph{eden::parse_edge_list(text)};
    return EDEN_OK;
  });
}

eden_status eden_graph_fixture(const char* name, eden_graph** out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(name != nullptr, "null fixture name")) return s;
  return guarded([&] {
    *out = new eden_graph{eden::fixture_graph(name)};
    return EDEN_OK;
  });
}

eden_status eden_graph_erdos_renyi(int n, double p, uint64_t seed,
                                   eden_graph** out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = new eden_graph{eden::erdos_renyi(n, p, seed)};
    return EDEN_OK;
  });
}

eden_status eden_graph_permute(const eden_graph* g, uint64_t seed,
                               eden_graph** out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(g != nullptr, "null graph")) return s;
  return guarded([&] {
    const eden::Permutation p = eden::random_permutation(g->g.n, seed);
    *out = new eden_graph{eden::apply_permutation(g->g, p)};
    return EDEN_OK;
  });
}

eden_status eden_graph_serialize_graph6(const eden_graph* g, char* buf,
                                        size_t cap, size_t* needed) {
  if (eden_status s = require(g != nullptr, "null graph")) return s;
  if (eden_status s = require(needed != nullptr, "null size pointer")) return s;
  return guarded([&] {
    const std::string s = eden::serialize_graph6(g->g);
    *needed = s.size() + 1;
    if (!buf) return EDEN_OK;  // size query
    if (cap < *needed) {
      set_error("buffer too small");
      return EDEN_ERR_INVALID_ARGUMENT;
    }
    std::memcpy(buf, s.c_str(), *needed);
    return EDEN_OK;
  });
}

int eden_graph_nodes(const eden_graph* g) { return g ? g->g.n : -1; }

int eden_graph_edges(const eden_graph* g) {
  return g ? static_cast<int>(g->g.edge_count()) : -1;
}

eden_status eden_graph_edge(const eden_graph* g, int index, int* u, int* v) {
  if (eden_status s = require(g != nullptr, "null graph")) return s;
  if (eden_status s = require(u != nullptr && v != nullptr, "null output pointer"))
    return s;
  if (eden_status s = require(index >= 0 && index < static_cast<int>(g->g.edges.size()),
                              "edge index out of range"))
    return s;
  *u = g->g.edges[static_cast<std::size_t>(index)].first;
  *v = g->g.edges[static_cast<std::size_t>(index)].second;
  return EDEN_OK;
}

void eden_graph_free(eden_graph* g) { delete g; }

eden_status eden_encode(const eden_graph* g, eden_encoder which,
                        const eden_config* cfg, eden_encoding** out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(g != nullptr, "null graph")) return s;
  return guarded([&] {
    const eden::EncoderConfig c = to_config(cfg);
    eden::Encoding e;
    switch (which) {
      case EDEN_ENCODER_EDEN:
        e = eden::eden_encode(g->g, c);
        break;
      case EDEN_ENCODER_S1:
        e = eden::encode_baseline(g->g, eden::BaselineMode::kS1, c);
        break;
      case EDEN_ENCODER_S2:
        e = eden::encode_baseline(g->g, eden::BaselineMode::kS2, c);
        break;
      case EDEN_ENCODER_S3:
        e = eden::encode_baseline(g->g, eden::BaselineMode::kS3, c);
        break;
      case EDEN_ENCODER_LAP_MIN:
        e = eden::laplacian_pe(g->g, c.m, eden::LaplacianWhich::kSmallestNontrivial,
                               c.gap_tol, c.tie_tol);
        break;
      case EDEN_ENCODER_LAP_MAX:
        e = eden::laplacian_pe(g->g, c.m, eden::LaplacianWhich::kLargest,
                               c.gap_tol, c.tie_tol);
        break;
      default:
        throw std::invalid_argument("unknown encoder");
    }
    *out = wrap(std::move(e));
    return EDEN_OK;
  });
}

int eden_encoding_rows(const eden_encoding* e) { return e ? e->e.n : -1; }

int eden_encoding_dims(const eden_encoding* e) { return e ? e->e.m : -1; }

const double* eden_encoding_values(const eden_encoding* e) {
  return e ? e->row_major.data() : nullptr;
}

const double* eden_encoding_singular_values(const eden_encoding* e) {
  return e ? e->e.singular_values.data() : nullptr;
}

int eden_encoding_degenerate(const eden_encoding* e) {
  return e ? (e->e.degenerate ? 1 : 0) : -1;
}

int eden_encoding_sign_ties(const eden_encoding* e) {
  return e ? (e->e.sign_ties ? 1 : 0) : -1;
}

const char* eden_encoding_note(const eden_encoding* e) {
  return e ? e->e.note.c_str() : nullptr;
}

eden_status eden_encoding_normalize_unit(const eden_encoding* e, int per_row,
                                         eden_encoding** out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(e != nullptr, "null encoding")) return s;
  return guarded([&] {
    *out = wrap(eden::normalize_unit(e->e, per_row != 0));
    return EDEN_OK;
  });
}

void eden_encoding_free(eden_encoding* e) { delete e; }

eden_status eden_compare(const eden_graph* a, const eden_graph* b,
                         const eden_thresholds* t, const eden_config* cfg,
                         eden_verdict* verdict, char* reason, size_t reason_cap) {
  if (eden_status s = require(verdict != nullptr, "null verdict pointer")) return s;
  if (eden_status s = require(a != nullptr && b != nullptr, "null graph")) return s;
  return guarded([&] {
    const eden::PairReport r =
        eden::compare_pair(a->g, b->g, to_thresholds(t), to_config(cfg));
    switch (r.verdict) {
      case eden::Verdict::kNonIsomorphic: *verdict = EDEN_VERDICT_NON_ISOMORPHIC; break;
      case eden::Verdict::kPossiblyIsomorphic:
        *verdict = EDEN_VERDICT_POSSIBLY_ISOMORPHIC;
        break;
      case eden::Verdict::kInconclusive: *verdict = EDEN_VERDICT_INCONCLUSIVE; break;
    }
    if (reason && reason_cap > 0)
      std::snprintf(reason, reason_cap, "%s", r.reason.c_str());
    return EDEN_OK;
  });
}

eden_status eden_calibrate(const eden_graph* const* graphs, size_t count,
                           int trials, uint64_t seed, const eden_config* cfg,
                           eden_thresholds* out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(graphs != nullptr && count > 0, "empty graph list"))
    return s;
  return guarded([&] {
    const eden::Thresholds t = eden::calibrate_thresholds(
        unwrap_all(graphs, count), trials, seed, to_config(cfg));
    out->tau_sv = t.tau_sv;
    out->tau_row = t.tau_row;
    return EDEN_OK;
  });
}

eden_status eden_scan(const eden_graph* const* graphs, size_t count,
                      const eden_thresholds* t, const eden_config* cfg,
                      eden_scan_report* out) {
  if (eden_status s = require(out != nullptr, "null output pointer")) return s;
  if (eden_status s = require(graphs != nullptr || count == 0, "null graph list"))
    return s;
  return guarded([&] {
    const eden::ScanReport r = eden::dataset_scan(
        graphs ? unwrap_all(graphs, count) : std::vector<eden::Graph>{},
        to_thresholds(t), to_config(cfg));
    out->corpus_size = r.corpus_size;
    out->pairs_total = r.pairs_total;
    out->non_isomorphic = r.non_isomorphic;
    out->possibly_isomorphic = r.possibly_isomorphic;
    out->inconclusive = r.inconclusive;
    out->misjudged = r.misjudged;
    out->wall_ms = r.wall_ms;
    return EDEN_OK;
  });
}

}  // extern "C"
