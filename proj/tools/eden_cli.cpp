#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eden.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit code 2: bad input data (unreadable files, parse failures, shape errors).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Exit code 1: semantically invalid flag combinations CLI11 cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphFree {
  void operator()(eden_graph* g) const { eden_graph_free(g); }
};
using GraphPtr = std::unique_ptr<eden_graph, GraphFree>;

struct EncodingFree {
  void operator()(eden_encoding* e) const { eden_encoding_free(e); }
};
using EncodingPtr = std::unique_ptr<eden_encoding, EncodingFree>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// graph6 bytes live in [63,126] and never include decimal digits, so a
// leading digit (or a bare "n" count header) marks an edge list.
bool looks_like_edge_list(const std::string& text) {
  const std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) return false;
  const char c = text[i];
  if (std::isdigit(static_cast<unsigned char>(c))) return true;
  if (c == 'n')
    return i + 1 >= text.size() ||
           std::isspace(static_cast<unsigned char>(text[i + 1]));
  return false;
}

// An input argument is a file path (graph6 lines or an edge list) or a
// built-in fixture name.
std::vector<GraphPtr> load_input(const std::string& arg) {
  namespace fs = std::filesystem;
  std::vector<GraphPtr> out;
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    const std::string text = slurp(arg);
    if (looks_like_edge_list(text)) {
      eden_graph* g = nullptr;
      if (eden_graph_parse_edge_list(text.c_str(), &g) != EDEN_OK)
        throw DataError(arg + ": " + eden_last_error());
      out.emplace_back(g);
      return out;
    }
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    bool first = true;
    while (std::getline(lines, line)) {
      ++lineno;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (first && line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
      first = false;
      if (line.empty()) continue;
      eden_graph* g = nullptr;
      if (eden_graph_parse_graph6(line.c_str(), &g) != EDEN_OK)
        throw DataError(arg + ":" + std::to_string(lineno) + ": " +
                        eden_last_error());
      out.emplace_back(g);
    }
    if (out.empty()) throw DataError(arg + ": no graphs found");
    return out;
  }
  eden_graph* g = nullptr;
  if (eden_graph_fixture(arg.c_str(), &g) != EDEN_OK)
    throw DataError("no such file or fixture '" + arg + "' (" +
                    eden_last_error() + ")");
  out.emplace_back(g);
  return out;
}

std::vector<GraphPtr> load_inputs(const std::vector<std::string>& args) {
  std::vector<GraphPtr> out;
  for (const std::string& a : args) {
    std::vector<GraphPtr> part = load_input(a);
    for (GraphPtr& g : part) out.push_back(std::move(g));
  }
  return out;
}

struct Options {
  std::vector<std::string> inputs;
  std::string encoder = "eden";
  int dims = 3;
  std::string centering = "mean";
  double tau_sv = 1e-8;
  double tau_row = 1e-8;
  int trials = 5;
  std::uint64_t seed = 0;
  std::string format;
  std::string out;
};

eden_config make_config(const Options& o) {
  eden_config cfg = eden_config_default();
  cfg.m = o.dims;
  cfg.centering =
      (o.centering == "none") ? EDEN_CENTERING_NONE : EDEN_CENTERING_MEAN;
  return cfg;
}

eden_encoder encoder_from_name(const std::string& name) {
  if (name == "eden") return EDEN_ENCODER_EDEN;
  if (name == "s1") return EDEN_ENCODER_S1;
  if (name == "s2") return EDEN_ENCODER_S2;
  if (name == "s3") return EDEN_ENCODER_S3;
  if (name == "lap-min") return EDEN_ENCODER_LAP_MIN;
  if (name == "lap-max") return EDEN_ENCODER_LAP_MAX;
  throw UsageError("unknown encoder: " + name);
}

void write_payload(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DataError("cannot write file: " + out_path);
  f << payload;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

EncodingPtr encode_or_throw(const eden_graph* g, eden_encoder which,
                            const eden_config& cfg) {
  eden_encoding* e = nullptr;
  if (eden_encode(g, which, &cfg, &e) != EDEN_OK)
    throw DataError(eden_last_error());
  return EncodingPtr(e);
}

GraphPtr single_graph(const Options& o, const char* cmd) {
  std::vector<GraphPtr> graphs = load_inputs(o.inputs);
  if (graphs.size() != 1)
    throw DataError(std::string(cmd) + " expects exactly one graph, got " +
                    std::to_string(graphs.size()));
  return std::move(graphs.front());
}

json sidecar_json(const Options& o, const eden_encoding* e) {
  json side;
  side["encoder"] = o.encoder;
  side["nodes"] = eden_encoding_rows(e);
  side["dims"] = eden_encoding_dims(e);
  const double* sv = eden_encoding_singular_values(e);
  side["singular_values"] = std::vector<double>(sv, sv + eden_encoding_dims(e));
  side["degenerate"] = eden_encoding_degenerate(e) != 0;
  side["sign_ties"] = eden_encoding_sign_ties(e) != 0;
  side["note"] = eden_encoding_note(e);
  return side;
}

int run_encode(const Options& o) {
  const GraphPtr g = single_graph(o, "encode");
  const eden_config cfg = make_config(o);
  const EncodingPtr enc = encode_or_throw(g.get(), encoder_from_name(o.encoder), cfg);

  const int n = eden_encoding_rows(enc.get());
  const int m = eden_encoding_dims(enc.get());
  const double* vals = eden_encoding_values(enc.get());

  std::string payload;
  if (o.format == "json") {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < m; ++j) row.push_back(vals[i * m + j]);
      rows.push_back(std::move(row));
    }
    payload = rows.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "node";
    for (int j = 1; j <= m; ++j) csv << ",f" << j;
    csv << "\n";
    for (int i = 0; i < n; ++i) {
      csv << i;
      for (int j = 0; j < m; ++j) csv << ',' << fmt_double(vals[i * m + j]);
      csv << "\n";
    }
    payload = csv.str();
  }

  const std::string side = sidecar_json(o, enc.get()).dump() + "\n";
  write_payload(payload, o.out);
  if (o.out.empty())
    std::cerr << side;  // keep stdout single-format
  else
    std::cout << side;
  return 0;
}

int run_color(const Options& o) {
  if (o.dims != 3)
    throw UsageError("color requires --dims 3 (RGB channels)");
  const GraphPtr g = single_graph(o, "color");
  const eden_config cfg = make_config(o);
  const EncodingPtr enc = encode_or_throw(g.get(), EDEN_ENCODER_EDEN, cfg);

  if (eden_encoding_degenerate(enc.get()) != 0) {
    std::cerr << "warning: degenerate spectrum; colors are not permutation-stable";
    const char* note = eden_encoding_note(enc.get());
    if (note && *note) std::cerr << " (" << note << ")";
    std::cerr << "\n";
  }

  eden_encoding* un = nullptr;
  if (eden_encoding_normalize_unit(enc.get(), 0, &un) != EDEN_OK)
    throw DataError(eden_last_error());
  const EncodingPtr unit(un);

  const int n = eden_encoding_rows(unit.get());
  const double* vals = eden_encoding_values(unit.get());
  std::ostringstream dot;
  dot << "graph G {\n  node [style=filled];\n";
  for (int i = 0; i < n; ++i) {
    char color[8];
    const auto channel = [&](int j) {
      const long c = std::lround(vals[i * 3 + j] * 255.0);
      return static_cast<int>(std::clamp(c, 0L, 255L));
    };
    std::snprintf(color, sizeof(color), "#%02x%02x%02x", channel(0), channel(1),
                  channel(2));
    dot << "  " << i << " [fillcolor=\"" << color << "\"];\n";
  }
  const int edges = eden_graph_edges(g.get());
  for (int k = 0; k < edges; ++k) {
    int u = 0, v = 0;
    eden_graph_edge(g.get(), k, &u, &v);
    dot << "  " << u << " -- " << v << ";\n";
  }
  dot << "}\n";
  write_payload(dot.str(), o.out);
  return 0;
}

int run_pair(const Options& o) {
  std::vector<GraphPtr> graphs = load_inputs(o.inputs);
  if (graphs.size() != 2)
    throw DataError("pair expects exactly two graphs, got " +
                    std::to_string(graphs.size()));
  const eden_config cfg = make_config(o);
  eden_thresholds t = eden_thresholds_default();
  t.tau_sv = o.tau_sv;
  t.tau_row = o.tau_row;

  eden_verdict verdict;
  char reason[256] = {0};
  if (eden_compare(graphs[0].get(), graphs[1].get(), &t, &cfg, &verdict, reason,
                   sizeof(reason)) != EDEN_OK)
    throw DataError(eden_last_error());

  const char* name = verdict == EDEN_VERDICT_NON_ISOMORPHIC
                         ? "NON_ISOMORPHIC"
                         : verdict == EDEN_VERDICT_POSSIBLY_ISOMORPHIC
                               ? "POSSIBLY_ISOMORPHIC"
                               : "INCONCLUSIVE";
  json out;
  out["verdict"] = name;
  out["reason"] = reason;
  out["nodes"] = {eden_graph_nodes(graphs[0].get()),
                  eden_graph_nodes(graphs[1].get())};
  out["tau_sv"] = t.tau_sv;
  out["tau_row"] = t.tau_row;
  write_payload(out.dump() + "\n", o.out);
  return 0;
}

std::vector<const eden_graph*> raw_handles(const std::vector<GraphPtr>& graphs) {
  std::vector<const eden_graph*> raw;
  raw.reserve(graphs.size());
  for (const GraphPtr& g : graphs) raw.push_back(g.get());
  return raw;
}

int run_scan(const Options& o) {
  const std::vector<GraphPtr> graphs = load_inputs(o.inputs);
  const std::vector<const eden_graph*> raw = raw_handles(graphs);
  const eden_config cfg = make_config(o);
  eden_thresholds t = eden_thresholds_default();
  t.tau_sv = o.tau_sv;
  t.tau_row = o.tau_row;

  eden_scan_report rep;
  if (eden_scan(raw.data(), raw.size(), &t, &cfg, &rep) != EDEN_OK)
    throw DataError(eden_last_error());

  json out;
  out["corpus_size"] = rep.corpus_size;
  out["pairs_total"] = rep.pairs_total;
  out["non_isomorphic"] = rep.non_isomorphic;
  out["possibly_isomorphic"] = rep.possibly_isomorphic;
  out["inconclusive"] = rep.inconclusive;
  out["misjudged"] = rep.misjudged;
  out["wall_ms"] = rep.wall_ms;
  write_payload(out.dump() + "\n", o.out);
  return 0;
}

int run_calibrate(const Options& o) {
  const std::vector<GraphPtr> graphs = load_inputs(o.inputs);
  const std::vector<const eden_graph*> raw = raw_handles(graphs);
  const eden_config cfg = make_config(o);

  eden_thresholds t;
  if (eden_calibrate(raw.data(), raw.size(), o.trials, o.seed, &cfg, &t) != EDEN_OK)
    throw DataError(eden_last_error());

  json out;
  out["tau_sv"] = t.tau_sv;
  out["tau_row"] = t.tau_row;
  out["corpus_size"] = graphs.size();
  out["trials"] = o.trials;
  out["seed"] = o.seed;
  write_payload(out.dump() + "\n", o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant distance encodings and signature-based isomorphism testing"};
  app.require_subcommand(1);
  Options o;

  const auto add_inputs = [&](CLI::App* cmd, int lo, int hi, const char* what) {
    cmd->add_option("inputs", o.inputs, what)->required()->expected(lo, hi);
  };
  const auto add_dims = [&](CLI::App* cmd) {
    cmd->add_option("--dims", o.dims, "projection width m")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_centering = [&](CLI::App* cmd) {
    cmd->add_option("--centering", o.centering, "column centering before PCA")
        ->check(CLI::IsMember({"mean", "none"}))
        ->capture_default_str();
  };
  const auto add_thresholds = [&](CLI::App* cmd) {
    cmd->add_option("--tau-sv", o.tau_sv, "singular-value tolerance")
        ->capture_default_str();
    cmd->add_option("--tau-row", o.tau_row, "row-multiset tolerance")
        ->capture_default_str();
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "write primary output to PATH instead of stdout");
  };

  CLI::App* encode = app.add_subcommand("encode", "export per-node features");
  add_inputs(encode, 1, 1, "graph: fixture name, graph6 file, or edge-list file");
  encode->add_option("--encoder", o.encoder, "feature pipeline")
      ->check(CLI::IsMember({"eden", "s1", "s2", "s3", "lap-min", "lap-max"}))
      ->capture_default_str();
  add_dims(encode);
  add_centering(encode);
  encode->add_option("--format", o.format, "feature file format (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  add_out(encode);

  CLI::App* color = app.add_subcommand("color", "export DOT graph with RGB node colors");
  add_inputs(color, 1, 1, "graph: fixture name, graph6 file, or edge-list file");
  add_dims(color);
  add_centering(color);
  color->add_option("--format", o.format, "output format (default dot)")
      ->check(CLI::IsMember({"dot"}));
  add_out(color);

  CLI::App* pair = app.add_subcommand("pair", "compare two graphs");
  add_inputs(pair, 1, 2, "two graphs (two inputs, or one input holding two)");
  add_dims(pair);
  add_centering(pair);
  add_thresholds(pair);
  add_out(pair);

  CLI::App* scan = app.add_subcommand("scan", "all-pairs sweep over a corpus");
  add_inputs(scan, 1, -1, "corpus: fixture names and/or graph files");
  add_dims(scan);
  add_centering(scan);
  add_thresholds(scan);
  add_out(scan);

  CLI::App* calibrate =
      app.add_subcommand("calibrate", "derive thresholds from permuted copies");
  add_inputs(calibrate, 1, -1, "corpus: fixture names and/or graph files");
  add_dims(calibrate);
  add_centering(calibrate);
  calibrate->add_option("--trials", o.trials, "permuted copies per graph")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  calibrate->add_option("--seed", o.seed, "base RNG seed")->capture_default_str();
  add_out(calibrate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (encode->parsed()) return run_encode(o);
    if (color->parsed()) return run_color(o);
    if (pair->parsed()) return run_pair(o);
    if (scan->parsed()) return run_scan(o);
    if (calibrate->parsed()) return run_calibrate(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
