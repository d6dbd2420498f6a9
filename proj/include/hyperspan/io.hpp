#pragma once

// Instance file format and DOT export.
//
// Instance grammar (one record per line, '#' starts a comment, blank lines
// ignored; vertices are 1-based in files and 0-based in memory):
//   hgr <q> <vertex_count>
//   e <label> <v1> ... <vq> w <weight>
// Weights are written with 17 significant digits so the canonical form
// round-trips doubles exactly.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspan/core.hpp"
#include "hyperspan/matching.hpp"

namespace hyperspan {

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

inline long long parse_int(const std::string& token, std::size_t line, const char* what) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const long long value = std::strtoll(begin, &end, 10);
  if (end != begin + token.size() || token.empty()) {
    parse_fail(line, std::string("expected an integer ") + what + ", got '" + token + "'");
  }
  return value;
}

inline double parse_real(const std::string& token, std::size_t line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size() || token.empty()) {
    parse_fail(line, "expected a weight, got '" + token + "'");
  }
  return value;
}

inline std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

}  // namespace detail

inline Hypergraph parse_instance(std::string_view text) {
  int q = 0;
  std::size_t vertex_count = 0;
  bool header_seen = false;
  std::vector<std::vector<VertexId>> edges;
  std::vector<double> weights;
  std::vector<std::string> labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::istringstream stream{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string token; stream >> token;) tokens.push_back(std::move(token));
    if (tokens.empty()) continue;

    if (!header_seen) {
      if (tokens[0] != "hgr" || tokens.size() != 3) {
        detail::parse_fail(line_no, "expected header 'hgr <q> <vertex_count>'");
      }
      const long long qv = detail::parse_int(tokens[1], line_no, "q");
      const long long nv = detail::parse_int(tokens[2], line_no, "vertex count");
      if (qv < 2) detail::parse_fail(line_no, "q must be at least 2, got " + tokens[1]);
      if (nv < 0) detail::parse_fail(line_no, "vertex count must be nonnegative");
      q = static_cast<int>(qv);
      vertex_count = static_cast<std::size_t>(nv);
      header_seen = true;
      continue;
    }

    if (tokens[0] != "e") {
      detail::parse_fail(line_no, "expected edge record 'e <label> <v1> ... <vq> w <weight>'");
    }
    if (tokens.size() != static_cast<std::size_t>(q) + 4 || tokens[tokens.size() - 2] != "w") {
      detail::parse_fail(line_no, "edge record needs " + std::to_string(q) +
                                      " vertices followed by 'w <weight>'");
    }
    const std::string& label = tokens[1];
    for (const std::string& prior : labels) {
      if (prior == label) detail::parse_fail(line_no, "duplicate edge label '" + label + "'");
    }
    std::vector<VertexId> vs;
    vs.reserve(q);
    for (int i = 0; i < q; ++i) {
      const long long v = detail::parse_int(tokens[2 + i], line_no, "vertex id");
      if (v < 1 || static_cast<std::size_t>(v) > vertex_count) {
        detail::parse_fail(line_no, std::string(errc_name(errc::vertex_out_of_range)) + ": vertex " +
                                        tokens[2 + i] + " outside 1.." + std::to_string(vertex_count));
      }
      vs.push_back(static_cast<VertexId>(v - 1));
    }
    std::vector<VertexId> distinct = vs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != static_cast<std::size_t>(q)) {
      detail::parse_fail(line_no, std::string(errc_name(errc::non_uniform_edge)) + ": edge '" + label +
                                      "' has " + std::to_string(distinct.size()) +
                                      " distinct vertices, expected " + std::to_string(q));
    }
    const double w = detail::parse_real(tokens.back(), line_no);
    if (!(w >= 0.0)) {
      detail::parse_fail(line_no, std::string(errc_name(errc::negative_weight)) + ": edge '" + label +
                                      "' has weight " + tokens.back());
    }
    edges.push_back(std::move(vs));
    weights.push_back(w);
    labels.push_back(label);
  }

  if (!header_seen) {
    detail::parse_fail(line_no, "missing 'hgr' header");
  }
  return Hypergraph(q, vertex_count, std::move(edges), std::move(weights), std::move(labels));
}

/// Canonical form: header, then one edge per line in id order. Parsing the
/// result reproduces the hypergraph bit for bit, and writing what was parsed
/// from a canonical file reproduces the file bytes.
inline std::string write_instance(const Hypergraph& h) {
  std::string out = "hgr " + std::to_string(h.q()) + " " + std::to_string(h.vertex_count()) + "\n";
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    out += "e " + h.label(e);
    for (VertexId v : h.edge(e)) out += " " + std::to_string(v + 1);
    out += " w " + detail::format_weight(h.weight(e)) + "\n";
  }
  return out;
}

/// Bipartite DOT rendering of a Koenig representation: edge nodes boxed,
/// vertex nodes circled (1-based names), removed vertices dashed. Node and
/// arc order is deterministic: edge labels ascending, then vertex ids.
inline std::string konig_dot(const Hypergraph& h, const KonigGraph& k) {
  std::vector<std::size_t> left_order(k.left.size());
  std::iota(left_order.begin(), left_order.end(), std::size_t{0});
  std::sort(left_order.begin(), left_order.end(), [&](std::size_t lhs, std::size_t rhs) {
    return h.label(k.left[lhs]) < h.label(k.left[rhs]);
  });

  std::string out = "graph konig {\n";
  for (std::size_t i : left_order) {
    out += "  \"" + h.label(k.left[i]) + "\" [shape=box];\n";
  }
  for (std::size_t j = 0; j < k.right.size(); ++j) {
    out += "  \"v" + std::to_string(k.right[j] + 1) + "\" [shape=circle";
    if (j < k.removed.size() && k.removed[j]) out += ", style=dashed";
    out += "];\n";
  }
  for (std::size_t i : left_order) {
    std::vector<std::int32_t> row = k.adj[i];
    std::sort(row.begin(), row.end());
    for (std::int32_t j : row) {
      out += "  \"" + h.label(k.left[i]) + "\" -- \"v" + std::to_string(k.right[j] + 1) + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace hyperspan
