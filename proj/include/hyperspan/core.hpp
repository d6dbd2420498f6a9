#pragma once

// Immutable weighted q-uniform hypergraph model with dense integer ids.
// Vertices and edges are 0-based indices; labels are presentation-only.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperspan {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class errc {
  invalid_argument,
  non_uniform_edge,
  vertex_out_of_range,
  negative_weight,
  unknown_edge,
  unknown_label,
  empty_subset,
  removed_vertex_not_in_graph,
  subset_too_large,
  edge_already_in_subset,
  edge_not_in_forest,
  not_independent,
  components_not_computed,
  link_ambiguity,
  infeasible_config,
  too_large,
  not_two_uniform,
  parse_error,
  invalid_network,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::non_uniform_edge: return "NonUniformEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::negative_weight: return "NegativeWeight";
    case errc::unknown_edge: return "UnknownEdge";
    case errc::unknown_label: return "UnknownLabel";
    case errc::empty_subset: return "EmptySubset";
    case errc::removed_vertex_not_in_graph: return "RemovedVertexNotInGraph";
    case errc::subset_too_large: return "SubsetTooLargeForExhaustiveOracle";
    case errc::edge_already_in_subset: return "EdgeAlreadyInSubset";
    case errc::edge_not_in_forest: return "EdgeNotInForest";
    case errc::not_independent: return "NotIndependent";
    case errc::components_not_computed: return "ComponentsNotComputed";
    case errc::link_ambiguity: return "LinkAmbiguity";
    case errc::infeasible_config: return "InfeasibleConfig";
    case errc::too_large: return "TooLarge";
    case errc::not_two_uniform: return "NotTwoUniform";
    case errc::parse_error: return "ParseError";
    case errc::invalid_network: return "InvalidNetwork";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Spreadsheet-style label for a dense index: 0 -> "a", 25 -> "z", 26 -> "aa".
inline std::string auto_label(std::size_t index) {
  std::string out;
  std::size_t n = index;
  while (true) {
    out.insert(out.begin(), static_cast<char>('a' + n % 26));
    if (n < 26) break;
    n = n / 26 - 1;
  }
  return out;
}

/// Weighted q-uniform hypergraph. Every edge covers exactly q distinct
/// vertices and carries a nonnegative weight. Immutable after construction,
/// so instances can be shared freely across threads.
class Hypergraph {
 public:
  Hypergraph(int q, std::size_t vertex_count, std::vector<std::vector<VertexId>> edges,
             std::vector<double> weights, std::vector<std::string> labels = {})
      : q_(q), vertex_count_(vertex_count), edges_(std::move(edges)), weights_(std::move(weights)),
        labels_(std::move(labels)) {
    if (q_ < 2) {
      throw Error(errc::invalid_argument, "q must be at least 2, got " + std::to_string(q_));
    }
    if (weights_.size() != edges_.size()) {
      throw Error(errc::invalid_argument, "weights size " + std::to_string(weights_.size()) +
                                              " does not match edge count " + std::to_string(edges_.size()));
    }
    if (labels_.empty()) {
      labels_.reserve(edges_.size());
      for (std::size_t i = 0; i < edges_.size(); ++i) labels_.push_back(auto_label(i));
    } else if (labels_.size() != edges_.size()) {
      throw Error(errc::invalid_argument, "labels size " + std::to_string(labels_.size()) +
                                              " does not match edge count " + std::to_string(edges_.size()));
    }
    validate();
  }

  int q() const noexcept { return q_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<VertexId>& edge(EdgeId e) const {
    check_edge(e);
    return edges_[e];
  }

  double weight(EdgeId e) const {
    check_edge(e);
    return weights_[e];
  }

  const std::string& label(EdgeId e) const {
    check_edge(e);
    return labels_[e];
  }

  std::optional<EdgeId> find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return static_cast<EdgeId>(i);
    }
    return std::nullopt;
  }

  /// Same structure with every weight replaced by 1.0. Used where results
  /// must not depend on the weighting.
  Hypergraph with_unit_weights() const {
    return Hypergraph(q_, vertex_count_, edges_, std::vector<double>(edges_.size(), 1.0), labels_);
  }

  void check_edge(EdgeId e) const {
    if (e >= edges_.size()) {
      throw Error(errc::unknown_edge, "edge id " + std::to_string(e) + " out of range (edge count " +
                                          std::to_string(edges_.size()) + ")");
    }
  }

 private:
  void validate() const {
    std::vector<bool> seen(vertex_count_, false);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& vs = edges_[i];
      for (VertexId v : vs) {
        if (v >= vertex_count_) {
          throw Error(errc::vertex_out_of_range, "edge " + std::to_string(i) + " uses vertex " +
                                                     std::to_string(v) + " >= vertex count " +
                                                     std::to_string(vertex_count_));
        }
      }
      // count distinct vertices; duplicates inside one edge break uniformity
      std::size_t distinct = 0;
      for (VertexId v : vs) {
        if (!seen[v]) {
          seen[v] = true;
          ++distinct;
        }
      }
      for (VertexId v : vs) seen[v] = false;
      if (distinct != static_cast<std::size_t>(q_) || vs.size() != static_cast<std::size_t>(q_)) {
        throw Error(errc::non_uniform_edge, "edge " + std::to_string(i) + " has " + std::to_string(distinct) +
                                                " distinct vertices, expected " + std::to_string(q_));
      }
      if (!(weights_[i] >= 0.0)) {
        throw Error(errc::negative_weight,
                    "edge " + std::to_string(i) + " has weight " + std::to_string(weights_[i]));
      }
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const std::string& lbl = labels_[i];
      if (lbl.empty()) {
        throw Error(errc::invalid_argument, "edge " + std::to_string(i) + " has an empty label");
      }
      for (char c : lbl) {
        if (c == '#' || c == ',' || c == '"' || std::isspace(static_cast<unsigned char>(c))) {
          throw Error(errc::invalid_argument, "label '" + lbl + "' contains a reserved character");
        }
      }
    }
    std::vector<std::string_view> sorted_labels(labels_.begin(), labels_.end());
    std::sort(sorted_labels.begin(), sorted_labels.end());
    auto dup = std::adjacent_find(sorted_labels.begin(), sorted_labels.end());
    if (dup != sorted_labels.end()) {
      throw Error(errc::invalid_argument, "duplicate edge label '" + std::string(*dup) + "'");
    }
  }

  int q_;
  std::size_t vertex_count_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<double> weights_;
  std::vector<std::string> labels_;
};

namespace detail {

/// Distinct edge ids of `a`, ascending. Throws UnknownEdge for bad ids.
inline std::vector<EdgeId> sorted_unique_edges(const Hypergraph& h, std::span<const EdgeId> a) {
  std::vector<EdgeId> ids(a.begin(), a.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (EdgeId e : ids) h.check_edge(e);
  return ids;
}

}  // namespace detail

/// Vertices covered by the edge set `a` (union of incidences), ascending.
inline std::vector<VertexId> covered_vertices(const Hypergraph& h, std::span<const EdgeId> a) {
  std::vector<bool> mask(h.vertex_count(), false);
  for (EdgeId e : detail::sorted_unique_edges(h, a)) {
    for (VertexId v : h.edge(e)) mask[v] = true;
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

/// Total weight of the distinct edges in `a`, summed in ascending id order.
inline double subset_weight(const Hypergraph& h, std::span<const EdgeId> a) {
  double sum = 0.0;
  for (EdgeId e : detail::sorted_unique_edges(h, a)) sum += h.weight(e);
  return sum;
}

/// Edge subset with cached coverage and weight. The referenced hypergraph
/// must outlive the subset.
class EdgeSubset {
 public:
  explicit EdgeSubset(const Hypergraph& h)
      : h_(&h), covered_mask_(h.vertex_count(), false), covered_count_(0), weight_(0.0) {}

  EdgeSubset(const Hypergraph& h, std::span<const EdgeId> members) : EdgeSubset(h) {
    for (EdgeId e : detail::sorted_unique_edges(h, members)) add(e);
  }

  EdgeSubset(const Hypergraph& h, std::initializer_list<EdgeId> members)
      : EdgeSubset(h, std::span<const EdgeId>(members.begin(), members.size())) {}

  const Hypergraph& hypergraph() const noexcept { return *h_; }
  const std::vector<EdgeId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(EdgeId e) const { return std::binary_search(members_.begin(), members_.end(), e); }

  bool covers(VertexId v) const { return v < covered_mask_.size() && covered_mask_[v]; }
  std::size_t covered_count() const noexcept { return covered_count_; }

  std::vector<VertexId> covered() const {
    std::vector<VertexId> out;
    out.reserve(covered_count_);
    for (std::size_t v = 0; v < covered_mask_.size(); ++v) {
      if (covered_mask_[v]) out.push_back(static_cast<VertexId>(v));
    }
    return out;
  }

  /// Cached total weight; always equals subset_weight(h, members()).
  double weight() const noexcept { return weight_; }

  /// Number of vertices of edge `e` already covered by this subset.
  std::size_t overlap(EdgeId e) const {
    h_->check_edge(e);
    std::size_t n = 0;
    for (VertexId v : h_->edge(e)) {
      if (covered_mask_[v]) ++n;
    }
    return n;
  }

  void add(EdgeId e) {
    h_->check_edge(e);
    auto pos = std::lower_bound(members_.begin(), members_.end(), e);
    if (pos != members_.end() && *pos == e) {
      throw Error(errc::edge_already_in_subset, "edge " + std::to_string(e) + " is already a member");
    }
    members_.insert(pos, e);
    for (VertexId v : h_->edge(e)) {
      if (!covered_mask_[v]) {
        covered_mask_[v] = true;
        ++covered_count_;
      }
    }
    // Resum ascending so the cache matches subset_weight exactly.
    weight_ = 0.0;
    for (EdgeId m : members_) weight_ += h_->weight(m);
  }

 private:
  const Hypergraph* h_;
  std::vector<EdgeId> members_;
  std::vector<bool> covered_mask_;
  std::size_t covered_count_;
  double weight_;
};

}  // namespace hyperspan
