#pragma once

// Optimal skeleton construction: process edges in weight order and accept
// each one whose addition keeps the set independent. Acceptance uses the
// fast extension test, so an edge bringing a new vertex costs nothing and
// every other candidate costs one complete-matching probe.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "hyperspan/core.hpp"
#include "hyperspan/independence.hpp"
#include "hyperspan/matching.hpp"

namespace hyperspan {

enum class Objective { minimize, maximize };

enum class GreedyDecision { new_vertex, matching_accepted, matching_rejected };

struct TraceEntry {
  EdgeId edge;
  GreedyDecision decision;
  std::size_t matching_calls;

  bool accepted() const noexcept { return decision != GreedyDecision::matching_rejected; }
  bool operator==(const TraceEntry&) const = default;
};

struct GreedyOptions {
  RemovalPolicy removals = RemovalPolicy::single_smallest;
  /// Carry a complete matching of the current skeleton across probes and
  /// augment instead of matching from scratch. Pure optimization: the
  /// resulting skeleton and trace are identical either way.
  bool incremental_matching = false;
};

struct Skeleton {
  EdgeSubset edges;
  double total_weight = 0.0;
  std::vector<TraceEntry> trace;

  std::size_t total_matching_calls() const {
    std::size_t n = 0;
    for (const TraceEntry& t : trace) n += t.matching_calls;
    return n;
  }
};

namespace detail {

/// Removal sets probed for a candidate edge, in probe order. The first entry
/// is always the q-1 smallest vertices of the edge.
inline std::vector<std::vector<VertexId>> removal_sequence(const Hypergraph& h, EdgeId a,
                                                           RemovalPolicy policy) {
  std::vector<VertexId> av(h.edge(a).begin(), h.edge(a).end());
  std::sort(av.begin(), av.end());
  const std::size_t q = av.size();
  std::vector<std::vector<VertexId>> out;
  if (policy == RemovalPolicy::single_smallest) {
    out.emplace_back(av.begin(), av.begin() + (q - 1));
    return out;
  }
  for (std::size_t omit = q; omit-- > 0;) {
    std::vector<VertexId> removal;
    removal.reserve(q - 1);
    for (std::size_t i = 0; i < q; ++i) {
      if (i != omit) removal.push_back(av[i]);
    }
    out.push_back(std::move(removal));
  }
  return out;
}

/// Maintains a complete matching of the skeleton's Koenig representation and
/// answers case-2 probes by dropping the pairs hit by the removal set and
/// re-augmenting, instead of matching from scratch.
class IncrementalMatcher {
  static constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
  static constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();

 public:
  explicit IncrementalMatcher(const Hypergraph& h)
      : h_(&h),
        match_of_edge_(h.edge_count(), kNoVertex),
        vmatch_(h.vertex_count(), kNoEdge),
        vmatch_epoch_(h.vertex_count(), 0),
        visited_(h.vertex_count(), 0),
        removed_(h.vertex_count(), 0) {}

  /// Case-1 acceptance: match the edge to its smallest fresh vertex.
  void accept_new_vertex(EdgeId a, const EdgeSubset& before) {
    VertexId best = kNoVertex;
    for (VertexId v : h_->edge(a)) {
      if (!before.covers(v) && v < best) best = v;
    }
    match_of_edge_[a] = best;
  }

  /// One complete-matching probe for members(w) + a with `removal` deleted.
  /// On success the stored matching is updated and true is returned; on
  /// failure the stored matching is untouched.
  bool probe(const EdgeSubset& w, EdgeId a, std::span<const VertexId> removal) {
    const std::vector<EdgeId>& members = w.members();
    left_.assign(members.begin(), members.end());
    left_.push_back(a);

    ++epoch_;
    for (VertexId v : removal) removed_[v] = epoch_;

    lmatch_.assign(left_.size(), kNoVertex);
    pending_.clear();
    for (std::size_t i = 0; i < left_.size(); ++i) {
      VertexId v = match_of_edge_[left_[i]];
      if (v == kNoVertex || removed_[v] == epoch_) {
        pending_.push_back(i);
        continue;
      }
      lmatch_[i] = v;
      vmatch_[v] = static_cast<std::uint32_t>(i);
      vmatch_epoch_[v] = epoch_;
    }
    bool ok = true;
    for (std::size_t i : pending_) {
      ++stamp_;
      if (!augment(i)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (std::size_t i = 0; i < left_.size(); ++i) match_of_edge_[left_[i]] = lmatch_[i];
    }
    return ok;
  }

 private:
  bool augment(std::size_t li) {
    for (VertexId v : h_->edge(left_[li])) {
      if (removed_[v] == epoch_ || visited_[v] == stamp_) continue;
      visited_[v] = stamp_;
      const bool free = vmatch_epoch_[v] != epoch_ || vmatch_[v] == kNoEdge;
      if (free || augment(vmatch_[v])) {
        lmatch_[li] = v;
        vmatch_[v] = static_cast<std::uint32_t>(li);
        vmatch_epoch_[v] = epoch_;
        return true;
      }
    }
    return false;
  }

  const Hypergraph* h_;
  std::vector<VertexId> match_of_edge_;
  std::vector<std::uint32_t> vmatch_;        // vertex -> left index, valid at vmatch_epoch_
  std::vector<std::uint32_t> vmatch_epoch_;
  std::vector<std::uint32_t> visited_;
  std::vector<std::uint32_t> removed_;
  std::vector<EdgeId> left_;
  std::vector<VertexId> lmatch_;
  std::vector<std::size_t> pending_;
  std::uint32_t epoch_ = 0;
  std::uint32_t stamp_ = 0;
};

}  // namespace detail

/// Builds an optimal skeleton: a maximal independent edge set of extreme
/// total weight. Edges are sorted by weight (ascending to minimize,
/// descending to maximize) with ascending id as tie-break, and accepted
/// greedily. The trace records every decision with its matching-probe count.
inline Skeleton optimal_skeleton(const Hypergraph& h, Objective objective, GreedyOptions options = {}) {
  std::vector<EdgeId> order(h.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeId lhs, EdgeId rhs) {
    if (h.weight(lhs) != h.weight(rhs)) {
      return objective == Objective::minimize ? h.weight(lhs) < h.weight(rhs) : h.weight(lhs) > h.weight(rhs);
    }
    return lhs < rhs;
  });

  Skeleton result{EdgeSubset(h), 0.0, {}};
  result.trace.reserve(h.edge_count());
  const std::size_t q = static_cast<std::size_t>(h.q());

  std::optional<detail::IncrementalMatcher> matcher;
  if (options.incremental_matching) matcher.emplace(h);

  for (EdgeId a : order) {
    if (result.edges.overlap(a) < q) {
      if (matcher) matcher->accept_new_vertex(a, result.edges);
      result.edges.add(a);
      result.trace.push_back({a, GreedyDecision::new_vertex, 0});
      continue;
    }
    std::size_t calls = 0;
    bool ok = true;
    if (matcher) {
      for (const auto& removal : detail::removal_sequence(h, a, options.removals)) {
        ++calls;
        if (!matcher->probe(result.edges, a, removal)) {
          ok = false;
          break;
        }
      }
    } else {
      ok = extend_check_fast(h, result.edges, a, options.removals, &calls);
    }
    if (ok) {
      result.edges.add(a);
      result.trace.push_back({a, GreedyDecision::matching_accepted, calls});
    } else {
      result.trace.push_back({a, GreedyDecision::matching_rejected, calls});
    }
  }
  result.total_weight = subset_weight(h, result.edges.members());
  return result;
}

}  // namespace hyperspan
