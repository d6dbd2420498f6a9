#pragma once

// Independence oracles for the hypergraphic matroid. An edge set is
// independent when every nonempty subset A covers at least |A| + q - 1
// vertices. Three routes are provided and cross-checked in the test suite:
//   - is_independent_definition: exhaustive subset check (ground truth,
//     exponential, capped);
//   - is_independent_matching: complete-matching probes over every
//     (q-1)-vertex removal of the Koenig representation;
//   - is_independent_incremental: polynomial product path that grows the
//     set edge by edge with the fast extension test.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperspan/core.hpp"
#include "hyperspan/matching.hpp"

namespace hyperspan {

/// How case-2 extension probes pick removal sets from the vertices of the
/// candidate edge: one lexicographically-smallest (q-1)-subset, or all q of
/// them. Both must agree; `all_subsets` exists for cross-validation.
enum class RemovalPolicy { single_smallest, all_subsets };

enum class WitnessKind { none, violating_edges, failing_removal };

struct IndependenceVerdict {
  bool independent = true;
  WitnessKind kind = WitnessKind::none;
  /// violating_edges: EdgeIds of a dependent subset.
  /// failing_removal: VertexIds whose removal kills every complete matching.
  std::vector<std::uint32_t> witness;
  /// Set by the incremental oracle: the edge whose addition failed.
  std::optional<EdgeId> failed_edge;
};

/// |covered(a)| - q + 1 for nonempty a, and 0 for the empty set. Equals the
/// matroid rank of `a` whenever `a` is independent.
inline int coverage_rank(const Hypergraph& h, std::span<const EdgeId> a) {
  if (a.empty()) return 0;
  return static_cast<int>(covered_vertices(h, a).size()) - h.q() + 1;
}

/// True iff coverage_rank(a) == |a| (counting distinct edges). Tight sets
/// are the building blocks of connection components; tightness alone does
/// not imply independence.
inline bool is_tight(const Hypergraph& h, std::span<const EdgeId> a) {
  std::vector<EdgeId> ids = detail::sorted_unique_edges(h, a);
  return coverage_rank(h, ids) == static_cast<int>(ids.size());
}

namespace detail {

/// Advances `idx` to the next k-combination of {0..n-1} in lexicographic
/// order. Returns false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) <= n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      if (idx[k - 1] < n) return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace detail

/// Exhaustive ground-truth oracle: checks the coverage bound on every
/// nonempty subset of `a`. On failure the witness is a violating subset of
/// minimum cardinality (ties broken lexicographically). Capped because the
/// enumeration is exponential; this oracle exists for verification, the
/// product path is is_independent_incremental.
inline IndependenceVerdict is_independent_definition(const Hypergraph& h, std::span<const EdgeId> a,
                                                     std::size_t cap = 20) {
  std::vector<EdgeId> ids = detail::sorted_unique_edges(h, a);
  if (ids.size() > cap) {
    throw Error(errc::subset_too_large, "subset of size " + std::to_string(ids.size()) +
                                            " exceeds the exhaustive-oracle cap " + std::to_string(cap));
  }
  IndependenceVerdict verdict;
  if (ids.empty()) return verdict;  // the empty set is independent

  std::vector<bool> mask(h.vertex_count(), false);
  std::vector<VertexId> touched;
  const int q = h.q();
  for (std::size_t k = 1; k <= ids.size(); ++k) {
    auto combo = detail::first_combination(k);
    do {
      touched.clear();
      for (std::size_t i : combo) {
        for (VertexId v : h.edge(ids[i])) {
          if (!mask[v]) {
            mask[v] = true;
            touched.push_back(v);
          }
        }
      }
      const int rank = static_cast<int>(touched.size()) - q + 1;
      for (VertexId v : touched) mask[v] = false;
      if (rank < static_cast<int>(k)) {
        verdict.independent = false;
        verdict.kind = WitnessKind::violating_edges;
        for (std::size_t i : combo) verdict.witness.push_back(ids[i]);
        return verdict;
      }
    } while (detail::next_combination(combo, ids.size()));
  }
  return verdict;
}

/// Matching-characterization oracle: `a` is independent iff for every
/// (q-1)-subset B of its covered vertices, the Koenig representation minus B
/// still has a complete matching. On failure the witness is the first
/// failing B in lexicographic vertex order.
inline IndependenceVerdict is_independent_matching(const Hypergraph& h, std::span<const EdgeId> a) {
  IndependenceVerdict verdict;
  std::vector<EdgeId> ids = detail::sorted_unique_edges(h, a);
  if (ids.empty()) return verdict;

  KonigGraph k = build_konig(h, ids);
  const std::size_t r = static_cast<std::size_t>(h.q()) - 1;
  auto combo = detail::first_combination(r);
  std::vector<VertexId> removal(r);
  do {
    for (std::size_t i = 0; i < r; ++i) removal[i] = k.right[combo[i]];
    if (!has_complete_matching(k, removal)) {
      verdict.independent = false;
      verdict.kind = WitnessKind::failing_removal;
      verdict.witness.assign(removal.begin(), removal.end());
      return verdict;
    }
  } while (detail::next_combination(combo, k.right.size()));
  return verdict;
}

/// Fast extension test: given an independent subset `w` and an edge a not in
/// it, decides independence of w + a. When a still brings a new vertex the
/// answer is yes with no matching work; otherwise the covered vertices of a
/// all lie inside covered(w) and one complete-matching probe with a
/// (q-1)-subset of a's vertices removed settles it. `matching_calls`, when
/// given, receives the number of probes used.
inline bool extend_check_fast(const Hypergraph& h, const EdgeSubset& w, EdgeId a,
                              RemovalPolicy policy = RemovalPolicy::single_smallest,
                              std::size_t* matching_calls = nullptr) {
  h.check_edge(a);
  if (matching_calls != nullptr) *matching_calls = 0;
  if (w.contains(a)) {
    throw Error(errc::edge_already_in_subset, "edge " + std::to_string(a) + " is already in the subset");
  }
  const std::size_t q = static_cast<std::size_t>(h.q());
  if (w.overlap(a) < q) return true;

  std::vector<EdgeId> extended = w.members();
  extended.push_back(a);
  KonigGraph k = build_konig(h, extended);

  std::vector<VertexId> av(h.edge(a).begin(), h.edge(a).end());
  std::sort(av.begin(), av.end());

  if (policy == RemovalPolicy::single_smallest) {
    std::vector<VertexId> removal(av.begin(), av.begin() + (q - 1));
    if (matching_calls != nullptr) *matching_calls = 1;
    return has_complete_matching(k, removal);
  }
  // All q removal subsets of a's vertices, lexicographic order. They cannot
  // disagree (a circuit through a starves every one of them), so the loop
  // exits on the first failure.
  for (std::size_t omit = q; omit-- > 0;) {
    std::vector<VertexId> removal;
    removal.reserve(q - 1);
    for (std::size_t i = 0; i < q; ++i) {
      if (i != omit) removal.push_back(av[i]);
    }
    if (matching_calls != nullptr) ++*matching_calls;
    if (!has_complete_matching(k, removal)) return false;
  }
  return true;
}

/// Polynomial independence check: grows the set in ascending id order with
/// extend_check_fast. On failure reports the removal witness of the first
/// rejected edge (a (q-1)-subset of that edge's vertices).
inline IndependenceVerdict is_independent_incremental(const Hypergraph& h, std::span<const EdgeId> a,
                                                      RemovalPolicy policy = RemovalPolicy::single_smallest) {
  IndependenceVerdict verdict;
  std::vector<EdgeId> ids = detail::sorted_unique_edges(h, a);
  EdgeSubset grown(h);
  const std::size_t q = static_cast<std::size_t>(h.q());
  for (EdgeId e : ids) {
    if (extend_check_fast(h, grown, e, policy)) {
      grown.add(e);
      continue;
    }
    verdict.independent = false;
    verdict.kind = WitnessKind::failing_removal;
    verdict.failed_edge = e;
    std::vector<VertexId> av(h.edge(e).begin(), h.edge(e).end());
    std::sort(av.begin(), av.end());
    verdict.witness.assign(av.begin(), av.begin() + (q - 1));
    return verdict;
  }
  return verdict;
}

/// A hypertree is a nonempty independent set whose coverage bound is tight:
/// a one-component hyperforest.
inline bool is_hypertree(const Hypergraph& h, std::span<const EdgeId> w) {
  std::vector<EdgeId> ids = detail::sorted_unique_edges(h, w);
  if (ids.empty()) return false;
  return is_independent_matching(h, ids).independent && is_tight(h, ids);
}

}  // namespace hyperspan
