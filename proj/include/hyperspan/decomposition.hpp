#pragma once

// Connection-component decomposition of hyperforests. The components of an
// independent edge set are its maximal tight subsets (coverage exactly
// |T| + q - 1); they partition the edge set, and every tight subset lies in
// exactly one of them. Discovery uses an exact min-cut test because pairwise
// vertex-overlap merging is incomplete: three q=4 edges can be pairwise
// slack yet tight as a triple.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperspan/core.hpp"
#include "hyperspan/greedy.hpp"
#include "hyperspan/independence.hpp"
#include "hyperspan/matching.hpp"

namespace hyperspan {

struct ComponentPartition {
  /// Skeleton edge sets T_i, each ascending, ordered by smallest member.
  std::vector<std::vector<EdgeId>> parts;
  /// covered_vertices(T_i) per part.
  std::vector<std::vector<VertexId>> vertex_covers;
  /// Link edges attached to each part; filled by classify_links.
  std::vector<std::vector<EdgeId>> links;
  /// Link edge -> part index; filled by classify_links.
  std::unordered_map<EdgeId, std::size_t> link_assignment;
  bool links_classified = false;

  std::size_t part_count() const noexcept { return parts.size(); }

  /// Induced components D_i = T_i + H_i, each ascending.
  std::vector<std::vector<EdgeId>> induced() const {
    if (!links_classified) {
      throw Error(errc::invalid_argument, "links not classified; call classify_links first");
    }
    std::vector<std::vector<EdgeId>> out = parts;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].insert(out[i].end(), links[i].begin(), links[i].end());
      std::sort(out[i].begin(), out[i].end());
    }
    return out;
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace detail

/// Minimum of |covered(A)| - |A| over all subsets A of `w` containing both
/// `a` and `b`, computed as a min cut: excluding an edge from A costs 1,
/// covering a vertex costs 1, and the forced edges a, b carry uncuttable
/// capacity. The value is at least q - 1 for independent `w`, with equality
/// iff a and b share a tight set (lie in the same connection component).
inline int tight_pair_value(const Hypergraph& h, const EdgeSubset& w, EdgeId a, EdgeId b) {
  if (a == b) {
    throw Error(errc::edge_not_in_forest, "tight_pair_value requires two distinct edges");
  }
  if (!w.contains(a) || !w.contains(b)) {
    throw Error(errc::edge_not_in_forest,
                "edge " + std::to_string(w.contains(a) ? b : a) + " is not in the forest");
  }
  const std::vector<EdgeId>& members = w.members();
  const std::vector<VertexId> cover = w.covered();

  // Node layout: 0 = source, 1..|W| = edges, then vertices, then sink.
  const std::size_t nl = members.size();
  const std::size_t nr = cover.size();
  const std::size_t source = 0;
  const std::size_t sink = 1 + nl + nr;
  const std::int64_t big = static_cast<std::int64_t>(nl) + static_cast<std::int64_t>(nr) + 1;

  std::vector<std::int32_t> vertex_node(h.vertex_count(), -1);
  for (std::size_t i = 0; i < nr; ++i) vertex_node[cover[i]] = static_cast<std::int32_t>(1 + nl + i);

  FlowNetwork net(sink + 1, source, sink);
  for (std::size_t i = 0; i < nl; ++i) {
    const bool forced = members[i] == a || members[i] == b;
    net.add_arc(source, 1 + i, forced ? big : 1);
    for (VertexId v : h.edge(members[i])) net.add_arc(1 + i, static_cast<std::size_t>(vertex_node[v]), big);
  }
  for (std::size_t i = 0; i < nr; ++i) net.add_arc(1 + nl + i, sink, 1);

  return static_cast<int>(net.max_flow()) - static_cast<int>(nl);
}

/// Connection components of an independent edge set: the equivalence classes
/// of "tight_pair_value == q - 1", discovered with union-find. Pairs in
/// different vertex-connected pieces are skipped outright since tight sets
/// are vertex-connected.
inline ComponentPartition components(const Hypergraph& h, const EdgeSubset& w) {
#ifndef NDEBUG
  if (!is_independent_incremental(h, w.members()).independent) {
    throw Error(errc::not_independent, "components requires an independent edge set");
  }
#endif
  const std::vector<EdgeId>& members = w.members();
  const std::size_t n = members.size();
  ComponentPartition result;
  if (n == 0) {
    result.links_classified = true;
    return result;
  }

  detail::UnionFind connected(n);
  {
    std::vector<std::int32_t> first_edge_at(h.vertex_count(), -1);
    for (std::size_t i = 0; i < n; ++i) {
      for (VertexId v : h.edge(members[i])) {
        if (first_edge_at[v] < 0) {
          first_edge_at[v] = static_cast<std::int32_t>(i);
        } else {
          connected.unite(static_cast<std::size_t>(first_edge_at[v]), i);
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> groups_by_root(n);
  for (std::size_t i = 0; i < n; ++i) groups_by_root[connected.find(i)].push_back(i);

  const int target = h.q() - 1;
  detail::UnionFind tight(n);
  for (const auto& group : groups_by_root) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (tight.find(group[i]) == tight.find(group[j])) continue;
        if (tight_pair_value(h, w, members[group[i]], members[group[j]]) == target) {
          tight.unite(group[i], group[j]);
        }
      }
    }
  }

  std::vector<std::vector<EdgeId>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[tight.find(i)].push_back(members[i]);
  for (auto& part : by_root) {
    if (!part.empty()) result.parts.push_back(std::move(part));
  }
  std::sort(result.parts.begin(), result.parts.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
  result.vertex_covers.reserve(result.parts.size());
  for (const auto& part : result.parts) result.vertex_covers.push_back(covered_vertices(h, part));
  result.links.resize(result.parts.size());
  return result;
}

/// Oracle form of components: enumerate every nonempty subset of `w`, keep
/// the tight ones, and take the union of all tight sets through each edge
/// (which is the unique maximal tight set containing it). Exponential;
/// capped at |w| <= 15.
inline ComponentPartition components_bruteforce(const Hypergraph& h, const EdgeSubset& w) {
  const std::vector<EdgeId>& members = w.members();
  const std::size_t n = members.size();
  if (n > 15) {
    throw Error(errc::subset_too_large,
                "components_bruteforce supports at most 15 edges, got " + std::to_string(n));
  }
  ComponentPartition result;
  if (n == 0) {
    result.links_classified = true;
    return result;
  }

  // Remap covered vertices to a compact range so each coverage fits one
  // mask word per 64 vertices (at most 15 q of them).
  const std::vector<VertexId> cover = w.covered();
  std::vector<std::int32_t> local(h.vertex_count(), -1);
  for (std::size_t i = 0; i < cover.size(); ++i) local[cover[i]] = static_cast<std::int32_t>(i);
  const std::size_t words = (cover.size() + 63) / 64;
  std::vector<std::uint64_t> edge_words(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId v : h.edge(members[i])) {
      const auto bit = static_cast<std::size_t>(local[v]);
      edge_words[i * words + bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }

  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint64_t> gamma(total * words, 0);
  std::vector<std::uint32_t> part_mask(n, 0);
  const int q = h.q();
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    int covered = 0;
    for (std::size_t wd = 0; wd < words; ++wd) {
      const std::uint64_t u = gamma[rest * words + wd] | edge_words[low * words + wd];
      gamma[mask * words + wd] = u;
      covered += std::popcount(u);
    }
    if (covered - q + 1 == std::popcount(mask)) {
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) part_mask[i] |= static_cast<std::uint32_t>(mask);
      }
    }
  }

  std::vector<std::uint32_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(seen.begin(), seen.end(), part_mask[i]) != seen.end()) continue;
    seen.push_back(part_mask[i]);
    std::vector<EdgeId> part;
    for (std::size_t j = 0; j < n; ++j) {
      if (part_mask[i] & (std::uint32_t{1} << j)) part.push_back(members[j]);
    }
    result.parts.push_back(std::move(part));
  }
  // Maximal tight sets must tile the forest; overlapping part masks mean the
  // input was not independent.
  std::size_t covered_edges = 0;
  for (const auto& part : result.parts) covered_edges += part.size();
  if (covered_edges != n) {
    throw Error(errc::not_independent, "tight-set structure is not a partition; input is dependent");
  }
  std::sort(result.parts.begin(), result.parts.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
  result.vertex_covers.reserve(result.parts.size());
  for (const auto& part : result.parts) result.vertex_covers.push_back(covered_vertices(h, part));
  result.links.resize(result.parts.size());
  return result;
}

/// Attaches every non-skeleton edge to its unique component: the part whose
/// cover contains the edge's vertices and whose extension by the edge is
/// dependent. A skeleton admits exactly one such part per edge; zero or
/// several would contradict the uniqueness of the decomposition and abort.
inline ComponentPartition classify_links(const Hypergraph& h, const EdgeSubset& w,
                                         ComponentPartition parts) {
  parts.links.assign(parts.parts.size(), {});
  parts.link_assignment.clear();

  std::vector<std::vector<bool>> cover_mask(parts.parts.size(),
                                            std::vector<bool>(h.vertex_count(), false));
  for (std::size_t i = 0; i < parts.parts.size(); ++i) {
    for (VertexId v : parts.vertex_covers[i]) cover_mask[i][v] = true;
  }

  const std::size_t q = static_cast<std::size_t>(h.q());
  for (EdgeId d = 0; d < h.edge_count(); ++d) {
    if (w.contains(d)) continue;
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < parts.parts.size(); ++i) {
      bool inside = true;
      for (VertexId v : h.edge(d)) {
        if (!cover_mask[i][v]) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      std::vector<EdgeId> extended = parts.parts[i];
      extended.push_back(d);
      std::sort(extended.begin(), extended.end());
      std::vector<VertexId> dv(h.edge(d).begin(), h.edge(d).end());
      std::sort(dv.begin(), dv.end());
      std::vector<VertexId> removal(dv.begin(), dv.begin() + (q - 1));
      if (!has_complete_matching(build_konig(h, extended), removal)) candidates.push_back(i);
    }
    if (candidates.size() != 1) {
      throw Error(errc::link_ambiguity, "edge " + std::to_string(d) + " attaches to " +
                                            std::to_string(candidates.size()) +
                                            " components; the input is not a skeleton");
    }
    parts.links[candidates.front()].push_back(d);
    parts.link_assignment.emplace(d, candidates.front());
  }
  parts.links_classified = true;
  return parts;
}

/// Connection components of the whole hypergraph: build a skeleton (unit
/// weights, so the choice of weighting cannot matter), decompose it, and
/// attach the remaining edges. The induced partition of the edge set is
/// invariant under the skeleton choice.
inline ComponentPartition hypergraph_components(const Hypergraph& h) {
  const Hypergraph unit = h.with_unit_weights();
  Skeleton skeleton = optimal_skeleton(unit, Objective::minimize);
  EdgeSubset w(h, skeleton.edges.members());
  return classify_links(h, w, components(h, w));
}

/// Sanity bound: a skeleton's size equals the sum over components of
/// |cover(T_i)| - q + 1. Throws if `parts` does not decompose `s`.
inline bool skeleton_cardinality_bound(const Hypergraph& h, const Skeleton& s,
                                       const ComponentPartition& parts) {
  std::vector<EdgeId> all;
  for (const auto& part : parts.parts) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  if (all != s.edges.members()) {
    throw Error(errc::components_not_computed, "partition does not cover the skeleton's edges");
  }
  long long sum = 0;
  for (const auto& cover : parts.vertex_covers) {
    sum += static_cast<long long>(cover.size()) - h.q() + 1;
  }
  return sum == static_cast<long long>(s.edges.size());
}

}  // namespace hyperspan
