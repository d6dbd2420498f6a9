#pragma once

// Bipartite machinery: the Koenig representation of an edge subset
// (edge-nodes on the left, covered vertices on the right, adjacency =
// incidence), maximum matching via Hopcroft-Karp, and an integer max-flow
// network used by the decomposition module.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <vector>

#include "hyperspan/core.hpp"

namespace hyperspan {

/// Bipartite incidence structure of an edge subset. `removed` is a
/// persistent mask over the right side; matching queries take additional
/// removals as a parameter and honor both.
struct KonigGraph {
  std::vector<EdgeId> left;                    // ascending edge ids
  std::vector<VertexId> right;                 // ascending vertex ids
  std::vector<std::vector<std::int32_t>> adj;  // per left node: right indices, ascending
  std::vector<bool> removed;                   // base removal mask over `right`

  std::int32_t right_index(VertexId v) const {
    auto it = std::lower_bound(right.begin(), right.end(), v);
    if (it == right.end() || *it != v) return -1;
    return static_cast<std::int32_t>(it - right.begin());
  }
};

inline KonigGraph build_konig(const Hypergraph& h, std::span<const EdgeId> a) {
  std::vector<EdgeId> ids = detail::sorted_unique_edges(h, a);
  if (ids.empty()) {
    throw Error(errc::empty_subset, "Koenig representation requires a nonempty edge subset");
  }
  KonigGraph k;
  k.left = std::move(ids);
  k.right = covered_vertices(h, k.left);
  k.removed.assign(k.right.size(), false);
  k.adj.resize(k.left.size());
  for (std::size_t i = 0; i < k.left.size(); ++i) {
    auto& row = k.adj[i];
    row.reserve(h.q());
    for (VertexId v : h.edge(k.left[i])) row.push_back(k.right_index(v));
    std::sort(row.begin(), row.end());
  }
  return k;
}

/// Partial assignment of left nodes to right indices; -1 means unmatched.
struct Matching {
  std::vector<std::int32_t> assign;
  std::size_t size = 0;

  bool complete(std::size_t left_count) const { return size == left_count; }
};

/// Maximum matching on `k` with right nodes masked by `k.removed` or
/// `extra_removed` excluded. Hopcroft-Karp; an optional warm matching seeds
/// the search (invalid warm pairs are dropped). The returned size is
/// independent of the warm start.
inline Matching maximum_matching(const KonigGraph& k, const std::vector<bool>& extra_removed,
                                 const Matching* warm = nullptr) {
  const std::size_t nl = k.left.size();
  const std::size_t nr = k.right.size();
  auto blocked = [&](std::int32_t r) {
    return (r < static_cast<std::int32_t>(k.removed.size()) && k.removed[r]) ||
           (r < static_cast<std::int32_t>(extra_removed.size()) && extra_removed[r]);
  };

  Matching m;
  m.assign.assign(nl, -1);
  std::vector<std::int32_t> owner(nr, -1);  // right index -> left index

  if (warm != nullptr) {
    for (std::size_t l = 0; l < nl && l < warm->assign.size(); ++l) {
      std::int32_t r = warm->assign[l];
      if (r < 0 || r >= static_cast<std::int32_t>(nr) || blocked(r) || owner[r] != -1) continue;
      if (!std::binary_search(k.adj[l].begin(), k.adj[l].end(), r)) continue;
      m.assign[l] = r;
      owner[r] = static_cast<std::int32_t>(l);
      ++m.size;
    }
  }
  // Greedy pass for the remaining free left nodes.
  for (std::size_t l = 0; l < nl; ++l) {
    if (m.assign[l] != -1) continue;
    for (std::int32_t r : k.adj[l]) {
      if (!blocked(r) && owner[r] == -1) {
        m.assign[l] = r;
        owner[r] = static_cast<std::int32_t>(l);
        ++m.size;
        break;
      }
    }
  }

  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  std::vector<std::int32_t> dist(nl);
  std::deque<std::int32_t> queue;

  auto bfs = [&]() {
    bool reachable_free_right = false;
    queue.clear();
    for (std::size_t l = 0; l < nl; ++l) {
      if (m.assign[l] == -1) {
        dist[l] = 0;
        queue.push_back(static_cast<std::int32_t>(l));
      } else {
        dist[l] = kInf;
      }
    }
    while (!queue.empty()) {
      std::int32_t l = queue.front();
      queue.pop_front();
      for (std::int32_t r : k.adj[l]) {
        if (blocked(r)) continue;
        std::int32_t next = owner[r];
        if (next == -1) {
          reachable_free_right = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable_free_right;
  };

  // Iterative DFS along level-increasing edges.
  std::vector<std::size_t> iter(nl);
  std::vector<std::int32_t> stack;
  auto try_augment = [&](std::int32_t root) {
    stack.assign(1, root);
    while (!stack.empty()) {
      std::int32_t l = stack.back();
      if (iter[l] >= k.adj[l].size()) {
        dist[l] = kInf;  // dead end; do not revisit this phase
        stack.pop_back();
        continue;
      }
      std::int32_t r = k.adj[l][iter[l]++];
      if (blocked(r)) continue;
      std::int32_t next = owner[r];
      if (next == -1) {
        // Augment along the stack: each left node takes the right node it
        // just probed.
        std::int32_t carry = r;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          std::int32_t lnode = *it;
          std::int32_t prev = m.assign[lnode];
          m.assign[lnode] = carry;
          owner[carry] = lnode;
          carry = prev;
        }
        return true;
      }
      if (dist[next] == dist[l] + 1) stack.push_back(next);
    }
    return false;
  };

  while (bfs()) {
    std::fill(iter.begin(), iter.end(), 0);
    for (std::size_t l = 0; l < nl; ++l) {
      if (m.assign[l] == -1 && try_augment(static_cast<std::int32_t>(l))) ++m.size;
    }
  }
  return m;
}

/// True iff a matching saturating every left node exists after deleting the
/// given right-side vertices. Throws if a removed vertex is not on the right
/// side of `k`.
inline bool has_complete_matching(const KonigGraph& k, std::span<const VertexId> removed_vertices) {
  std::vector<bool> extra(k.right.size(), false);
  for (VertexId v : removed_vertices) {
    std::int32_t idx = k.right_index(v);
    if (idx < 0) {
      throw Error(errc::removed_vertex_not_in_graph,
                  "vertex " + std::to_string(v) + " is not on the right side");
    }
    extra[idx] = true;
  }
  return maximum_matching(k, extra).complete(k.left.size());
}

/// Integer-capacity flow network solved with Dinic's algorithm. Nodes are
/// dense indices fixed at construction; arcs are added with positive
/// capacities. Deterministic given insertion order.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t node_count, std::size_t source, std::size_t sink)
      : graph_(node_count), source_(source), sink_(sink) {
    if (source >= node_count || sink >= node_count || source == sink) {
      throw Error(errc::invalid_network, "bad source/sink");
    }
  }

  void add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    if (from >= graph_.size() || to >= graph_.size() || from == to) {
      throw Error(errc::invalid_network, "arc endpoints out of range");
    }
    if (capacity <= 0) {
      throw Error(errc::invalid_network, "arc capacity must be positive");
    }
    graph_[from].push_back({static_cast<std::int32_t>(to), capacity, static_cast<std::int32_t>(graph_[to].size())});
    graph_[to].push_back({static_cast<std::int32_t>(from), 0, static_cast<std::int32_t>(graph_[from].size()) - 1});
  }

  std::size_t node_count() const noexcept { return graph_.size(); }

  std::int64_t max_flow() {
    std::int64_t total = 0;
    std::vector<std::int32_t> level(graph_.size());
    std::vector<std::size_t> iter(graph_.size());
    while (bfs_levels(level)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (true) {
        std::int64_t pushed = dfs_push(source_, std::numeric_limits<std::int64_t>::max(), level, iter);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Arc {
    std::int32_t to;
    std::int64_t cap;
    std::int32_t rev;
  };

  bool bfs_levels(std::vector<std::int32_t>& level) {
    std::fill(level.begin(), level.end(), -1);
    std::deque<std::size_t> queue;
    level[source_] = 0;
    queue.push_back(source_);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const Arc& a : graph_[u]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[sink_] >= 0;
  }

  std::int64_t dfs_push(std::size_t u, std::int64_t limit, const std::vector<std::int32_t>& level,
                        std::vector<std::size_t>& iter) {
    if (u == sink_) return limit;
    for (std::size_t& i = iter[u]; i < graph_[u].size(); ++i) {
      Arc& a = graph_[u][i];
      if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
      std::int64_t pushed = dfs_push(a.to, std::min(limit, a.cap), level, iter);
      if (pushed > 0) {
        a.cap -= pushed;
        graph_[a.to][a.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::size_t source_;
  std::size_t sink_;
};

}  // namespace hyperspan
