#pragma once

// Deterministic instance generation and independent oracles used by the
// property sweeps, the verify subcommand, and the acceptance suite.
//
// Reproducibility: all randomness comes from std::mt19937_64 (whose output
// sequence is fixed by the standard) combined with plain modulo reduction
// and a fixed 53-bit real mapping, so identical seeds give identical
// instances on every platform. std::uniform_int_distribution is avoided on
// purpose: its output is implementation-defined.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hyperspan/core.hpp"
#include "hyperspan/decomposition.hpp"
#include "hyperspan/greedy.hpp"
#include "hyperspan/independence.hpp"
#include "hyperspan/matching.hpp"

namespace hyperspan {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish value in [0, n). Modulo reduction; the bias is negligible
  /// for the small ranges used here and the results are platform-stable.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  /// Uniform real in [lo, hi) from the top 53 bits.
  double real(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Binomial coefficient saturated at 2^62 (large enough to compare against
/// any practical edge count).
inline std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (result > cap / (n - i)) return cap;
    result = result * (n - i) / (i + 1);
  }
  return std::min(result, cap);
}

struct GenConfig {
  std::uint64_t seed = 0;
  int q = 3;
  std::size_t vertex_count = 6;
  std::size_t edge_count = 4;
  double weight_lo = 0.0;
  double weight_hi = 1.0;
  bool distinct_weights = false;
};

/// Deterministic random instance: `edge_count` distinct q-subsets of the
/// vertex universe with weights in [lo, hi). With distinct_weights the
/// weights are a shuffled strictly increasing grid, which forces a unique
/// greedy processing order.
inline Hypergraph random_hypergraph(const GenConfig& cfg) {
  if (cfg.q < 2 || cfg.vertex_count < static_cast<std::size_t>(cfg.q)) {
    throw Error(errc::infeasible_config, "need q >= 2 and at least q vertices");
  }
  if (!(cfg.weight_lo >= 0.0) || !(cfg.weight_hi >= cfg.weight_lo)) {
    throw Error(errc::infeasible_config, "weight range must satisfy 0 <= lo <= hi");
  }
  if (binomial_saturated(cfg.vertex_count, static_cast<std::uint64_t>(cfg.q)) < cfg.edge_count) {
    throw Error(errc::infeasible_config,
                "edge count " + std::to_string(cfg.edge_count) + " exceeds the number of distinct " +
                    std::to_string(cfg.q) + "-subsets of " + std::to_string(cfg.vertex_count) + " vertices");
  }
  if (cfg.distinct_weights && cfg.edge_count > 1 && cfg.weight_lo == cfg.weight_hi) {
    throw Error(errc::infeasible_config, "distinct weights need a nondegenerate range");
  }

  Rng rng(cfg.seed);
  std::set<std::vector<VertexId>> used;
  std::vector<std::vector<VertexId>> edges;
  while (edges.size() < cfg.edge_count) {
    std::vector<VertexId> edge;
    while (edge.size() < static_cast<std::size_t>(cfg.q)) {
      const auto v = static_cast<VertexId>(rng.below(cfg.vertex_count));
      if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
    }
    std::sort(edge.begin(), edge.end());
    if (used.insert(edge).second) edges.push_back(std::move(edge));
  }

  std::vector<double> weights(cfg.edge_count);
  if (cfg.distinct_weights) {
    std::vector<std::size_t> perm(cfg.edge_count);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    rng.shuffle(perm);
    for (std::size_t i = 0; i < cfg.edge_count; ++i) {
      weights[i] = cfg.weight_lo + (cfg.weight_hi - cfg.weight_lo) *
                                       (static_cast<double>(perm[i]) + 0.5) /
                                       static_cast<double>(cfg.edge_count);
    }
  } else {
    for (double& w : weights) w = rng.real(cfg.weight_lo, cfg.weight_hi);
  }
  return Hypergraph(cfg.q, cfg.vertex_count, std::move(edges), std::move(weights));
}

/// All bases (maximal independent edge sets) by subset dynamic programming
/// over the definition: a set is independent iff its coverage bound holds
/// and every one-edge-smaller subset is independent. Capped at 18 edges.
inline std::vector<std::vector<EdgeId>> enumerate_bases(const Hypergraph& h) {
  const std::size_t n = h.edge_count();
  if (n > 18) {
    throw Error(errc::too_large, "enumerate_bases supports at most 18 edges, got " + std::to_string(n));
  }
  if (n == 0) return {{}};

  std::vector<EdgeId> all(n);
  std::iota(all.begin(), all.end(), 0);
  const std::vector<VertexId> cover = covered_vertices(h, all);
  std::vector<std::int32_t> local(h.vertex_count(), -1);
  for (std::size_t i = 0; i < cover.size(); ++i) local[cover[i]] = static_cast<std::int32_t>(i);
  const std::size_t words = (cover.size() + 63) / 64;
  std::vector<std::uint64_t> edge_words(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId v : h.edge(static_cast<EdgeId>(i))) {
      const auto bit = static_cast<std::size_t>(local[v]);
      edge_words[i * words + bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }

  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint64_t> gamma(total * words, 0);
  std::vector<bool> indep(total, false);
  indep[0] = true;
  const int q = h.q();
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    int covered = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t u = gamma[rest * words + w] | edge_words[low * words + w];
      gamma[mask * words + w] = u;
      covered += std::popcount(u);
    }
    if (covered - q + 1 < std::popcount(mask)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (std::size_t{1} << i)) ok = indep[mask ^ (std::size_t{1} << i)];
    }
    indep[mask] = ok;
  }

  std::vector<std::vector<EdgeId>> bases;
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (!indep[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!(mask & (std::size_t{1} << i))) maximal = !indep[mask | (std::size_t{1} << i)];
    }
    if (!maximal) continue;
    std::vector<EdgeId> basis;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) basis.push_back(static_cast<EdgeId>(i));
    }
    bases.push_back(std::move(basis));
  }
  return bases;
}

/// Classical Kruskal minimum spanning forest for 2-uniform instances, with
/// the same (weight, id) ordering as the greedy. Serves as the q=2 oracle.
inline std::pair<std::vector<EdgeId>, double> kruskal_mst(const Hypergraph& h) {
  if (h.q() != 2) {
    throw Error(errc::not_two_uniform, "kruskal_mst requires q=2, got q=" + std::to_string(h.q()));
  }
  std::vector<EdgeId> order(h.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeId lhs, EdgeId rhs) {
    if (h.weight(lhs) != h.weight(rhs)) return h.weight(lhs) < h.weight(rhs);
    return lhs < rhs;
  });
  detail::UnionFind uf(h.vertex_count());
  std::vector<EdgeId> forest;
  for (EdgeId e : order) {
    const auto& vs = h.edge(e);
    if (uf.unite(vs[0], vs[1])) forest.push_back(e);
  }
  std::sort(forest.begin(), forest.end());
  return {forest, subset_weight(h, forest)};
}

// ---------------------------------------------------------------------------
// Cross-oracle property sweep.

struct SweepOptions {
  bool oracle_table = true;      // definition vs matching vs incremental, axioms, fast-check
  bool greedy = true;            // optimality vs enumerate_bases, determinism, trace replay
  bool components = true;        // min-cut components vs brute force, links
  bool basis_invariance = true;  // induced partition identical across bases
};

struct SweepReport {
  std::size_t checks = 0;
  std::size_t basis_count = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }

  bool ok() const noexcept { return failures.empty(); }

  void merge(const SweepReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

namespace detail {

inline std::vector<EdgeId> mask_to_ids(std::size_t mask) {
  std::vector<EdgeId> ids;
  while (mask != 0) {
    ids.push_back(static_cast<EdgeId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return ids;
}

inline bool acyclic_q2(const Hypergraph& h, const std::vector<EdgeId>& ids) {
  UnionFind uf(h.vertex_count());
  for (EdgeId e : ids) {
    const auto& vs = h.edge(e);
    if (!uf.unite(vs[0], vs[1])) return false;
  }
  return true;
}

/// Connected components of a 2-uniform forest as sorted edge sets, ordered
/// by smallest member. Oracle for the q=2 decomposition degeneracy.
inline std::vector<std::vector<EdgeId>> forest_components_q2(const Hypergraph& h,
                                                             const std::vector<EdgeId>& ids) {
  UnionFind uf(h.vertex_count());
  for (EdgeId e : ids) uf.unite(h.edge(e)[0], h.edge(e)[1]);
  std::vector<std::vector<EdgeId>> by_root(h.vertex_count());
  for (EdgeId e : ids) by_root[uf.find(h.edge(e)[0])].push_back(e);
  std::vector<std::vector<EdgeId>> out;
  for (auto& part : by_root) {
    if (!part.empty()) out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.front() < r.front(); });
  return out;
}

}  // namespace detail

/// Runs every cross-oracle invariant on one instance and reports
/// pass/fail counts. The oracle table is exponential in the edge count, so
/// instances must stay small (at most 10 edges with the table enabled).
inline SweepReport sweep_instance(const Hypergraph& h, const SweepOptions& opt = {}) {
  SweepReport rep;
  const std::size_t n = h.edge_count();
  const int q = h.q();
  if (opt.oracle_table && n > 10) {
    throw Error(errc::too_large, "oracle-table sweep supports at most 10 edges");
  }

  std::vector<EdgeId> all_ids(n);
  std::iota(all_ids.begin(), all_ids.end(), 0);

  std::vector<bool> indep;
  if (opt.oracle_table) {
    const std::size_t total = std::size_t{1} << n;
    indep.assign(total, false);
    indep[0] = true;
    rep.expect(coverage_rank(h, {}) == 0, "coverage_rank(empty) == 0");
    rep.expect(is_independent_definition(h, {}).independent, "empty set independent");

    for (std::size_t mask = 1; mask < total; ++mask) {
      const std::vector<EdgeId> ids = detail::mask_to_ids(mask);
      const IndependenceVerdict def = is_independent_definition(h, ids);
      const IndependenceVerdict mat = is_independent_matching(h, ids);
      const IndependenceVerdict inc = is_independent_incremental(h, ids);
      const IndependenceVerdict inc_strict =
          is_independent_incremental(h, ids, RemovalPolicy::all_subsets);
      indep[mask] = def.independent;
      rep.expect(def.independent == mat.independent, "definition vs matching oracle");
      rep.expect(def.independent == inc.independent, "definition vs incremental oracle");
      rep.expect(def.independent == inc_strict.independent, "definition vs strict incremental oracle");
      if (!def.independent) {
        rep.expect(!is_independent_definition(h, def.witness).independent &&
                       coverage_rank(h, def.witness) < static_cast<int>(def.witness.size()),
                   "definition witness violates the coverage bound");
        rep.expect(!has_complete_matching(build_konig(h, ids),
                                          std::vector<VertexId>(mat.witness.begin(), mat.witness.end())),
                   "matching witness removal kills the matching");
      }
      if (q == 2) {
        rep.expect(def.independent == detail::acyclic_q2(h, ids), "q=2 acyclicity degeneracy");
      }
      if (def.independent) {
        for (EdgeId e : ids) {
          rep.expect(indep[mask ^ (std::size_t{1} << e)], "hereditary axiom");
        }
      }
    }

    // Exchange axiom over all independent pairs with |A| = |B| - 1.
    for (std::size_t a = 0; a < total; ++a) {
      if (!indep[a]) continue;
      for (std::size_t b = 1; b < total; ++b) {
        if (!indep[b] || std::popcount(b) != std::popcount(a) + 1) continue;
        bool extended = false;
        for (std::size_t i = 0; i < n && !extended; ++i) {
          const std::size_t bit = std::size_t{1} << i;
          if ((b & bit) && !(a & bit)) extended = indep[a | bit];
        }
        rep.expect(extended, "exchange axiom");
      }
    }

    // Fast extension test against the table, both removal policies.
    for (std::size_t mask = 0; mask < total; ++mask) {
      if (!indep[mask]) continue;
      EdgeSubset w(h, detail::mask_to_ids(mask));
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        if (mask & bit) continue;
        std::size_t calls_single = 0;
        std::size_t calls_all = 0;
        const bool fast = extend_check_fast(h, w, static_cast<EdgeId>(i),
                                            RemovalPolicy::single_smallest, &calls_single);
        const bool strict = extend_check_fast(h, w, static_cast<EdgeId>(i),
                                              RemovalPolicy::all_subsets, &calls_all);
        rep.expect(fast == indep[mask | bit], "fast check (single removal) soundness");
        rep.expect(strict == indep[mask | bit], "fast check (all removals) soundness");
        rep.expect(calls_single <= 1 && calls_all <= static_cast<std::size_t>(q),
                   "fast check probe budget");
      }
    }

    // Submodularity of the coverage rank on pairs with nonempty intersection.
    for (std::size_t a = 1; a < total; ++a) {
      for (std::size_t b = a; b < total; ++b) {
        if ((a & b) == 0) continue;
        const int fa = coverage_rank(h, detail::mask_to_ids(a));
        const int fb = coverage_rank(h, detail::mask_to_ids(b));
        const int fu = coverage_rank(h, detail::mask_to_ids(a | b));
        const int fi = coverage_rank(h, detail::mask_to_ids(a & b));
        rep.expect(fa + fb >= fu + fi, "coverage rank submodularity");
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      rep.expect(covered_vertices(h, std::vector<EdgeId>{static_cast<EdgeId>(i)}).size() ==
                     static_cast<std::size_t>(q),
                 "single edge covers q vertices");
    }
  }

  std::vector<std::vector<EdgeId>> bases;
  if (opt.greedy || opt.basis_invariance) bases = enumerate_bases(h);
  if (!bases.empty()) rep.basis_count = bases.size();

  if (opt.greedy) {
    const std::size_t basis_size = bases.empty() ? 0 : bases.front().size();
    for (const auto& basis : bases) {
      rep.expect(basis.size() == basis_size, "all bases share one cardinality");
    }
    for (Objective objective : {Objective::minimize, Objective::maximize}) {
      double best = 0.0;
      bool first = true;
      for (const auto& basis : bases) {
        const double bw = subset_weight(h, basis);
        if (first || (objective == Objective::minimize ? bw < best : bw > best)) best = bw;
        first = false;
      }

      const Skeleton plain = optimal_skeleton(h, objective);
      const Skeleton incr = optimal_skeleton(h, objective, {RemovalPolicy::single_smallest, true});
      const Skeleton strict = optimal_skeleton(h, objective, {RemovalPolicy::all_subsets, false});
      const Skeleton strict_incr = optimal_skeleton(h, objective, {RemovalPolicy::all_subsets, true});
      const Skeleton rerun = optimal_skeleton(h, objective);

      rep.expect(std::abs(plain.total_weight - best) <= 1e-9, "greedy weight equals basis extremum");
      rep.expect(plain.edges.size() == basis_size, "greedy size equals basis cardinality");
      rep.expect(plain.trace == rerun.trace && plain.edges.members() == rerun.edges.members(),
                 "greedy determinism");
      rep.expect(plain.trace == incr.trace && plain.edges.members() == incr.edges.members(),
                 "incremental matching is bit-identical");
      rep.expect(strict.trace == strict_incr.trace &&
                     strict.edges.members() == strict_incr.edges.members(),
                 "strict incremental matching is bit-identical");
      rep.expect(plain.edges.members() == strict.edges.members(), "removal policy does not change the basis");
      rep.expect(plain.edges.covered() == covered_vertices(h, all_ids), "skeleton spans the hypergraph");
      rep.expect(plain.total_matching_calls() <= n, "matching budget at most |D|");

      // Replaying the trace with the full matching oracle must reproduce
      // every accept/reject decision.
      EdgeSubset prefix(h);
      bool replay_ok = true;
      for (const TraceEntry& t : plain.trace) {
        std::vector<EdgeId> candidate = prefix.members();
        candidate.push_back(t.edge);
        if (is_independent_matching(h, candidate).independent != t.accepted()) replay_ok = false;
        if (t.accepted()) prefix.add(t.edge);
      }
      rep.expect(replay_ok, "trace replay with the full matching oracle");
    }

    if (q == 2) {
      const auto [forest, weight] = kruskal_mst(h);
      const Skeleton greedy = optimal_skeleton(h, Objective::minimize);
      rep.expect(weight == greedy.total_weight, "q=2 greedy weight equals Kruskal");
      bool distinct = true;
      for (EdgeId e = 1; e < n && distinct; ++e) {
        for (EdgeId f = 0; f < e && distinct; ++f) distinct = h.weight(e) != h.weight(f);
      }
      if (distinct) {
        rep.expect(forest == greedy.edges.members(), "q=2 distinct weights give identical edge sets");
      }
    }
  }

  if (opt.components) {
    const Skeleton skeleton = optimal_skeleton(h, Objective::minimize);
    const EdgeSubset& w = skeleton.edges;
    if (w.size() <= 15) {
      const ComponentPartition fast = components(h, w);
      const ComponentPartition brute = components_bruteforce(h, w);
      rep.expect(fast.parts == brute.parts, "components match the brute-force oracle");
      for (std::size_t i = 0; i < fast.parts.size(); ++i) {
        rep.expect(is_tight(h, fast.parts[i]), "every part is tight");
        for (std::size_t j = i + 1; j < fast.parts.size(); ++j) {
          std::vector<EdgeId> merged = fast.parts[i];
          merged.insert(merged.end(), fast.parts[j].begin(), fast.parts[j].end());
          rep.expect(!is_tight(h, merged), "no two parts merge into a tight set");
        }
      }
      const auto& members = w.members();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const int value = tight_pair_value(h, w, members[i], members[j]);
          rep.expect(value >= q - 1, "tight pair value at least q-1");
          bool same_part = false;
          for (const auto& part : fast.parts) {
            if (std::binary_search(part.begin(), part.end(), members[i]) &&
                std::binary_search(part.begin(), part.end(), members[j])) {
              same_part = true;
            }
          }
          rep.expect((value == q - 1) == same_part, "tight pair value characterizes co-membership");
        }
      }
      rep.expect(skeleton_cardinality_bound(h, skeleton, fast), "skeleton cardinality bound");

      const ComponentPartition classified = classify_links(h, w, fast);
      rep.expect(classified.link_assignment.size() == n - w.size(), "every non-skeleton edge is a link");
      std::vector<EdgeId> flattened;
      for (const auto& di : classified.induced()) flattened.insert(flattened.end(), di.begin(), di.end());
      std::sort(flattened.begin(), flattened.end());
      rep.expect(flattened == all_ids, "induced components partition the edge set");

      if (q == 2) {
        rep.expect(fast.parts == detail::forest_components_q2(h, members), "q=2 forest components");
      }
    }
  }

  if (opt.basis_invariance && bases.size() >= 2 && bases.size() <= 32) {
    std::vector<std::vector<EdgeId>> reference;
    bool invariant = true;
    for (const auto& basis : bases) {
      EdgeSubset w(h, basis);
      const ComponentPartition classified = classify_links(h, w, components(h, w));
      std::vector<std::vector<EdgeId>> induced = classified.induced();
      std::sort(induced.begin(), induced.end());
      if (reference.empty()) {
        reference = std::move(induced);
      } else if (induced != reference) {
        invariant = false;
      }
    }
    rep.expect(invariant, "induced partition is invariant under basis choice");
  }

  return rep;
}

/// Deterministic sweep configuration for instance `index` of a verify run.
/// `q` of 0 cycles through 2, 3, 4.
inline GenConfig sample_config(std::uint64_t seed, std::size_t index, int q, std::size_t max_vertices,
                               std::size_t max_edges) {
  Rng rng(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  GenConfig cfg;
  cfg.q = q != 0 ? q : static_cast<int>(2 + index % 3);
  const std::size_t qs = static_cast<std::size_t>(cfg.q);
  const std::size_t vmax = std::max(max_vertices, qs);
  cfg.vertex_count = qs + rng.below(vmax - qs + 1);
  const std::uint64_t room = binomial_saturated(cfg.vertex_count, qs);
  cfg.edge_count = static_cast<std::size_t>(rng.below(std::min<std::uint64_t>(max_edges, room) + 1));
  cfg.distinct_weights = rng.below(2) == 1;
  if (!cfg.distinct_weights) {
    cfg.weight_lo = 0.0;
    cfg.weight_hi = 4.0;
  }
  cfg.seed = rng.next();
  return cfg;
}

/// Instance for a sweep. Non-distinct weights are snapped to a small grid so
/// ties get exercised.
inline Hypergraph sweep_hypergraph(const GenConfig& cfg) {
  Hypergraph h = random_hypergraph(cfg);
  if (cfg.distinct_weights) return h;
  std::vector<std::vector<VertexId>> edges;
  std::vector<double> weights;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    edges.push_back(h.edge(e));
    weights.push_back(std::floor(h.weight(e) * 4.0) / 4.0);
  }
  return Hypergraph(cfg.q, cfg.vertex_count, std::move(edges), std::move(weights));
}

/// Generates instance `index` and runs the full sweep.
inline SweepReport sweep_random_instance(std::uint64_t seed, std::size_t index, int q,
                                         std::size_t max_vertices, std::size_t max_edges,
                                         const SweepOptions& opt = {}) {
  return sweep_instance(sweep_hypergraph(sample_config(seed, index, q, max_vertices, max_edges)), opt);
}

}  // namespace hyperspan
