// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperspan/hyperspan.hpp"
#include "test_util.hpp"

namespace {

using namespace hyperspan;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// Shared sweep for criteria 1, 2 and 7: 1000 seeded instances with
// q in {2,3,4}, at most 9 vertices and 7 edges, oracle table only.
struct OracleSweep {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

const OracleSweep& oracle_sweep() {
  static const OracleSweep sweep = [] {
    OracleSweep s;
    SweepOptions opt;
    opt.greedy = false;
    opt.components = false;
    opt.basis_invariance = false;
    for (std::size_t i = 0; i < 1000; ++i) {
      SweepReport rep = sweep_random_instance(20260810, i, 0, 9, 7, opt);
      s.checks += rep.checks;
      for (const std::string& f : rep.failures) {
        s.failures.push_back("instance " + std::to_string(i) + ": " + f);
      }
      ++s.instances;
    }
    return s;
  }();
  return sweep;
}

std::size_t count_label(const std::vector<std::string>& failures, const std::string& needle) {
  std::size_t n = 0;
  for (const std::string& f : failures) {
    if (f.find(needle) != std::string::npos) ++n;
  }
  return n;
}

// 1. Oracle equivalence over every nonempty subset of 1000 instances.
void criterion_oracle_equivalence() {
  const OracleSweep& s = oracle_sweep();
  require(s.instances == 1000, "expected 1000 instances");
  const std::size_t axiom = count_label(s.failures, "axiom");
  const std::size_t fast = count_label(s.failures, "fast check");
  require(s.failures.size() == axiom + fast,
          "oracle disagreement: " + (s.failures.empty() ? "" : s.failures.front()));
}

// 2. Fast-check soundness for both removal policies, same sweep.
void criterion_fast_check() {
  const OracleSweep& s = oracle_sweep();
  const std::size_t fast = count_label(s.failures, "fast check");
  require(fast == 0, "fast-check disagreement: " + std::to_string(fast) + " failures");
}

// 7. Matroid axioms on every sampled independent set of the same sweep.
void criterion_matroid_axioms() {
  const OracleSweep& s = oracle_sweep();
  const std::size_t axiom = count_label(s.failures, "axiom");
  require(axiom == 0, "axiom violation: " + std::to_string(axiom) + " failures");
}

// 3. Greedy optimality against exhaustive basis enumeration.
void criterion_greedy_optimality() {
  SweepOptions opt;
  opt.oracle_table = false;
  opt.components = false;
  opt.basis_invariance = false;
  for (std::size_t i = 0; i < 200; ++i) {
    SweepReport rep = sweep_random_instance(3141592, i, 0, 9, 8, opt);
    require(rep.ok(), "instance " + std::to_string(i) + ": " +
                          (rep.failures.empty() ? "" : rep.failures.front()));
  }
}

// 4. q=2 degeneracy against Kruskal.
void criterion_q2_degeneracy() {
  SweepOptions opt;
  opt.oracle_table = false;
  opt.components = false;
  opt.basis_invariance = false;
  for (std::size_t i = 0; i < 100; ++i) {
    SweepReport rep = sweep_random_instance(2718281, i, 2, 10, 12, opt);
    require(rep.ok(), "instance " + std::to_string(i) + ": " +
                          (rep.failures.empty() ? "" : rep.failures.front()));
  }
}

// 5. Decomposition equals the brute-force oracle; q=4 triple regression.
void criterion_decomposition() {
  SweepOptions opt;
  opt.oracle_table = false;
  opt.greedy = false;
  opt.basis_invariance = false;
  for (std::size_t i = 0; i < 300; ++i) {
    SweepReport rep = sweep_random_instance(1618033, i, 0, 10, 14, opt);
    require(rep.ok(), "instance " + std::to_string(i) + ": " +
                          (rep.failures.empty() ? "" : rep.failures.front()));
  }

  Hypergraph triple = testutil::q4_triple();
  EdgeSubset w(triple, {0, 1, 2});
  ComponentPartition parts = components(triple, w);
  require(parts.part_count() == 1, "q=4 triple must form exactly one component, got " +
                                       std::to_string(parts.part_count()));
  require(is_tight(triple, parts.parts[0]), "q=4 triple component must be tight");
  require(components_bruteforce(triple, w).parts == parts.parts,
          "q=4 triple disagrees with the brute-force oracle");
}

// 6. Induced partition invariant across every enumerated basis.
void criterion_skeleton_invariance() {
  SweepOptions opt;
  opt.oracle_table = false;
  opt.greedy = false;
  opt.components = false;
  std::size_t multi_basis = 0;
  for (std::size_t i = 0; i < 400 && multi_basis < 50; ++i) {
    SweepReport rep = sweep_random_instance(1414213, i, 0, 8, 6, opt);
    require(rep.ok(), "instance " + std::to_string(i) + ": " +
                          (rep.failures.empty() ? "" : rep.failures.front()));
    if (rep.basis_count >= 2) ++multi_basis;
  }
  require(multi_basis >= 50,
          "only " + std::to_string(multi_basis) + " multi-basis instances were sampled");
}

// 8. Worked-instance pin, confirmed against the exhaustive oracles first,
// then through the CLI surface.
void criterion_worked_instance() {
  Hypergraph h = parse_instance(testutil::worked_instance_text());

  auto bases = enumerate_bases(h);
  require(bases.size() == 4, "worked instance must have 4 bases");
  double best = 0.0;
  bool first = true;
  for (const auto& basis : bases) {
    require(basis.size() == 3, "every basis has 3 edges");
    require(is_independent_definition(h, basis).independent, "bases are independent");
    const double bw = subset_weight(h, basis);
    if (first || bw < best) best = bw;
    first = false;
  }
  require(best == 6.0, "minimum basis weight must be 6");

  Skeleton s = optimal_skeleton(h, Objective::minimize);
  require(s.edges.members() == std::vector<EdgeId>{0, 1, 2}, "skeleton must be {x,y,z}");
  require(s.total_weight == 6.0, "skeleton weight must be 6");
  ComponentPartition parts = classify_links(h, s.edges, components(h, s.edges));
  require(parts.part_count() == 1, "one component");
  require(parts.links[0] == std::vector<EdgeId>{3}, "u is the link");

  testutil::TempFile file(testutil::worked_instance_text());
  testutil::CliResult span = testutil::run_cli("span " + file.path());
  require(span.exit_code == 0 && span.output == "edges: x y z\nweight: 6\ncomponents: 1\n",
          "span output mismatch: " + span.output);

  testutil::CliResult check = testutil::run_cli("check " + file.path() + " --edges x,y,z,u");
  require(check.exit_code == 1, "check must exit 1 on the dependent set");
  std::istringstream lines(check.output);
  std::string line;
  std::vector<VertexId> witness;
  bool witness_seen = false;
  while (std::getline(lines, line)) {
    if (line.rfind("witness_removal:", 0) == 0) {
      witness_seen = true;
      std::istringstream fields(line.substr(16));
      for (long long v; fields >> v;) witness.push_back(static_cast<VertexId>(v));
    }
  }
  require(witness_seen && witness.size() == 2, "check must print a (q-1)-vertex removal witness");
  for (VertexId v : witness) {
    require(v == 1 || v == 4 || v == 5, "witness vertex " + std::to_string(v) +
                                            " must lie inside the vertices of u = {1,4,5}");
  }
}

// 9. Polynomial-scaling smoke through the bench surface.
void criterion_scaling() {
  testutil::CliResult bench =
      testutil::run_cli("bench --sizes 5000,10000 --vertices 1000 --q 3 --seed 20260810");
  require(bench.exit_code == 0, "bench failed");

  std::istringstream lines(bench.output);
  std::string header;
  std::getline(lines, header);
  require(header == "q,vertices,edges,accepted,matching_calls,wall_ms", "bench header mismatch");

  std::vector<double> wall;
  std::vector<long long> edges, calls;
  for (std::string line; std::getline(lines, line);) {
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    require(fields.size() == 6, "bench row must have 6 columns");
    edges.push_back(std::stoll(fields[2]));
    calls.push_back(std::stoll(fields[4]));
    wall.push_back(std::stod(fields[5]));
  }
  require(edges.size() == 2, "expected two bench rows");
  require(edges[0] == 5000 && edges[1] == 10000, "bench rows must cover 5000 and 10000 edges");
  for (std::size_t i = 0; i < 2; ++i) {
    require(calls[i] <= edges[i], "matching calls must stay at or below the edge count");
  }
  require(wall[0] < 10000.0, "5000-edge solve took " + std::to_string(wall[0]) + " ms, budget 10 s");
  const double baseline = std::max(wall[0], 1.0);
  require(wall[1] < 10.0 * baseline, "doubling the edges blew the 10x budget: " +
                                         std::to_string(wall[1]) + " ms vs " +
                                         std::to_string(wall[0]) + " ms");
}

// 10. CLI contract: byte-identical round trip, exit codes, CSV header.
void criterion_cli_contract() {
  const std::string canonical = testutil::worked_instance_text();
  require(write_instance(parse_instance(canonical)) == canonical,
          "canonical file must round-trip byte-identically");
  for (std::size_t i = 0; i < 25; ++i) {
    Hypergraph h = random_hypergraph(sample_config(5050, i, 0, 9, 7));
    const std::string once = write_instance(h);
    require(write_instance(parse_instance(once)) == once, "generated instance round trip");
  }

  testutil::TempFile good(canonical);
  testutil::TempFile bad("hgr 3 4\ne a 1 1 2 w 1\n");
  require(testutil::run_cli("span " + good.path()).exit_code == 0, "span exits 0 on success");
  require(testutil::run_cli("check " + good.path() + " --edges x,y").exit_code == 0,
          "check exits 0 on an independent subset");
  require(testutil::run_cli("check " + good.path() + " --edges x,y,z,u").exit_code == 1,
          "check exits 1 on a dependent subset");
  require(testutil::run_cli("span " + bad.path()).exit_code == 2, "span exits 2 on a parse error");
  require(testutil::run_cli("check " + good.path() + " --edges bogus").exit_code == 2,
          "check exits 2 on an unknown label");

  testutil::CliResult bench = testutil::run_cli("bench --sizes 30 --q 3 --seed 3");
  require(bench.exit_code == 0 &&
              bench.output.rfind("q,vertices,edges,accepted,matching_calls,wall_ms\n", 0) == 0,
          "bench CSV header must match exactly");

  testutil::CliResult verify = testutil::run_cli("verify --count 5 --seed 12");
  require(verify.exit_code == 0 && verify.output == "5/5 ok\n", "verify smoke run");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence (definition vs matching, 1000 instances)", criterion_oracle_equivalence},
      {2, "fast-check soundness (single and strict removals)", criterion_fast_check},
      {3, "greedy optimality over enumerated bases (200 instances)", criterion_greedy_optimality},
      {4, "q=2 degeneracy against Kruskal (100 instances)", criterion_q2_degeneracy},
      {5, "decomposition vs brute force (300 forests) and q=4 regression", criterion_decomposition},
      {6, "skeleton-choice invariance (50 multi-basis instances)", criterion_skeleton_invariance},
      {7, "matroid hereditary and exchange axioms", criterion_matroid_axioms},
      {8, "worked-instance pin (library and CLI)", criterion_worked_instance},
      {9, "polynomial-scaling smoke (5000 and 10000 edges)", criterion_scaling},
      {10, "CLI contract (round trip, exit codes, CSV header)", criterion_cli_contract},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, ms,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
