// hyperspan command-line tool.
//
// Subcommands:
//   span        build an optimal skeleton and report its components
//   check       decide independence of an edge subset
//   components  connection-component decomposition with links
//   konig       DOT export of a Koenig representation
//   verify      seeded cross-oracle property sweeps
//   bench       skeleton construction timings as CSV
//
// Exit codes: 0 success (and "independent" for check), 1 dependent subset or
// failed verification, 2 input or usage error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyperspan/hyperspan.hpp"

namespace {

using namespace hyperspan;

constexpr const char* kUsage =
    "usage: hyperspan <command> [options]\n"
    "\n"
    "commands:\n"
    "  span <file> [--max] [--trace] [--strict-removals]\n"
    "      print skeleton edges, total weight and component count\n"
    "  check <file> --edges a,b,c [--strict-removals]\n"
    "      exit 0 if the listed edges are independent, 1 if dependent\n"
    "  components <file>\n"
    "      per component: skeleton edges, links, cover size\n"
    "  konig <file> [--edges a,b,c] [--remove v1,v2]\n"
    "      DOT export; vertices are 1-based, removed ones drawn dashed\n"
    "  verify [--seed N] [--count N] [--q N] [--max-vertices N]\n"
    "         [--max-edges N] [--csv]\n"
    "      run cross-oracle sweeps on seeded random instances\n"
    "      (HYPERSPAN_THREADS caps the worker count)\n"
    "  bench [--sizes n1,n2,...] [--q N] [--seed N] [--vertices N]\n"
    "      CSV: q,vertices,edges,accepted,matching_calls,wall_ms\n";

struct Args {
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> options;  // --name [value]

  bool has(const std::string& name) const {
    for (const auto& [key, value] : options) {
      if (key == name) return true;
    }
    return false;
  }

  std::string get(const std::string& name, const std::string& fallback) const {
    for (const auto& [key, value] : options) {
      if (key == name) return value;
    }
    return fallback;
  }
};

const std::vector<std::string> kValueOptions = {"--edges",  "--remove",       "--seed",
                                                "--count",  "--q",            "--max-vertices",
                                                "--max-edges", "--sizes",     "--vertices"};

Args parse_args(int argc, char** argv, int first) {
  Args args;
  for (int i = first; i < argc; ++i) {
    std::string token = argv[i];
    if (token.rfind("--", 0) == 0) {
      bool takes_value =
          std::find(kValueOptions.begin(), kValueOptions.end(), token) != kValueOptions.end();
      if (takes_value) {
        if (i + 1 >= argc) {
          throw Error(errc::invalid_argument, "option " + token + " needs a value");
        }
        args.options.emplace_back(token, argv[++i]);
      } else {
        args.options.emplace_back(token, "");
      }
    } else {
      args.positional.push_back(std::move(token));
    }
  }
  return args;
}

std::vector<std::string> split_csl(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long long to_int(const std::string& token, const char* what) {
  char* end = nullptr;
  const long long value = std::strtoll(token.c_str(), &end, 10);
  if (token.empty() || end != token.c_str() + token.size()) {
    throw Error(errc::invalid_argument, std::string("expected an integer for ") + what + ", got '" +
                                            token + "'");
  }
  return value;
}

Hypergraph load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::parse_error, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::vector<EdgeId> resolve_labels(const Hypergraph& h, const std::string& csl) {
  std::vector<EdgeId> ids;
  for (const std::string& label : split_csl(csl)) {
    const auto id = h.find_label(label);
    if (!id) {
      throw Error(errc::unknown_label, "no edge labeled '" + label + "'");
    }
    ids.push_back(*id);
  }
  return ids;
}

RemovalPolicy policy_from(const Args& args) {
  return args.has("--strict-removals") ? RemovalPolicy::all_subsets : RemovalPolicy::single_smallest;
}

const char* decision_name(GreedyDecision d) {
  switch (d) {
    case GreedyDecision::new_vertex: return "new-vertex";
    case GreedyDecision::matching_accepted: return "matching-accepted";
    case GreedyDecision::matching_rejected: return "matching-rejected";
  }
  return "?";
}

int cmd_span(const Args& args) {
  if (args.positional.size() != 1) {
    throw Error(errc::invalid_argument, "span needs exactly one instance file");
  }
  const Hypergraph h = load_instance(args.positional[0]);
  GreedyOptions options;
  options.removals = policy_from(args);
  const Objective objective = args.has("--max") ? Objective::maximize : Objective::minimize;
  const Skeleton skeleton = optimal_skeleton(h, objective, options);
  const ComponentPartition parts = components(h, skeleton.edges);

  std::string edge_line = "edges:";
  for (EdgeId e : skeleton.edges.members()) edge_line += " " + h.label(e);
  std::cout << edge_line << "\n";
  std::cout << "weight: " << detail::format_weight(skeleton.total_weight) << "\n";
  std::cout << "components: " << parts.part_count() << "\n";
  if (args.has("--trace")) {
    for (const TraceEntry& t : skeleton.trace) {
      std::cout << "trace: " << h.label(t.edge) << " case=" << decision_name(t.decision)
                << " matching_calls=" << t.matching_calls << "\n";
    }
  }
  return 0;
}

int cmd_check(const Args& args) {
  if (args.positional.size() != 1 || !args.has("--edges")) {
    throw Error(errc::invalid_argument, "check needs an instance file and --edges");
  }
  const Hypergraph h = load_instance(args.positional[0]);
  const std::vector<EdgeId> ids = resolve_labels(h, args.get("--edges", ""));
  const IndependenceVerdict verdict = is_independent_incremental(h, ids, policy_from(args));
  if (verdict.independent) {
    std::cout << "independent\n";
    return 0;
  }
  std::cout << "dependent\n";
  if (verdict.failed_edge) {
    std::cout << "witness_edge: " << h.label(*verdict.failed_edge) << "\n";
  }
  std::cout << "witness_removal:";
  for (std::uint32_t v : verdict.witness) std::cout << " " << v + 1;
  std::cout << "\n";
  return 1;
}

int cmd_components(const Args& args) {
  if (args.positional.size() != 1) {
    throw Error(errc::invalid_argument, "components needs exactly one instance file");
  }
  const Hypergraph h = load_instance(args.positional[0]);
  const ComponentPartition parts = hypergraph_components(h);
  for (const auto& part : parts.parts) {
    if (!is_tight(h, part)) {
      throw Error(errc::not_independent, "internal error: component is not tight");
    }
  }
  std::cout << "components: " << parts.part_count() << "\n";
  for (std::size_t i = 0; i < parts.part_count(); ++i) {
    std::string line = "component " + std::to_string(i + 1) + ": edges=";
    for (EdgeId e : parts.parts[i]) line += " " + h.label(e);
    line += " links=";
    for (EdgeId e : parts.links[i]) line += " " + h.label(e);
    line += " cover= " + std::to_string(parts.vertex_covers[i].size());
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_konig(const Args& args) {
  if (args.positional.size() != 1) {
    throw Error(errc::invalid_argument, "konig needs exactly one instance file");
  }
  const Hypergraph h = load_instance(args.positional[0]);
  std::vector<EdgeId> ids;
  if (args.has("--edges")) {
    ids = resolve_labels(h, args.get("--edges", ""));
  } else {
    for (EdgeId e = 0; e < h.edge_count(); ++e) ids.push_back(e);
  }
  KonigGraph k = build_konig(h, ids);
  for (const std::string& token : split_csl(args.get("--remove", ""))) {
    const long long file_id = to_int(token, "--remove vertex");
    const std::int32_t idx = file_id >= 1 ? k.right_index(static_cast<VertexId>(file_id - 1)) : -1;
    if (idx < 0) {
      throw Error(errc::removed_vertex_not_in_graph,
                  "vertex " + token + " is not covered by the selected edges");
    }
    k.removed[idx] = true;
  }
  std::cout << konig_dot(h, k);
  return 0;
}

int cmd_verify(const Args& args) {
  const auto seed = static_cast<std::uint64_t>(to_int(args.get("--seed", "42"), "--seed"));
  const auto count = static_cast<std::size_t>(to_int(args.get("--count", "100"), "--count"));
  const int q = static_cast<int>(to_int(args.get("--q", "0"), "--q"));
  const auto max_vertices = static_cast<std::size_t>(to_int(args.get("--max-vertices", "8"), "--max-vertices"));
  const auto max_edges = static_cast<std::size_t>(to_int(args.get("--max-edges", "6"), "--max-edges"));
  if (q != 0 && q < 2) {
    throw Error(errc::invalid_argument, "--q must be 0 (cycle) or at least 2");
  }

  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERSPAN_THREADS")) {
    const long long cap = std::strtoll(env, nullptr, 10);
    if (cap >= 1) threads = std::min<std::size_t>(threads, static_cast<std::size_t>(cap));
  }
  threads = std::min(threads, std::max<std::size_t>(count, 1));

  std::vector<SweepReport> reports(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::string> worker_errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          reports[i] = sweep_random_instance(seed, i, q, max_vertices, max_edges);
        }
      } catch (const std::exception& e) {
        worker_errors[t] = e.what();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  for (const std::string& err : worker_errors) {
    if (!err.empty()) throw Error(errc::invalid_argument, "sweep failed: " + err);
  }

  if (args.has("--inject-fault") && !reports.empty()) {
    reports[0].failures.push_back("injected fault (self-test)");
  }

  std::size_t passed = 0;
  for (const SweepReport& rep : reports) passed += rep.ok() ? 1 : 0;

  if (args.has("--csv")) {
    std::cout << "index,seed,q,vertices,edges,checks,failures\n";
    for (std::size_t i = 0; i < count; ++i) {
      const GenConfig cfg = sample_config(seed, i, q, max_vertices, max_edges);
      std::cout << i << "," << cfg.seed << "," << cfg.q << "," << cfg.vertex_count << ","
                << cfg.edge_count << "," << reports[i].checks << "," << reports[i].failures.size()
                << "\n";
    }
  } else {
    std::cout << passed << "/" << count << " ok\n";
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (const std::string& failure : reports[i].failures) {
      std::cerr << "instance " << i << ": " << failure << "\n";
    }
  }
  return passed == count ? 0 : 1;
}

int cmd_bench(const Args& args) {
  const auto seed = static_cast<std::uint64_t>(to_int(args.get("--seed", "1"), "--seed"));
  const int q = static_cast<int>(to_int(args.get("--q", "3"), "--q"));
  if (q < 2) {
    throw Error(errc::invalid_argument, "--q must be at least 2");
  }
  std::vector<std::size_t> sizes;
  for (const std::string& token : split_csl(args.get("--sizes", "100,200,400"))) {
    sizes.push_back(static_cast<std::size_t>(to_int(token, "--sizes entry")));
  }

  std::cout << "q,vertices,edges,accepted,matching_calls,wall_ms\n";
  for (std::size_t row = 0; row < sizes.size(); ++row) {
    const std::size_t edges = sizes[row];
    std::size_t vertices;
    if (args.has("--vertices")) {
      vertices = static_cast<std::size_t>(to_int(args.get("--vertices", ""), "--vertices"));
    } else {
      vertices = std::max<std::size_t>(static_cast<std::size_t>(q) + 1, edges / 5);
    }
    while (binomial_saturated(vertices, static_cast<std::uint64_t>(q)) < edges) ++vertices;

    GenConfig cfg;
    cfg.seed = seed + row;
    cfg.q = q;
    cfg.vertex_count = vertices;
    cfg.edge_count = edges;
    const Hypergraph h = random_hypergraph(cfg);

    const auto start = std::chrono::steady_clock::now();
    const Skeleton skeleton = optimal_skeleton(h, Objective::minimize);
    const auto stop = std::chrono::steady_clock::now();
    const double wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", wall_ms);
    std::cout << q << "," << vertices << "," << edges << "," << skeleton.edges.size() << ","
              << skeleton.total_matching_calls() << "," << wall << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  const std::string command = argv[1];
  if (command == "-h" || command == "--help" || command == "help") {
    std::cout << kUsage;
    return 0;
  }
  try {
    const Args args = parse_args(argc, argv, 2);
    if (command == "span") return cmd_span(args);
    if (command == "check") return cmd_check(args);
    if (command == "components") return cmd_components(args);
    if (command == "konig") return cmd_konig(args);
    if (command == "verify") return cmd_verify(args);
    if (command == "bench") return cmd_bench(args);
    std::cerr << "unknown command '" << command << "'\n" << kUsage;
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
