// Command-line surface for the block transposition toolkit: enumeration,
// graph export, claim verification, sorting distance, and automorphism
// reports. Exit codes: 0 all checks pass, 1 at least one FAIL, 2 usage or
// bounds error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bt/aut.hpp"
#include "bt/bt_graphs.hpp"
#include "bt/cuts.hpp"
#include "bt/graph.hpp"
#include "bt/parallel.hpp"
#include "bt/perm.hpp"
#include "bt/report.hpp"
#include "bt/sortdist.hpp"
#include "bt/toric.hpp"
#include "bt/verify.hpp"

namespace {

using namespace bt;

int cmd_enumerate(int n, const std::string& class_filter) {
  std::optional<PartitionClass> want;
  if (!class_filter.empty()) {
    want = class_from_letter(class_filter);
    if (!want) {
      std::cerr << "unknown class '" << class_filter << "' (use B, L, F or S)\n";
      return 2;
    }
  }
  for (const Cuts& c : enumerate_tn(n)) {
    const PartitionClass cls = classify(c);
    if (want && cls != *want) continue;
    std::cout << to_string(c) << "  " << class_letter(cls) << "  "
              << as_permutation(c).str() << '\n';
  }
  return 0;
}

ExportFormat parse_format(const std::string& name) {
  if (name == "edges") return ExportFormat::edges;
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

Convention parse_convention(const std::string& name) {
  if (name == "left") return Convention::left;
  if (name == "right") return Convention::right;
  throw std::invalid_argument("unknown convention '" + name + "'");
}

int cmd_graph(int n, const std::string& kind, const std::string& format,
              const std::string& out, const std::string& convention,
              int max_cayley_n, int threads) {
  const Convention conv = parse_convention(convention);
  Graph g;
  if (kind == "bt") {
    g = build_bt_graph(n, conv);
  } else if (kind == "cayley") {
    CayleyOptions opts;
    opts.conv = conv;
    opts.max_n = max_cayley_n;
    opts.threads = threads;
    g = build_cayley(n, opts);
  } else if (kind == "btv") {
    const Graph full = build_bt_graph(n, conv);
    std::vector<int> vidx;
    for (const Cuts& c : vertex_set_V(n)) vidx.push_back(bt_vertex_index(c));
    g = induced(full, vidx);
  } else {
    throw std::invalid_argument("unknown graph kind '" + kind + "'");
  }
  const ExportFormat fmt = parse_format(format);
  if (out.empty()) {
    export_graph(g, fmt, std::cout);
  } else {
    std::ofstream os(out);
    if (!os) throw std::invalid_argument("cannot open output file '" + out + "'");
    export_graph(g, fmt, os);
  }
  return 0;
}

int cmd_verify(int n, const std::string& suite_name, bool json_out,
               const VerifyOptions& opts) {
  const auto suite = suite_from_name(suite_name);
  if (!suite) {
    std::cerr << "unknown suite '" << suite_name << "'\n";
    return 2;
  }
  const Report r = run_suite(*suite, n, opts);
  if (json_out) {
    print_json(r, std::cout);
  } else {
    print_text(r, std::cout);
  }
  return r.all_pass() ? 0 : 1;
}

int cmd_distance(int n, const std::string& perm_text, bool with_trace) {
  const auto p = Perm::parse(perm_text);
  if (!p || p->degree() != n) {
    std::cerr << "--perm must be a permutation of 1.." << n
              << " in one-line notation\n";
    return 2;
  }
  if (!with_trace) {
    std::cout << bt_distance(*p) << '\n';
    return 0;
  }
  const SortingTrace tr = sorting_sequence(*p);
  std::cout << tr.moves.size() << '\n';
  Perm cur = tr.start;
  for (const Cuts& c : tr.moves) {
    cur = apply_right(cur, c);
    std::cout << to_string(c) << " -> " << cur.str() << '\n';
  }
  return 0;
}

int cmd_aut(int n, const std::string& kind, bool json_out, int max_cayley_n,
            int threads) {
  GroupDescription gd;
  bool matches_dihedral = false;
  if (kind == "bt") {
    const Graph g = build_bt_graph(n);
    const auto sols = all_automorphisms(g);
    const auto dm = dihedral_as_vertex_maps(n);
    matches_dihedral = std::set<VertexMap>(sols.begin(), sols.end()) ==
                       std::set<VertexMap>(dm.begin(), dm.end());
    gd = automorphism_group(g);
  } else if (kind == "cayley") {
    CayleyOptions opts;
    opts.conv = Convention::left;
    opts.max_n = max_cayley_n;
    opts.threads = threads;
    gd = automorphism_group(build_cayley(n, opts));
  } else {
    throw std::invalid_argument("unknown graph kind '" + kind + "'");
  }
  if (json_out) {
    nlohmann::ordered_json j;
    j["graph"] = kind;
    j["n"] = n;
    j["order"] = gd.order;
    if (kind == "bt") {
      j["matches_toric_reverse"] = matches_dihedral;
      if (matches_dihedral) {
        j["generators"] = {"f", "g"};
        auto& elems = j["elements"] = nlohmann::ordered_json::array();
        for (const auto& e : toric_reverse_group(n, Convention::right)) {
          elems.push_back(to_string(e));
        }
      }
    }
    if (!j.contains("generators")) j["generators_count"] = gd.generators.size();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "order " << gd.order << "; generators: ";
    if (kind == "bt" && matches_dihedral) {
      std::cout << "f, g\n";
    } else {
      std::cout << gd.generators.size() << " vertex maps\n";
    }
  }
  return 0;
}

int cmd_hampath(int n) {
  const Graph g = build_bt_graph(n);
  const auto cycle = hamiltonian_cycle_V(n);
  for (const Cuts& c : cycle) {
    std::cout << to_string(c) << "  " << as_permutation(c).str() << '\n';
  }
  bool ok = cycle.size() == vertex_set_V(n).size();
  for (std::size_t t = 0; t < cycle.size() && ok; ++t) {
    ok = g.adjacent(bt_vertex_index(cycle[t]),
                    bt_vertex_index(cycle[(t + 1) % cycle.size()]));
  }
  std::cout << "# cycle " << (ok ? "OK" : "INVALID") << ": " << cycle.size()
            << " vertices, consecutive pairs adjacent\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block transposition calculus: T_n, toric-reverse group, "
               "block transposition graphs, automorphisms, sorting distance"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "cap on worker threads (0 = all cores)");

  int n = 0;
  std::string class_filter, kind = "bt", format = "edges", out, convention = "right";
  std::string suite_name, perm_text, aut_kind = "bt";
  bool json_out = false, with_trace = false;
  int max_cayley_n = 7;
  VerifyOptions vopts;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list T_n with classes");
  enumerate->add_option("--n", n, "degree")->required();
  enumerate->add_option("--class", class_filter, "restrict to one class (B|L|F|S)");

  CLI::App* graph = app.add_subcommand("graph", "export a graph");
  graph->add_option("--n", n, "degree")->required();
  graph->add_option("--kind", kind, "bt | cayley | btv");
  graph->add_option("--format", format, "edges | dot | json");
  graph->add_option("--out", out, "output file (default stdout)");
  graph->add_option("--convention", convention, "left | right");
  graph->add_option("--max-cayley-n", max_cayley_n, "raise the Cayley size guard");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--n", n, "degree")->required();
  verify->add_option("--suite", suite_name, "suite name")->required();
  verify->add_flag("--json", json_out, "JSON report");
  verify->add_option("--samples", vopts.samples, "sample count for large n");
  const CLI::Option* vmax =
      verify->add_option("--max-cayley-n", max_cayley_n,
                         "raise the n_trivial Cayley bound (default 6)");

  CLI::App* distance = app.add_subcommand("distance", "sorting distance");
  distance->add_option("--n", n, "degree")->required();
  distance->add_option("--perm", perm_text, "one-line permutation")->required();
  distance->add_flag("--trace", with_trace, "print a shortest sorting sequence");

  CLI::App* aut = app.add_subcommand("aut", "automorphism group report");
  aut->add_option("--n", n, "degree")->required();
  aut->add_option("--graph", aut_kind, "bt | cayley");
  aut->add_flag("--json", json_out, "JSON report");
  aut->add_option("--max-cayley-n", max_cayley_n, "raise the Cayley size guard");

  CLI::App* hampath = app.add_subcommand("hampath", "Hamiltonian cycle on V");
  hampath->add_option("--n", n, "degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bt::set_default_threads(threads);
  try {
    if (enumerate->parsed()) return cmd_enumerate(n, class_filter);
    if (graph->parsed()) {
      return cmd_graph(n, kind, format, out, convention, max_cayley_n, threads);
    }
    if (verify->parsed()) {
      // the n_trivial bound stays at 6 unless raised explicitly
      if (vmax->count() > 0) vopts.max_cayley_n = max_cayley_n;
      return cmd_verify(n, suite_name, json_out, vopts);
    }
    if (distance->parsed()) return cmd_distance(n, perm_text, with_trace);
    if (aut->parsed()) return cmd_aut(n, aut_kind, json_out, max_cayley_n, threads);
    if (hampath->parsed()) return cmd_hampath(n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
