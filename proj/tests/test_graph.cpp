#include "bt/bt_graphs.hpp"
#include "bt/graph.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

using namespace bt;

namespace {

Graph k4() {
  return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                    {"a", "b", "c", "d"});
}

}  // namespace

TEST_CASE("make_graph validation") {
  CHECK_THROWS_AS(make_graph(2, {{0, 0}}, {"a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}, {"a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {}, {"a", "a"}), std::invalid_argument);
  const Graph g = make_graph(1, {}, {"v"});
  CHECK(degree_report(g) == std::vector<int>{0});
}

TEST_CASE("block transposition graph degrees") {
  // 2(n-2)-regular; the computed value at n=4 is 4, matching the general
  // formula rather than the quoted 3
  CHECK(is_k_regular(build_bt_graph(3), 2));
  CHECK(is_k_regular(build_bt_graph(4), 4));
  for (int n = 5; n <= 7; ++n) {
    const Graph g = build_bt_graph(n);
    CHECK(g.vertex_count() == static_cast<int>(tn_size(n)));
    CHECK(is_k_regular(g, 2 * (n - 2)));
  }
}

TEST_CASE("bt graph edges come from right multiplication") {
  const int n = 5;
  const Graph g = build_bt_graph(n);
  const auto tn = enumerate_tn(n);
  for (int u = 0; u < g.vertex_count(); ++u) {
    const Perm pu = as_permutation(tn[u]);
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      const bool edge =
          cuts_from_permutation(pu.inverse().compose(as_permutation(tn[v])))
              .has_value();
      CHECK(edge == g.adjacent(u, v));
    }
  }
}

TEST_CASE("left and right bt graphs are isomorphic under inversion") {
  for (int n = 4; n <= 6; ++n) {
    const Graph gr = build_bt_graph(n, Convention::right);
    const Graph gl = build_bt_graph(n, Convention::left);
    const auto tn = enumerate_tn(n);
    std::vector<int> inv_map(tn.size());
    for (std::size_t v = 0; v < tn.size(); ++v) {
      inv_map[v] = bt_vertex_index(invert_cuts(tn[v]));
    }
    for (std::size_t u = 0; u < tn.size(); ++u) {
      for (int w : gl.adj[u]) {
        CHECK(gr.adjacent(inv_map[u], inv_map[w]));
      }
      CHECK(gl.adj[u].size() == gr.adj[inv_map[u]].size());
    }
  }
}

TEST_CASE("vertex index matches the enumeration order") {
  for (int n = 2; n <= 9; ++n) {
    const auto tn = enumerate_tn(n);
    for (std::size_t v = 0; v < tn.size(); ++v) {
      CHECK(bt_vertex_index(tn[v]) == static_cast<int>(v));
    }
  }
}

TEST_CASE("cayley graph construction") {
  const Graph g3 = build_cayley(3);
  CHECK(g3.vertex_count() == 6);
  CHECK(is_k_regular(g3, 4));
  const Graph g4 = build_cayley(4);
  CHECK(g4.vertex_count() == 24);
  CHECK(is_k_regular(g4, 10));
  CHECK_THROWS_AS(build_cayley(8), std::invalid_argument);  // default guard
}

TEST_CASE("left and right cayley graphs are isomorphic under inversion") {
  for (int n = 3; n <= 4; ++n) {
    CayleyOptions lo, ro;
    lo.conv = Convention::left;
    ro.conv = Convention::right;
    const Graph gl = build_cayley(n, lo);
    const Graph gr = build_cayley(n, ro);
    const std::uint64_t nf = factorial(n);
    for (std::uint64_t u = 0; u < nf; ++u) {
      const int iu = static_cast<int>(lex_rank(lex_unrank(n, u).inverse()));
      for (int w : gl.adj[u]) {
        const int iw = static_cast<int>(lex_rank(lex_unrank(n, w).inverse()));
        CHECK(gr.adjacent(iu, iw));
      }
    }
  }
}

TEST_CASE("bipartite cross degrees") {
  const int n = 6;
  const Graph g = build_bt_graph(n);
  const auto bs = class_vertices(n, PartitionClass::B);
  const auto ls = class_vertices(n, PartitionClass::L);
  const auto fs = class_vertices(n, PartitionClass::F);
  const auto ss = class_vertices(n, PartitionClass::S);
  std::vector<int> lf = ls;
  lf.insert(lf.end(), fs.begin(), fs.end());

  const auto d1 = bipartite_degrees(g, lf, bs);
  for (int d : d1.deg_a) CHECK(d == 1);
  for (int d : d1.deg_b) CHECK(d == n - 2);

  const auto d2 = bipartite_degrees(g, ls, fs);
  for (int d : d2.deg_a) CHECK(d == 1);
  for (int d : d2.deg_b) CHECK(d == 1);

  for (int m = 5; m <= 7; ++m) {
    const Graph gm = build_bt_graph(m);
    const auto d3 = bipartite_degrees(gm, class_vertices(m, PartitionClass::B),
                                      class_vertices(m, PartitionClass::S));
    for (int d : d3.deg_a) CHECK(d == 0);
    for (int d : d3.deg_b) CHECK(d == 0);
  }

  CHECK_THROWS_AS(bipartite_degrees(g, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("maximal 2-cliques") {
  CHECK(maximal_two_cliques(k4()).empty());

  const int n = 5;
  const Graph g = build_bt_graph(n);
  const auto found = maximal_two_cliques(g);
  CHECK(found.size() == 6);
  std::set<std::pair<int, int>> expected;
  for (const CliqueEdge& e : expected_em_edges(n)) {
    const int u = bt_vertex_index(e.a), v = bt_vertex_index(e.b);
    expected.insert({std::min(u, v), std::max(u, v)});
  }
  CHECK(std::set<std::pair<int, int>>(found.begin(), found.end()) == expected);

  CHECK(maximal_two_cliques(build_bt_graph(8)).size() == 9);
}

TEST_CASE("expected clique edges") {
  const auto em5 = expected_em_edges(5);
  REQUIRE(em5.size() == 6);
  CHECK(em5[4].a == Cuts(5, 1, 4, 5));
  CHECK(em5[4].b == Cuts(5, 0, 1, 4));
  CHECK(em5[5].a == Cuts(5, 0, 2, 5));
  CHECK(em5[5].b == Cuts(5, 1, 2, 5));
  for (int m = 0; m <= 2; ++m) CHECK(invert_cuts(em5[m].a) == em5[m].b);
  CHECK_THROWS_AS(expected_em_edges(3), std::invalid_argument);
}

TEST_CASE("em edges at n=4 are still maximal 2-cliques") {
  const Graph g = build_bt_graph(4);
  const auto found = maximal_two_cliques(g);
  const std::set<std::pair<int, int>> fs(found.begin(), found.end());
  std::set<std::pair<int, int>> em;
  for (const CliqueEdge& e : expected_em_edges(4)) {
    const int u = bt_vertex_index(e.a), v = bt_vertex_index(e.b);
    em.insert({std::min(u, v), std::max(u, v)});
  }
  CHECK(em.size() == 5);  // not pairwise disjoint, and only 5 distinct edges
  CHECK(fs == em);
}

TEST_CASE("vertex set V") {
  CHECK(vertex_set_V(5).size() == 12);
  CHECK(vertex_set_V(8).size() == 18);
  CHECK(vertex_set_V(4).size() == 5);  // endpoints collapse at n=4
}

TEST_CASE("induced subgraph on V") {
  for (int n : {6, 8}) {
    const Graph g = build_bt_graph(n);
    std::vector<int> vidx;
    for (const Cuts& c : vertex_set_V(n)) vidx.push_back(bt_vertex_index(c));
    const Graph gv = induced(g, vidx);
    CHECK(gv.vertex_count() == 2 * (n + 1));
    CHECK(is_k_regular(gv, 3));
    CHECK(gv.legend.front() == g.legend[vidx.front()]);
  }
  const Graph g = build_bt_graph(4);
  CHECK_THROWS_AS(induced(g, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced(g, {99}), std::invalid_argument);
}

TEST_CASE("hamiltonian cycle on V") {
  CHECK_THROWS_AS(hamiltonian_cycle_V(4), std::invalid_argument);

  const auto c5 = hamiltonian_cycle_V(5);
  REQUIRE(c5.size() == 12);
  CHECK(c5[0] == Cuts(5, 0, 2, 3));
  CHECK(c5[1] == Cuts(5, 0, 1, 3));
  CHECK(c5[2] == Cuts(5, 1, 3, 4));
  CHECK(c5[3] == Cuts(5, 1, 2, 4));

  for (int n : {5, 6, 8}) {
    const Graph g = build_bt_graph(n);
    const auto cycle = hamiltonian_cycle_V(n);
    const auto vset = vertex_set_V(n);
    CHECK(cycle.size() == 2 * (n + 1));
    CHECK(std::set<Cuts>(cycle.begin(), cycle.end()) ==
          std::set<Cuts>(vset.begin(), vset.end()));
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const int u = bt_vertex_index(cycle[t]);
      const int v = bt_vertex_index(cycle[(t + 1) % cycle.size()]);
      CHECK(g.adjacent(u, v));
    }
  }
}

TEST_CASE("two-block product identities") {
  // sigma(i,j,n) = sigma(0,j,n) o sigma(0,n-j,n-j+i), and friends
  for (int n = 4; n <= 8; ++n) {
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 1; ++j) {
        CHECK(as_permutation(Cuts(n, i, j, n)) ==
              compose(as_permutation(Cuts(n, 0, j, n)),
                      as_permutation(Cuts(n, 0, n - j, n - j + i))));
        CHECK(as_permutation(Cuts(n, i, j, n)) ==
              compose(as_permutation(Cuts(n, 0, i, j)),
                      as_permutation(Cuts(n, 0, j - i, n))));
      }
    for (int j = 2; j <= n - 1; ++j)
      for (int i = 1; i < j; ++i) {
        CHECK(as_permutation(Cuts(n, 0, j, n)) ==
              compose(as_permutation(Cuts(n, i, j, n)),
                      as_permutation(Cuts(n, 0, i, n - j + i))));
      }
    for (int j = 1; j <= n - 2; ++j)
      for (int i = 1; i + j <= n - 1; ++i) {
        CHECK(as_permutation(Cuts(n, 0, j, n)) ==
              compose(as_permutation(Cuts(n, 0, j, j + i)),
                      as_permutation(Cuts(n, i, j + i, n))));
      }
  }
}

TEST_CASE("shared cut points give edges") {
  // five families of guaranteed adjacencies in the bt graph
  for (int n = 4; n <= 7; ++n) {
    const Graph g = build_bt_graph(n);
    auto edge = [&](const Cuts& a, const Cuts& b) {
      return g.adjacent(bt_vertex_index(a), bt_vertex_index(b));
    };
    for (const Cuts& c : enumerate_tn(n)) {
      // (i) same (i,j)
      for (int k2 = c.j + 1; k2 <= n; ++k2) {
        if (k2 != c.k) CHECK(edge(c, Cuts(n, c.i, c.j, k2)));
      }
      // (ii) (i',j') = (j,k), k < k'
      for (int k2 = c.k + 1; k2 <= n; ++k2) CHECK(edge(c, Cuts(n, c.j, c.k, k2)));
      // (iii) same (j,k)
      for (int i2 = 0; i2 < c.j; ++i2) {
        if (i2 != c.i) CHECK(edge(c, Cuts(n, i2, c.j, c.k)));
      }
      // (iv) (j',k') = (i,j), i' < i
      for (int i2 = 0; i2 < c.i; ++i2) CHECK(edge(c, Cuts(n, i2, c.i, c.j)));
      // (v) same (i,k)
      for (int j2 = c.i + 1; j2 < c.k; ++j2) {
        if (j2 != c.j) CHECK(edge(c, Cuts(n, c.i, j2, c.k)));
      }
    }
  }
}

TEST_CASE("graph export formats") {
  const Graph g = make_graph(3, {{0, 1}, {1, 2}}, {"x", "y", "z"});
  std::ostringstream edges, dot, json;
  export_graph(g, ExportFormat::edges, edges);
  CHECK(edges.str() ==
        "# legend: 0 x\n# legend: 1 y\n# legend: 2 z\n0 1\n1 2\n");
  export_graph(g, ExportFormat::dot, dot);
  CHECK(dot.str() ==
        "graph G {\n  0 [label=\"x\"];\n  1 [label=\"y\"];\n  2 [label=\"z\"];\n"
        "  0 -- 1;\n  1 -- 2;\n}\n");
  export_graph(g, ExportFormat::json, json);
  CHECK(json.str().front() == '{');
  CHECK(json.str().back() == '\n');
  CHECK(json.str().find("\"vertices\"") != std::string::npos);

  // deterministic output
  std::ostringstream again;
  export_graph(g, ExportFormat::edges, again);
  CHECK(again.str() == edges.str());
}

TEST_CASE("bt graph edge export size") {
  const Graph g = build_bt_graph(5);
  std::ostringstream os;
  export_graph(g, ExportFormat::edges, os);
  std::istringstream is(os.str());
  std::string line;
  int legend = 0, edges = 0;
  while (std::getline(is, line)) {
    if (line.rfind("# legend:", 0) == 0) ++legend;
    else ++edges;
  }
  CHECK(legend == 20);
  CHECK(edges == 60);
}
