#pragma once

#include <vector>

#include "bt/cuts.hpp"
#include "bt/graph.hpp"
#include "bt/toric.hpp"

namespace bt {

/// Block transposition graph on vertex-set T_n (lexicographic cut order):
/// right convention joins u,v when u^-1 o v is a block transposition,
/// left convention when v o u^-1 is. The two are isomorphic under
/// inversion; right is the default everywhere.
Graph build_bt_graph(int n, Convention conv = Convention::right);

/// Index of a cut triple in the lexicographic vertex order of T_n.
int bt_vertex_index(const Cuts& c);

struct CayleyOptions {
  Convention conv = Convention::right;
  int max_n = 7;  // memory guard; n = 8 and beyond are opt-in
  int threads = 0;  // 0 = use the process-wide default
};

/// Cayley graph of Sym_n with connection set T_n; vertices in
/// lexicographic rank order.
Graph build_cayley(int n, const CayleyOptions& opts = {});

/// One of the n+1 pairwise-disjoint edges of maximal 2-cliques:
/// e_m = {sigma(m,m+1,m+3), sigma(m,m+2,m+3)} for m <= n-3, plus the
/// three exceptional edges e_{n-2}, e_{n-1}, e_n.
struct CliqueEdge {
  int m;
  Cuts a, b;
};

/// The closed-form list e_0,...,e_n; n >= 4. For n >= 5 the endpoints are
/// pairwise distinct.
std::vector<CliqueEdge> expected_em_edges(int n);

/// Endpoints of the edges e_m, deduplicated, in lexicographic cut order.
std::vector<Cuts> vertex_set_V(int n);

/// The explicit Hamiltonian cycle of the induced graph on V, starting at
/// sigma(0,2,3); n >= 5. Consecutive cuts (cyclically) are adjacent in
/// the right-convention block transposition graph.
std::vector<Cuts> hamiltonian_cycle_V(int n);

/// Members of a partition class as vertex indices of build_bt_graph(n).
std::vector<int> class_vertices(int n, PartitionClass cls);

}  // namespace bt
