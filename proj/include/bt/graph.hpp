#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bt {

/// Undirected simple graph with sorted adjacency lists and a legend
/// mapping each vertex index to a domain label. Immutable once built.
struct Graph {
  int n = 0;  // degree parameter the graph was built from, 0 if not applicable
  std::vector<std::vector<int>> adj;
  std::vector<std::string> legend;

  int vertex_count() const { return static_cast<int>(adj.size()); }
  std::size_t edge_count() const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// Builds a graph from an edge list; validates no loops, dedups edges,
/// sorts adjacency, and checks the legend is injective.
Graph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                 std::vector<std::string> legend);

/// Sorted multiset of vertex degrees.
std::vector<int> degree_report(const Graph& g);
bool is_k_regular(const Graph& g, int k);

struct BipartiteDegrees {
  std::vector<int> deg_a;  // cross-degrees of part A, in input order
  std::vector<int> deg_b;
};

/// Cross-degrees between two disjoint vertex subsets; counts only edges
/// with one endpoint in each part.
BipartiteDegrees bipartite_degrees(const Graph& g, const std::vector<int>& part_a,
                                   const std::vector<int>& part_b);

/// All edges {u,v} whose endpoints have no common neighbor, i.e. the
/// edges of maximal cliques of size 2. Sorted with u < v.
std::vector<std::pair<int, int>> maximal_two_cliques(const Graph& g);

/// Induced subgraph on the given vertices (in the given order); the
/// legend is carried over.
Graph induced(const Graph& g, const std::vector<int>& verts);

enum class ExportFormat { edges, dot, json };

/// Deterministic text export. All formats end with a newline; vertex
/// indices are 0-based into the legend.
void export_graph(const Graph& g, ExportFormat fmt, std::ostream& os);

}  // namespace bt
