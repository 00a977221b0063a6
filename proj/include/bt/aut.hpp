#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bt/graph.hpp"
#include "bt/report.hpp"

namespace bt {

/// Candidate or confirmed graph automorphism: mapping[v] is the image of
/// vertex v.
using VertexMap = std::vector<int>;

struct GroupDescription {
  std::uint64_t order = 0;
  std::vector<VertexMap> generators;
  std::string notes;
};

struct AutOptions {
  /// Vertices every automorphism must fix pointwise.
  std::vector<int> fixed;
  int max_vertices = 100000;
};

/// All automorphisms of g (respecting opts.fixed), enumerated by
/// equitable-partition refinement plus backtracking, sorted
/// lexicographically. Exact and deterministic.
std::vector<VertexMap> all_automorphisms(const Graph& g, const AutOptions& opts = {});

/// Exact order (leaf count of the search) plus a greedy generating set.
GroupDescription automorphism_group(const Graph& g, const AutOptions& opts = {});

GroupDescription stabilizer_fixing(const Graph& g, const std::vector<int>& fixed);

/// Closure of a generating set under composition; for sanity checks.
std::uint64_t closure_order(const std::vector<VertexMap>& generators, int nverts);

/// The 2(n+1) dihedral elements as vertex maps of the block transposition
/// graph (right convention, lexicographic cut legend); each one is an
/// automorphism.
std::vector<VertexMap> dihedral_as_vertex_maps(int n);

/// Aut(bt graph) has order 2(n+1) and equals the dihedral image.
Report check_theorem_aut_bt(int n);

/// Pointwise stabilizer of {identity} + T_n in Aut(Cayley) is trivial;
/// the stabilizer of the identity alone has order 2(n+1) and equals the
/// dihedral image. For n = 4 the full automorphism group is also counted.
Report check_n_trivial(int n, int max_cayley_n = 7);

/// The map h o f^r -> [0 h^-1] o alpha^{n+1-r} is an isomorphism from the
/// translations-and-toric-maps group onto Sym([n]^0), and g o w is a
/// central involution outside it.
Report phi_check(int n, std::uint64_t seed = 0x5eedbead);

}  // namespace bt
