#pragma once

#include <cstdint>
#include <vector>

#include "bt/cuts.hpp"
#include "bt/perm.hpp"

namespace bt {

/// Witness for a distance value: applying the moves in order via
/// apply_right turns start into end (the identity).
struct SortingTrace {
  Perm start;
  std::vector<Cuts> moves;
  Perm end;
};

struct DistanceBounds {
  int single_pair_max_n = 9;  // bidirectional BFS
  int table_max_n = 7;        // full Sym_n table
};

/// Minimal number of block transpositions whose product is p; the word
/// metric of the Cayley graph. Bidirectional BFS.
int bt_distance(const Perm& p, const DistanceBounds& bounds = {});

/// Distance of every permutation of Sym_n from the identity, indexed by
/// lexicographic rank. Plain BFS over the whole group.
std::vector<std::uint8_t> distance_table(int n, int max_n = 7);

/// Shortest sorting sequence for p; ties broken by the lexicographically
/// smallest cut triple at every step.
SortingTrace sorting_sequence(const Perm& p, const DistanceBounds& bounds = {});

/// Lexicographically least image of p under the right-convention
/// toric-reverse group; distance from the identity is preserved.
Perm toric_reduce(const Perm& p);

}  // namespace bt
