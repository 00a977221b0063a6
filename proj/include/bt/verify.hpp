#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bt/report.hpp"

namespace bt {

enum class Suite {
  partition,
  toric,
  regularity,
  bipartite,
  cliques,
  hamiltonian,
  aut_bt,
  dihedral_regular_on_V,
  phi,
  n_trivial,
  all,
};

std::optional<Suite> suite_from_name(const std::string& name);
std::vector<std::string> suite_names();

struct VerifyOptions {
  std::uint64_t seed = 0x5eedbead;
  int samples = 10000;    // toric algebra sampling for n >= 6
  int max_cayley_n = 6;   // n_trivial bound; 7 is opt-in
};

/// Individual check groups. Each returns machine-parsable claim lines and
/// never throws on a failed claim, only on out-of-bounds input.
Report check_partition(int n);
Report check_toric_algebra(int n, const VerifyOptions& opts = {});
Report check_act_on_cuts(int n);
Report check_regularity(int n);
Report check_bipartite(int n);
Report check_cliques(int n);
Report check_hamiltonian(int n);
Report check_dihedral_regular_on_v(int n);
Report check_distance_oracle(int n);

Report run_suite(Suite s, int n, const VerifyOptions& opts = {});

}  // namespace bt
