#include "bt/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "bt/aut.hpp"
#include "bt/bt_graphs.hpp"
#include "bt/cuts.hpp"
#include "bt/graph.hpp"
#include "bt/perm.hpp"
#include "bt/sortdist.hpp"
#include "bt/toric.hpp"

namespace bt {

namespace {

std::string ntag(int n) { return "(n=" + std::to_string(n) + ")"; }

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "partition") return Suite::partition;
  if (name == "toric") return Suite::toric;
  if (name == "regularity") return Suite::regularity;
  if (name == "bipartite") return Suite::bipartite;
  if (name == "cliques") return Suite::cliques;
  if (name == "hamiltonian") return Suite::hamiltonian;
  if (name == "aut_bt") return Suite::aut_bt;
  if (name == "dihedral_regular_on_V") return Suite::dihedral_regular_on_V;
  if (name == "phi") return Suite::phi;
  if (name == "n_trivial") return Suite::n_trivial;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::vector<std::string> suite_names() {
  return {"partition",  "toric", "regularity", "bipartite", "cliques",
          "hamiltonian", "aut_bt", "dihedral_regular_on_V", "phi",
          "n_trivial",  "all"};
}

Report check_partition(int n) {
  Report r;
  const auto tn = enumerate_tn(n);
  r.add_count("tn_size" + ntag(n), tn_size(n), tn.size());
  r.add_bool("tn_lex_sorted_unique" + ntag(n),
             std::is_sorted(tn.begin(), tn.end()) &&
                 std::adjacent_find(tn.begin(), tn.end()) == tn.end());
  std::map<PartitionClass, std::uint64_t> sizes;
  for (const Cuts& c : tn) ++sizes[classify(c)];
  const std::uint64_t nn = n;
  r.add_count("class_size_B" + ntag(n), nn - 1, sizes[PartitionClass::B]);
  r.add_count("class_size_L" + ntag(n), (nn - 1) * (nn - 2) / 2,
              sizes[PartitionClass::L]);
  r.add_count("class_size_F" + ntag(n), (nn - 1) * (nn - 2) / 2,
              sizes[PartitionClass::F]);
  r.add_count("class_size_S" + ntag(n), (nn - 1) * (nn - 2) * (nn - 3) / 6,
              sizes[PartitionClass::S]);
  return r;
}

Report check_toric_algebra(int n, const VerifyOptions& opts) {
  if (n < 2) throw std::invalid_argument("check_toric_algebra: need n >= 2");
  Report r;
  const int m = n + 1;
  const bool exhaustive = n <= 5;
  const std::uint64_t nf = factorial(n);

  std::uint64_t eq7_eq9_bad = 0, compose_bad = 0, eq13_bad = 0;
  std::uint64_t mat_i_bad = 0, mat_ii_bad = 0, inv_bad = 0, fbar_bad = 0;
  std::uint64_t singles = 0, pairs = 0;

  auto check_single = [&](const Perm& p) {
    ++singles;
    const ZPerm zp = extend_zero(p);
    const Perm pinv = p.inverse();
    for (int rr = 0; rr < m; ++rr) {
      const Perm fr = toric_map(p, rr);
      if (fr != toric_map_by_shift(p, rr)) ++eq7_eq9_bad;
      for (int s = 0; s < m; ++s) {
        if (toric_map(fr, s) != toric_map(p, (s + rr) % m)) ++compose_bad;
      }
      if (reverse_map(toric_map(reverse_map(p), rr)) != toric_map(p, (m - rr) % m)) {
        ++eq13_bad;
      }
      if (fr.inverse() != toric_map(pinv, zp.of0(rr))) ++inv_bad;
    }
    // fbar(pi) = f_{(pi^-1)_1}(pi)
    if (toric_map_right(p, 1) != toric_map(p, pinv.of(1))) ++fbar_bad;
  };
  auto check_pair = [&](const Perm& rho, const Perm& pi) {
    ++pairs;
    const ZPerm zpi = extend_zero(pi);
    for (int rr = 0; rr < m; ++rr) {
      if (toric_map(rho.compose(pi), rr) !=
          toric_map(rho, zpi.of0(rr)).compose(toric_map(pi, rr))) {
        ++mat_i_bad;
      }
    }
    if (reverse_map(rho.compose(pi)) != reverse_map(rho).compose(reverse_map(pi))) {
      ++mat_ii_bad;
    }
  };

  if (exhaustive) {
    for (std::uint64_t a = 0; a < nf; ++a) check_single(lex_unrank(n, a));
    for (std::uint64_t a = 0; a < nf; ++a) {
      const Perm rho = lex_unrank(n, a);
      for (std::uint64_t b = 0; b < nf; ++b) check_pair(rho, lex_unrank(n, b));
    }
  } else {
    SplitMix rng{opts.seed + static_cast<std::uint64_t>(n)};
    for (int s = 0; s < opts.samples; ++s) {
      check_single(lex_unrank(n, rng.below(nf)));
      check_pair(lex_unrank(n, rng.below(nf)), lex_unrank(n, rng.below(nf)));
    }
  }

  const std::string mode =
      exhaustive ? "[exhaustive]" : "[samples=" + std::to_string(opts.samples) + "]";
  r.add_count("toric_eq7_vs_eq9_mismatches" + ntag(n) + mode, 0, eq7_eq9_bad);
  r.add_count("toric_f_compose_mismatches" + ntag(n) + mode, 0, compose_bad);
  r.add_count("toric_gfg_conjugation_mismatches" + ntag(n) + mode, 0, eq13_bad);
  r.add_count("toric_inverse_relation_mismatches" + ntag(n) + mode, 0, inv_bad);
  r.add_count("toric_fbar_relation_mismatches" + ntag(n) + mode, 0, fbar_bad);
  r.add_count("toric_product_rule_f_mismatches" + ntag(n) + mode, 0, mat_i_bad);
  r.add_count("toric_product_rule_g_mismatches" + ntag(n) + mode, 0, mat_ii_bad);
  return r;
}

Report check_act_on_cuts(int n) {
  Report r;
  const auto tn = enumerate_tn(n);
  for (const Convention conv : {Convention::left, Convention::right}) {
    std::uint64_t bad = 0, off_tn = 0;
    for (const ToricReverseElement& e : toric_reverse_group(n, conv)) {
      for (const Cuts& c : tn) {
        const auto decoded = cuts_from_permutation(apply(e, as_permutation(c)));
        if (!decoded) {
          ++off_tn;
          continue;
        }
        if (*decoded != act_on_cuts(e, c)) ++bad;
      }
    }
    const std::string side = conv == Convention::left ? "left" : "right";
    r.add_count("tn_invariant_" + side + ntag(n), 0, off_tn);
    r.add_count("act_on_cuts_matches_action_" + side + ntag(n), 0, bad);
  }

  // closed forms for iterated fbar on the L-class representatives
  auto fbar_pow = [&](const Cuts& c, int e) {
    return act_on_cuts(ToricReverseElement(n, e, false, Convention::right), c);
  };
  std::uint64_t eq_bad = 0, eq_total = 0;
  for (int j = 3; j <= n - 1; ++j)
    for (int k = j + 1; k <= n; ++k) {
      ++eq_total;
      if (fbar_pow(Cuts(n, 0, j, k), 2) != Cuts(n, j - 2, k - 2, n - 1)) ++eq_bad;
    }
  for (int k = 4; k <= n; ++k) {
    ++eq_total;
    if (fbar_pow(Cuts(n, 0, 1, k), 3) != Cuts(n, k - 3, n - 2, n - 1)) ++eq_bad;
  }
  if (n >= 3) {
    ++eq_total;
    if (fbar_pow(Cuts(n, 0, 1, 2), 4) != Cuts(n, n - 3, n - 2, n - 1)) ++eq_bad;
  }
  if (n >= 4) {
    ++eq_total;
    if (fbar_pow(Cuts(n, 0, 1, 3), 5) != Cuts(n, n - 4, n - 3, n - 1)) ++eq_bad;
    ++eq_total;
    if (fbar_pow(Cuts(n, 0, 2, 3), 5) != Cuts(n, n - 4, n - 2, n - 1)) ++eq_bad;
  }
  for (int k = 5; k <= n; ++k) {
    ++eq_total;
    if (fbar_pow(Cuts(n, 0, 2, k), 4) != Cuts(n, k - 4, n - 3, n - 1)) ++eq_bad;
  }
  if (n >= 5) {
    ++eq_total;
    if (fbar_pow(Cuts(n, 0, 2, 4), 6) != Cuts(n, n - 5, n - 3, n - 1)) ++eq_bad;
  }
  r.add_count("fbar_iterate_closed_forms" + ntag(n) + "[cases=" +
                  std::to_string(eq_total) + "]",
              0, eq_bad);
  return r;
}

Report check_regularity(int n) {
  if (n < 4) throw std::invalid_argument("check_regularity: need n >= 4");
  Report r;
  const Graph g = build_bt_graph(n);
  r.add_count("bt_graph_vertex_count" + ntag(n), tn_size(n), g.vertex_count());
  const int expected_degree = n == 4 ? 3 : 2 * (n - 2);
  const auto degs = degree_report(g);
  const bool regular = degs.front() == degs.back();
  const std::string got = regular
                              ? "all=" + std::to_string(degs.front())
                              : "mixed(min=" + std::to_string(degs.front()) +
                                    ",max=" + std::to_string(degs.back()) + ")";
  r.add("bt_graph_regular" + ntag(n), "all=" + std::to_string(expected_degree), got);
  return r;
}

Report check_bipartite(int n) {
  if (n < 5) throw std::invalid_argument("check_bipartite: need n >= 5");
  Report r;
  const Graph g = build_bt_graph(n);
  const auto bs = class_vertices(n, PartitionClass::B);
  const auto ls = class_vertices(n, PartitionClass::L);
  const auto fs = class_vertices(n, PartitionClass::F);
  const auto ss = class_vertices(n, PartitionClass::S);

  std::vector<int> lf = ls;
  lf.insert(lf.end(), fs.begin(), fs.end());
  const auto d1 = bipartite_degrees(g, lf, bs);
  r.add_count("bip_LF_to_B_not_degree_1" + ntag(n), 0,
              std::count_if(d1.deg_a.begin(), d1.deg_a.end(),
                            [](int d) { return d != 1; }));
  r.add_count("bip_B_to_LF_not_degree_n_minus_2" + ntag(n), 0,
              std::count_if(d1.deg_b.begin(), d1.deg_b.end(),
                            [n](int d) { return d != n - 2; }));

  const auto d2 = bipartite_degrees(g, ls, fs);
  const auto not1 = [](int d) { return d != 1; };
  r.add_count("bip_L_F_not_biregular_1_1" + ntag(n), 0,
              std::count_if(d2.deg_a.begin(), d2.deg_a.end(), not1) +
                  std::count_if(d2.deg_b.begin(), d2.deg_b.end(), not1));

  const auto d3 = bipartite_degrees(g, bs, ss);
  std::uint64_t bs_edges = 0;
  for (int d : d3.deg_a) bs_edges += d;
  r.add_count("bip_B_S_cross_edges" + ntag(n), 0, bs_edges);
  return r;
}

Report check_cliques(int n) {
  if (n < 5) throw std::invalid_argument("check_cliques: need n >= 5");
  Report r;
  const Graph g = build_bt_graph(n);
  const auto found = maximal_two_cliques(g);
  r.add_count("max_2_clique_count" + ntag(n), n + 1, found.size());

  const auto em = expected_em_edges(n);
  std::set<std::pair<int, int>> expected_set;
  for (const CliqueEdge& e : em) {
    int u = bt_vertex_index(e.a), v = bt_vertex_index(e.b);
    expected_set.insert({std::min(u, v), std::max(u, v)});
  }
  r.add_bool("max_2_cliques_equal_em" + ntag(n),
             std::set<std::pair<int, int>>(found.begin(), found.end()) ==
                 expected_set);

  std::set<Cuts> endpoints;
  for (const CliqueEdge& e : em) {
    endpoints.insert(e.a);
    endpoints.insert(e.b);
  }
  r.add_count("em_endpoints_distinct" + ntag(n), 2 * (n + 1), endpoints.size());

  std::uint64_t not_inverse = 0;
  for (const CliqueEdge& e : em) {
    if (e.m <= n - 3 && invert_cuts(e.a) != e.b) ++not_inverse;
  }
  r.add_count("lambda_endpoints_not_mutual_inverses" + ntag(n), 0, not_inverse);

  // fbar rotates the clique edges as (e_n, e_{n-1}, ..., e_0)
  const ToricReverseElement fbar(n, 1, false, Convention::right);
  auto edge_key = [](const Cuts& a, const Cuts& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  std::map<std::pair<Cuts, Cuts>, int> edge_index;
  for (const CliqueEdge& e : em) edge_index[edge_key(e.a, e.b)] = e.m;
  std::uint64_t cycle_bad = 0;
  for (const CliqueEdge& e : em) {
    const auto img = edge_key(act_on_cuts(fbar, e.a), act_on_cuts(fbar, e.b));
    const auto it = edge_index.find(img);
    if (it == edge_index.end() || it->second != (e.m + n) % (n + 1)) ++cycle_bad;
  }
  r.add_count("fbar_em_cycle_mismatches" + ntag(n), 0, cycle_bad);

  // B is a clique and the endpoints of its edges have no common neighbor
  // outside B
  const auto bs = class_vertices(n, PartitionClass::B);
  std::vector<char> in_b(g.vertex_count(), 0);
  for (int v : bs) in_b[v] = 1;
  bool b_clique = true;
  std::uint64_t outside_common = 0;
  for (std::size_t x = 0; x < bs.size(); ++x) {
    for (std::size_t y = x + 1; y < bs.size(); ++y) {
      if (!g.adjacent(bs[x], bs[y])) { b_clique = false; continue; }
      for (int w : g.adj[bs[x]]) {
        if (!in_b[w] && g.adjacent(w, bs[y])) ++outside_common;
      }
    }
  }
  r.add_bool("b_is_clique" + ntag(n), b_clique);
  r.add_count("b_edge_common_neighbors_outside_B" + ntag(n), 0, outside_common);

  // the reverse map swaps L and F and preserves B and S
  const ToricReverseElement gmap(n, 0, true, Convention::right);
  std::uint64_t class_bad = 0;
  for (const Cuts& c : enumerate_tn(n)) {
    const PartitionClass from = classify(c);
    const PartitionClass to = classify(act_on_cuts(gmap, c));
    PartitionClass want = from;
    if (from == PartitionClass::L) want = PartitionClass::F;
    if (from == PartitionClass::F) want = PartitionClass::L;
    if (to != want) ++class_bad;
  }
  r.add_count("reverse_map_class_action_mismatches" + ntag(n), 0, class_bad);
  return r;
}

Report check_hamiltonian(int n) {
  if (n < 5) throw std::invalid_argument("check_hamiltonian: need n >= 5");
  Report r;
  const Graph g = build_bt_graph(n);
  const auto vset = vertex_set_V(n);
  r.add_count("v_size" + ntag(n), 2 * (n + 1), vset.size());

  std::vector<int> vidx;
  for (const Cuts& c : vset) vidx.push_back(bt_vertex_index(c));
  const Graph gv = induced(g, vidx);
  const auto degs = degree_report(gv);
  const std::string got =
      degs.front() == degs.back() ? "all=" + std::to_string(degs.front())
                                  : "mixed";
  r.add("gamma_v_3_regular" + ntag(n), "all=3", got);

  const auto cycle = hamiltonian_cycle_V(n);
  r.add_count("ham_cycle_length" + ntag(n), 2 * (n + 1), cycle.size());
  const std::set<Cuts> cycle_set(cycle.begin(), cycle.end());
  r.add_bool("ham_cycle_visits_each_V_vertex_once" + ntag(n),
             cycle_set.size() == cycle.size() &&
                 cycle_set == std::set<Cuts>(vset.begin(), vset.end()));
  std::uint64_t non_edges = 0;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const int u = bt_vertex_index(cycle[t]);
    const int v = bt_vertex_index(cycle[(t + 1) % cycle.size()]);
    if (!g.adjacent(u, v)) ++non_edges;
  }
  r.add_count("ham_cycle_non_edges" + ntag(n), 0, non_edges);
  return r;
}

Report check_dihedral_regular_on_v(int n) {
  if (n < 5) {
    throw std::invalid_argument("check_dihedral_regular_on_v: need n >= 5");
  }
  Report r;
  const auto vset = vertex_set_V(n);
  const auto group = toric_reverse_group(n, Convention::right);
  r.add_count("dihedral_order" + ntag(n), 2 * (n + 1), group.size());

  std::uint64_t off_v = 0;
  const std::set<Cuts> vs(vset.begin(), vset.end());
  for (const ToricReverseElement& e : group) {
    for (const Cuts& c : vset) {
      if (!vs.count(act_on_cuts(e, c))) ++off_v;
    }
  }
  r.add_count("dihedral_preserves_V_violations" + ntag(n), 0, off_v);

  std::set<Cuts> orbit;
  for (const ToricReverseElement& e : group) orbit.insert(act_on_cuts(e, vset[0]));
  r.add_bool("dihedral_transitive_on_V" + ntag(n), orbit == vs);

  std::uint64_t nontrivial_fixers = 0;
  for (const Cuts& c : vset) {
    for (const ToricReverseElement& e : group) {
      if (!e.is_identity() && act_on_cuts(e, c) == c) ++nontrivial_fixers;
    }
  }
  r.add_count("dihedral_point_stabilizers_nontrivial" + ntag(n), 0,
              nontrivial_fixers);
  return r;
}

Report check_distance_oracle(int n) {
  if (n < 2 || n > 7) {
    throw std::invalid_argument("check_distance_oracle: need 2 <= n <= 7");
  }
  Report r;
  const auto table = distance_table(n);
  const std::uint64_t nf = factorial(n);

  std::uint64_t gen_bad = 0, dihedral_bad = 0, inverse_bad = 0;
  for (std::uint64_t rank = 0; rank < nf; ++rank) {
    const Perm p = lex_unrank(n, rank);
    const bool is_bt = cuts_from_permutation(p).has_value();
    if ((table[rank] == 1) != is_bt) ++gen_bad;
    if (table[lex_rank(p.inverse())] != table[rank]) ++inverse_bad;
  }
  r.add_count("distance_1_iff_block_transposition" + ntag(n), 0, gen_bad);
  r.add_count("distance_inverse_invariance_violations" + ntag(n), 0, inverse_bad);

  const auto group = toric_reverse_group(n, Convention::right);
  for (std::uint64_t rank = 0; rank < nf; ++rank) {
    const Perm p = lex_unrank(n, rank);
    for (const ToricReverseElement& e : group) {
      if (table[lex_rank(apply(e, p))] != table[rank]) ++dihedral_bad;
    }
  }
  r.add_count("distance_dihedral_invariance_violations" + ntag(n), 0, dihedral_bad);
  return r;
}

Report run_suite(Suite s, int n, const VerifyOptions& opts) {
  Report r;
  switch (s) {
    case Suite::partition:
      return check_partition(n);
    case Suite::toric:
      r.append(check_toric_algebra(n, opts));
      r.append(check_act_on_cuts(n));
      return r;
    case Suite::regularity:
      return check_regularity(n);
    case Suite::bipartite:
      return check_bipartite(n);
    case Suite::cliques:
      return check_cliques(n);
    case Suite::hamiltonian:
      return check_hamiltonian(n);
    case Suite::aut_bt:
      return check_theorem_aut_bt(n);
    case Suite::dihedral_regular_on_V:
      return check_dihedral_regular_on_v(n);
    case Suite::phi:
      return phi_check(n, opts.seed);
    case Suite::n_trivial:
      return check_n_trivial(n, opts.max_cayley_n);
    case Suite::all: {
      r.append(check_partition(n));
      r.append(check_toric_algebra(n, opts));
      r.append(check_act_on_cuts(n));
      if (n >= 4) r.append(check_regularity(n));
      if (n >= 5) {
        r.append(check_bipartite(n));
        r.append(check_cliques(n));
        r.append(check_hamiltonian(n));
        r.append(check_dihedral_regular_on_v(n));
      }
      if (n >= 4) r.append(check_theorem_aut_bt(n));
      if (n >= 2 && n <= 6) r.append(phi_check(n, opts.seed));
      if (n <= opts.max_cayley_n) r.append(check_n_trivial(n, opts.max_cayley_n));
      if (n <= 7) r.append(check_distance_oracle(n));
      return r;
    }
  }
  throw std::logic_error("run_suite: unknown suite");
}

}  // namespace bt
