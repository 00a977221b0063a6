#include "bt/bt_graphs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bt/parallel.hpp"

namespace bt {

Graph build_bt_graph(int n, Convention conv) {
  const std::vector<Cuts> verts = enumerate_tn(n);
  const int count = static_cast<int>(verts.size());
  std::vector<Perm> perms, invs;
  perms.reserve(count);
  invs.reserve(count);
  for (const Cuts& c : verts) {
    perms.push_back(as_permutation(c));
    invs.push_back(perms.back().inverse());
  }
  Graph g;
  g.n = n;
  g.adj.assign(count, {});
  g.legend.reserve(count);
  for (const Cuts& c : verts) g.legend.push_back(to_string(c));
  parallel_for(count, 0, [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u) {
      for (int v = 0; v < count; ++v) {
        if (static_cast<int>(u) == v) continue;
        const Perm w = conv == Convention::right ? invs[u].compose(perms[v])
                                                 : perms[v].compose(invs[u]);
        if (cuts_from_permutation(w)) g.adj[u].push_back(v);
      }
    }
  });
  return g;
}

int bt_vertex_index(const Cuts& c) {
  // position of (i,j,k) in the lexicographic enumeration of triples
  // 0 <= i < j < k <= n
  auto c3 = [](long long m) { return m * (m - 1) * (m - 2) / 6; };
  auto c2 = [](long long m) { return m * (m - 1) / 2; };
  const long long total = c3(c.n + 1);
  long long after_i = c3(c.n + 1 - c.i);          // triples with first >= i
  long long idx = total - after_i;                 // triples with first < i
  idx += c2(c.n - c.i) - c2(c.n - c.j + 1);        // j' in (i, j)
  idx += c.k - c.j - 1;
  return static_cast<int>(idx);
}

Graph build_cayley(int n, const CayleyOptions& opts) {
  if (n < 2) throw std::invalid_argument("build_cayley: need n >= 2");
  if (n > opts.max_n) {
    std::ostringstream os;
    os << "build_cayley: n=" << n << " exceeds the memory guard (max_n="
       << opts.max_n << ")";
    throw std::invalid_argument(os.str());
  }
  const std::uint64_t count = factorial(n);
  const std::vector<Cuts> gens = enumerate_tn(n);
  Graph g;
  g.n = n;
  g.adj.assign(count, {});
  g.legend.resize(count);
  parallel_for(count, opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      const Perm p = lex_unrank(n, r);
      g.legend[r] = p.str();
      auto& nbrs = g.adj[r];
      nbrs.reserve(gens.size());
      for (const Cuts& c : gens) {
        const Perm q = opts.conv == Convention::right
                           ? apply_right(p, c)
                           : as_permutation(c).compose(p);
        nbrs.push_back(static_cast<int>(lex_rank(q)));
      }
      std::sort(nbrs.begin(), nbrs.end());
    }
  });
  return g;
}

std::vector<CliqueEdge> expected_em_edges(int n) {
  if (n < 4) throw std::invalid_argument("expected_em_edges: need n >= 4");
  std::vector<CliqueEdge> out;
  out.reserve(n + 1);
  for (int m = 0; m <= n - 3; ++m) {
    out.push_back({m, Cuts(n, m, m + 1, m + 3), Cuts(n, m, m + 2, m + 3)});
  }
  out.push_back({n - 2, Cuts(n, 0, n - 2, n - 1), Cuts(n, 0, n - 2, n)});
  out.push_back({n - 1, Cuts(n, 1, n - 1, n), Cuts(n, 0, 1, n - 1)});
  out.push_back({n, Cuts(n, 0, 2, n), Cuts(n, 1, 2, n)});
  return out;
}

std::vector<Cuts> vertex_set_V(int n) {
  std::vector<Cuts> out;
  for (const CliqueEdge& e : expected_em_edges(n)) {
    out.push_back(e.a);
    out.push_back(e.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cuts> hamiltonian_cycle_V(int n) {
  if (n < 5) throw std::invalid_argument("hamiltonian_cycle_V: need n >= 5");
  std::vector<Cuts> cycle;
  cycle.reserve(2 * (n + 1));
  // P: walks the Lambda edges e_0 .. e_{n-4}, ending at sigma(n-4,n-3,n-1)
  for (int l = 0; l <= n - 4; ++l) {
    cycle.emplace_back(n, l, l + 2, l + 3);
    cycle.emplace_back(n, l, l + 1, l + 3);
  }
  // P': picks up e_{n-3} and the three exceptional edges, closing at
  // sigma(0,2,3)
  cycle.emplace_back(n, n - 3, n - 1, n);
  cycle.emplace_back(n, n - 3, n - 2, n);
  cycle.emplace_back(n, 0, n - 2, n);
  cycle.emplace_back(n, 0, n - 2, n - 1);
  cycle.emplace_back(n, 0, 1, n - 1);
  cycle.emplace_back(n, 1, n - 1, n);
  cycle.emplace_back(n, 1, 2, n);
  cycle.emplace_back(n, 0, 2, n);
  return cycle;
}

std::vector<int> class_vertices(int n, PartitionClass cls) {
  std::vector<int> out;
  const std::vector<Cuts> verts = enumerate_tn(n);
  for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
    if (classify(verts[v]) == cls) out.push_back(v);
  }
  return out;
}

}  // namespace bt
