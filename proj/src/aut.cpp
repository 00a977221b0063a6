#include "bt/aut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bt/bt_graphs.hpp"
#include "bt/cuts.hpp"
#include "bt/perm.hpp"
#include "bt/toric.hpp"

namespace bt {

namespace {

using ColorVec = std::vector<int>;

struct Sig {
  int color;
  std::vector<int> nbr;
  auto operator<=>(const Sig&) const = default;
};

void build_sigs(const Graph& g, const ColorVec& col, std::vector<Sig>& out) {
  const int nv = g.vertex_count();
  out.resize(nv);
  for (int v = 0; v < nv; ++v) {
    out[v].color = col[v];
    out[v].nbr.clear();
    out[v].nbr.reserve(g.adj[v].size());
    for (int w : g.adj[v]) out[v].nbr.push_back(col[w]);
    std::sort(out[v].nbr.begin(), out[v].nbr.end());
  }
}

// Refines both colorings to a common equitable fixpoint. Color ids are
// taken from the sorted set of signatures so both sides stay aligned.
// Returns the number of colors, or -1 when the signature multisets
// disagree (no automorphism can extend this branch).
int refine_pair(const Graph& g, ColorVec& ca, ColorVec& cb, int ncolors) {
  const int nv = g.vertex_count();
  std::vector<Sig> sa, sb, ua, ub;
  for (;;) {
    build_sigs(g, ca, sa);
    build_sigs(g, cb, sb);
    ua = sa;
    ub = sb;
    std::sort(ua.begin(), ua.end());
    std::sort(ub.begin(), ub.end());
    if (ua != ub) return -1;
    ua.erase(std::unique(ua.begin(), ua.end()), ua.end());
    const int newn = static_cast<int>(ua.size());
    for (int v = 0; v < nv; ++v) {
      ca[v] = static_cast<int>(
          std::lower_bound(ua.begin(), ua.end(), sa[v]) - ua.begin());
      cb[v] = static_cast<int>(
          std::lower_bound(ua.begin(), ua.end(), sb[v]) - ua.begin());
    }
    if (newn == ncolors) return ncolors;
    ncolors = newn;
  }
}

bool preserves_adjacency(const Graph& g, const VertexMap& m) {
  const int nv = g.vertex_count();
  std::vector<int> mapped;
  for (int v = 0; v < nv; ++v) {
    mapped.clear();
    mapped.reserve(g.adj[v].size());
    for (int w : g.adj[v]) mapped.push_back(m[w]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != g.adj[m[v]]) return false;
  }
  return true;
}

struct Searcher {
  const Graph& g;
  std::vector<VertexMap> solutions;

  void run(ColorVec ca, ColorVec cb, int ncolors) {
    const int nv = g.vertex_count();
    std::vector<int> size(ncolors, 0);
    for (int v = 0; v < nv; ++v) ++size[ca[v]];
    int target = -1;
    for (int c = 0; c < ncolors; ++c) {
      if (size[c] >= 2 && (target == -1 || size[c] < size[target])) target = c;
    }
    if (target == -1) {
      std::vector<int> pos(ncolors, -1);
      for (int v = 0; v < nv; ++v) pos[cb[v]] = v;
      VertexMap m(nv);
      for (int v = 0; v < nv; ++v) m[v] = pos[ca[v]];
      if (preserves_adjacency(g, m)) solutions.push_back(std::move(m));
      return;
    }
    int u = -1;
    for (int v = 0; v < nv; ++v) {
      if (ca[v] == target) { u = v; break; }
    }
    for (int v = 0; v < nv; ++v) {
      if (cb[v] != target) continue;
      ColorVec na = ca, nb = cb;
      na[u] = ncolors;
      nb[v] = ncolors;
      const int nc = refine_pair(g, na, nb, ncolors + 1);
      if (nc >= 0) run(std::move(na), std::move(nb), nc);
    }
  }
};

// Initial coloring: by degree, then one fresh color per fixed vertex.
std::pair<ColorVec, int> initial_coloring(const Graph& g,
                                          const std::vector<int>& fixed) {
  const int nv = g.vertex_count();
  std::vector<int> degs;
  degs.reserve(nv);
  for (int v = 0; v < nv; ++v) degs.push_back(g.degree(v));
  std::vector<int> uniq = degs;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  ColorVec col(nv);
  for (int v = 0; v < nv; ++v) {
    col[v] = static_cast<int>(
        std::lower_bound(uniq.begin(), uniq.end(), degs[v]) - uniq.begin());
  }
  int ncolors = static_cast<int>(uniq.size());
  for (int v : fixed) {
    if (v < 0 || v >= nv) throw std::invalid_argument("fixed vertex out of range");
    col[v] = ncolors++;
  }
  return {col, ncolors};
}

}  // namespace

std::vector<VertexMap> all_automorphisms(const Graph& g, const AutOptions& opts) {
  if (g.vertex_count() > opts.max_vertices) {
    throw std::invalid_argument("all_automorphisms: vertex bound exceeded");
  }
  if (g.vertex_count() == 0) return {VertexMap{}};
  auto [col, ncolors] = initial_coloring(g, opts.fixed);
  ColorVec ca = col, cb = col;
  const int nc = refine_pair(g, ca, cb, ncolors);
  Searcher s{g, {}};
  if (nc >= 0) s.run(std::move(ca), std::move(cb), nc);
  std::sort(s.solutions.begin(), s.solutions.end());
  return s.solutions;
}

namespace {

VertexMap compose_maps(const VertexMap& a, const VertexMap& b) {
  VertexMap out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[b[v]];
  return out;
}

std::set<VertexMap> close_under_products(const std::vector<VertexMap>& gens,
                                         int nverts) {
  VertexMap id(nverts);
  for (int v = 0; v < nverts; ++v) id[v] = v;
  std::set<VertexMap> seen{id};
  std::vector<VertexMap> frontier{id};
  while (!frontier.empty()) {
    std::vector<VertexMap> next;
    for (const auto& m : frontier) {
      for (const auto& gmap : gens) {
        VertexMap prod = compose_maps(gmap, m);
        if (seen.insert(prod).second) next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::uint64_t closure_order(const std::vector<VertexMap>& generators, int nverts) {
  return close_under_products(generators, nverts).size();
}

GroupDescription automorphism_group(const Graph& g, const AutOptions& opts) {
  const auto sols = all_automorphisms(g, opts);
  GroupDescription gd;
  gd.order = sols.size();
  const int nv = g.vertex_count();
  VertexMap id(nv);
  for (int v = 0; v < nv; ++v) id[v] = v;
  std::set<VertexMap> closure{id};
  for (const auto& m : sols) {
    if (closure.count(m)) continue;
    gd.generators.push_back(m);
    closure = close_under_products(gd.generators, nv);
  }
  gd.notes = "order from exhaustive leaf enumeration";
  return gd;
}

GroupDescription stabilizer_fixing(const Graph& g, const std::vector<int>& fixed) {
  AutOptions opts;
  opts.fixed = fixed;
  return automorphism_group(g, opts);
}

std::vector<VertexMap> dihedral_as_vertex_maps(int n) {
  if (n < 4) throw std::invalid_argument("dihedral_as_vertex_maps: need n >= 4");
  const std::vector<Cuts> verts = enumerate_tn(n);
  std::vector<VertexMap> out;
  for (const ToricReverseElement& e : toric_reverse_group(n, Convention::right)) {
    VertexMap m(verts.size());
    for (std::size_t v = 0; v < verts.size(); ++v) {
      m[v] = bt_vertex_index(act_on_cuts(e, verts[v]));
    }
    out.push_back(std::move(m));
  }
  return out;
}

Report check_theorem_aut_bt(int n) {
  Report r;
  const std::string tag = "(n=" + std::to_string(n) + ")";
  const Graph g = build_bt_graph(n);
  std::vector<VertexMap> dm = dihedral_as_vertex_maps(n);

  std::set<VertexMap> dset(dm.begin(), dm.end());
  r.add_count("dihedral_maps_distinct" + tag, 2 * (n + 1), dset.size());

  int good = 0;
  for (const auto& m : dm) good += preserves_adjacency(g, m);
  r.add_count("dihedral_maps_are_automorphisms" + tag, dm.size(), good);

  const auto sols = all_automorphisms(g);
  r.add_count("bt_aut_order" + tag, 2 * (n + 1), sols.size());

  const bool equal = std::set<VertexMap>(sols.begin(), sols.end()) == dset;
  r.add_bool("bt_aut_equals_dihedral" + tag, equal);
  return r;
}

namespace {

// Vertex map of a toric-reverse element on the Cayley graph, vertices in
// lexicographic rank order.
VertexMap cay_vertex_map(int n, const ToricReverseElement& e) {
  const std::uint64_t count = factorial(n);
  VertexMap m(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    m[r] = static_cast<int>(lex_rank(apply(e, lex_unrank(n, r))));
  }
  return m;
}

}  // namespace

Report check_n_trivial(int n, int max_cayley_n) {
  if (n > max_cayley_n) {
    throw std::invalid_argument("check_n_trivial: n exceeds the Cayley bound");
  }
  Report r;
  const std::string tag = "(n=" + std::to_string(n) + ")";
  CayleyOptions copts;
  copts.conv = Convention::left;
  copts.max_n = max_cayley_n;
  const Graph cay = build_cayley(n, copts);

  // identity permutation has lexicographic rank 0
  std::vector<int> fixed{0};
  for (const Cuts& c : enumerate_tn(n)) {
    fixed.push_back(static_cast<int>(lex_rank(as_permutation(c))));
  }
  const auto nsub = all_automorphisms(cay, {.fixed = fixed, .max_vertices = 100000});
  r.add_count("cay_pointwise_stab_order" + tag, 1, nsub.size());

  const auto stab = all_automorphisms(cay, {.fixed = {0}, .max_vertices = 100000});
  r.add_count("cay_iota_stab_order" + tag, 2 * (n + 1), stab.size());

  std::set<VertexMap> dset;
  for (const ToricReverseElement& e : toric_reverse_group(n, Convention::left)) {
    dset.insert(cay_vertex_map(n, e));
  }
  const bool equal = std::set<VertexMap>(stab.begin(), stab.end()) == dset;
  r.add_bool("cay_iota_stab_equals_dihedral" + tag, equal);

  if (n == 4) {
    const auto full = all_automorphisms(cay);
    r.add_count("cay_full_aut_order" + tag, factorial(n) * 2 * (n + 1), full.size());
    // orbit-stabilizer: the right translations act transitively
    r.add_count("cay_orbit_stabilizer" + tag, full.size(),
                stab.size() * factorial(n));
  }
  return r;
}

namespace {

// Element h o f^r of the translations-and-toric-maps group of the
// left-invariant Cayley graph: pi -> f_r(pi) o h.
struct RfElement {
  Perm h;
  int r;

  bool operator==(const RfElement&) const = default;
  auto operator<=>(const RfElement&) const = default;
};

Perm rf_eval(const RfElement& a, const Perm& p) {
  return toric_map(p, a.r).compose(a.h);
}

RfElement rf_product(int n, const RfElement& a, const RfElement& b) {
  // a o b = (f_{a.r}(b.h) o a.h, b.r + [0 b.h]_{a.r})
  const int m = n + 1;
  const int shift = a.r == 0 ? 0 : extend_zero(b.h).of0(a.r);
  return {toric_map(b.h, a.r).compose(a.h), (b.r + shift) % m};
}

ZPerm phi_of(int n, const RfElement& a) {
  return extend_zero(a.h.inverse()).compose(alpha_power(n, n + 1 - a.r));
}

}  // namespace

Report phi_check(int n, std::uint64_t seed) {
  if (n < 2 || n > 6) throw std::invalid_argument("phi_check: need 2 <= n <= 6");
  Report r;
  const std::string tag = "(n=" + std::to_string(n) + ")";
  const std::uint64_t nf = factorial(n);
  const int m = n + 1;

  std::vector<RfElement> elems;
  elems.reserve(nf * m);
  for (std::uint64_t hr = 0; hr < nf; ++hr) {
    const Perm h = lex_unrank(n, hr);
    for (int rr = 0; rr < m; ++rr) elems.push_back({h, rr});
  }

  std::vector<Perm> all_perms;
  all_perms.reserve(nf);
  for (std::uint64_t pr = 0; pr < nf; ++pr) all_perms.push_back(lex_unrank(n, pr));

  // product rule vs direct evaluation, and Phi homomorphism, on the same
  // pairs: exhaustive for n <= 4, 1000 seeded samples otherwise
  std::uint64_t pair_count = 0, rule_bad = 0, hom_bad = 0;
  auto check_pair = [&](const RfElement& a, const RfElement& b) {
    ++pair_count;
    const RfElement c = rf_product(n, a, b);
    for (const Perm& p : all_perms) {
      if (rf_eval(c, p) != rf_eval(a, rf_eval(b, p))) {
        ++rule_bad;
        break;
      }
    }
    if (phi_of(n, c) != phi_of(n, a).compose(phi_of(n, b))) ++hom_bad;
  };
  if (n <= 4) {
    for (const auto& a : elems)
      for (const auto& b : elems) check_pair(a, b);
  } else {
    std::uint64_t state = seed;
    auto next = [&state]() {
      // xorshift*; fixed seed keeps runs reproducible
      state ^= state >> 12;
      state ^= state << 25;
      state ^= state >> 27;
      return state * 0x2545F4914F6CDD1DULL;
    };
    for (int s = 0; s < 1000; ++s) {
      const auto& a = elems[next() % elems.size()];
      const auto& b = elems[next() % elems.size()];
      check_pair(a, b);
    }
  }
  r.add_count("rf_product_rule_mismatches" + tag + "[pairs=" +
                  std::to_string(pair_count) + "]",
              0, rule_bad);
  r.add_count("phi_homomorphism_mismatches" + tag, 0, hom_bad);

  std::uint64_t kernel = 0;
  std::set<ZPerm> image;
  const ZPerm zid = ZPerm::identity(n);
  for (const auto& a : elems) {
    const ZPerm im = phi_of(n, a);
    if (im == zid) ++kernel;
    image.insert(im);
  }
  r.add_count("phi_kernel_size" + tag, 1, kernel);
  r.add_count("phi_image_order" + tag, factorial(n + 1), image.size());

  // t = g o w sends pi to w o pi; it is a central involution outside the
  // translations-and-toric-maps group
  const Perm w = reverse_perm(n);
  auto t_eval = [&](const Perm& p) { return w.compose(p); };
  bool involution = true;
  for (const Perm& p : all_perms) {
    if (t_eval(t_eval(p)) != p) { involution = false; break; }
  }
  r.add_bool("t_is_involution" + tag, involution);

  std::vector<RfElement> gens;
  for (const Cuts& c : enumerate_tn(n)) gens.push_back({as_permutation(c), 0});
  gens.push_back({identity_perm(n), 1});
  std::uint64_t commute_bad = 0;
  for (const auto& a : gens) {
    for (const Perm& p : all_perms) {
      if (t_eval(rf_eval(a, p)) != rf_eval(a, t_eval(p))) {
        ++commute_bad;
        break;
      }
    }
  }
  r.add_count("t_centralizes_rf_mismatches" + tag, 0, commute_bad);

  bool outside = true;
  for (const auto& a : elems) {
    bool same = true;
    for (const Perm& p : all_perms) {
      if (rf_eval(a, p) != t_eval(p)) { same = false; break; }
    }
    if (same) { outside = false; break; }
  }
  r.add_bool("t_outside_rf" + tag, outside);
  return r;
}

}  // namespace bt
