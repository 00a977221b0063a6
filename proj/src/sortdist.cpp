#include "bt/sortdist.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "bt/toric.hpp"

namespace bt {

namespace {

// 4 bits per point; enough for n <= 9 (values 0..8)
std::uint64_t pack(const Perm& p) {
  std::uint64_t key = 0;
  for (int t = p.degree() - 1; t >= 0; --t) key = (key << 4) | std::uint64_t(p.of0(t));
  return key;
}

}  // namespace

int bt_distance(const Perm& p, const DistanceBounds& bounds) {
  const int n = p.degree();
  if (n > bounds.single_pair_max_n) {
    throw std::invalid_argument("bt_distance: degree exceeds the BFS bound");
  }
  const Perm id = Perm::identity(n);
  if (p == id) return 0;
  if (n < 2) return 0;
  const std::vector<Cuts> gens = enumerate_tn(n);

  // meet-in-the-middle: expand the smaller frontier; the graph is
  // undirected because T_n is inverse closed
  std::unordered_map<std::uint64_t, int> seen_a{{pack(id), 0}};
  std::unordered_map<std::uint64_t, int> seen_b{{pack(p), 0}};
  std::vector<Perm> frontier_a{id}, frontier_b{p};
  int depth_a = 0, depth_b = 0;
  while (true) {
    const bool grow_a = frontier_a.size() <= frontier_b.size();
    auto& frontier = grow_a ? frontier_a : frontier_b;
    auto& seen = grow_a ? seen_a : seen_b;
    auto& other = grow_a ? seen_b : seen_a;
    int& depth = grow_a ? depth_a : depth_b;
    std::vector<Perm> next;
    for (const Perm& q : frontier) {
      for (const Cuts& c : gens) {
        Perm r = apply_right(q, c);
        const std::uint64_t key = pack(r);
        if (seen.count(key)) continue;
        if (auto it = other.find(key); it != other.end()) {
          return depth + 1 + it->second;
        }
        seen.emplace(key, depth + 1);
        next.push_back(std::move(r));
      }
    }
    ++depth;
    if (next.empty()) {
      throw std::logic_error("bt_distance: search exhausted (disconnected?)");
    }
    frontier = std::move(next);
  }
}

std::vector<std::uint8_t> distance_table(int n, int max_n) {
  if (n < 2) throw std::invalid_argument("distance_table: need n >= 2");
  if (n > max_n) {
    throw std::invalid_argument("distance_table: degree exceeds the table bound");
  }
  const std::uint64_t count = factorial(n);
  const std::vector<Cuts> gens = enumerate_tn(n);
  std::vector<std::uint8_t> dist(count, 0xff);
  std::vector<std::uint32_t> frontier{0};  // identity has rank 0
  dist[0] = 0;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    ++level;
    for (std::uint32_t r : frontier) {
      const Perm p = lex_unrank(n, r);
      for (const Cuts& c : gens) {
        const auto q = static_cast<std::uint32_t>(lex_rank(apply_right(p, c)));
        if (dist[q] == 0xff) {
          dist[q] = level;
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

SortingTrace sorting_sequence(const Perm& p, const DistanceBounds& bounds) {
  const int n = p.degree();
  SortingTrace trace{p, {}, Perm::identity(n)};
  if (n < 2 || p == trace.end) return trace;

  const bool tabled = n <= bounds.table_max_n;
  std::vector<std::uint8_t> table;
  if (tabled) table = distance_table(n, bounds.table_max_n);
  auto dist_of = [&](const Perm& q) {
    return tabled ? static_cast<int>(table[lex_rank(q)]) : bt_distance(q, bounds);
  };

  const std::vector<Cuts> gens = enumerate_tn(n);
  Perm cur = p;
  int remaining = dist_of(p);
  while (remaining > 0) {
    bool advanced = false;
    for (const Cuts& c : gens) {  // lexicographic tie break
      Perm q = apply_right(cur, c);
      if (dist_of(q) == remaining - 1) {
        trace.moves.push_back(c);
        cur = std::move(q);
        --remaining;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("sorting_sequence: no descent move");
  }
  return trace;
}

Perm toric_reduce(const Perm& p) {
  Perm best = p;
  for (const ToricReverseElement& e : toric_reverse_group(p.degree(), Convention::right)) {
    Perm q = apply(e, p);
    if (q < best) best = q;
  }
  return best;
}

}  // namespace bt
