#include "bt/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace bt {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adj) total += nbrs.size();
  return total / 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adj[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                 std::vector<std::string> legend) {
  if (static_cast<int>(legend.size()) != vertex_count) {
    throw std::invalid_argument("make_graph: legend size mismatch");
  }
  std::unordered_set<std::string> seen(legend.begin(), legend.end());
  if (static_cast<int>(seen.size()) != vertex_count) {
    throw std::invalid_argument("make_graph: legend not injective");
  }
  Graph g;
  g.adj.assign(vertex_count, {});
  g.legend = std::move(legend);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("make_graph: vertex out of range");
    }
    if (u == v) throw std::invalid_argument("make_graph: loop edge");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nbrs : g.adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

std::vector<int> degree_report(const Graph& g) {
  std::vector<int> degs;
  degs.reserve(g.adj.size());
  for (const auto& nbrs : g.adj) degs.push_back(static_cast<int>(nbrs.size()));
  std::sort(degs.begin(), degs.end());
  return degs;
}

bool is_k_regular(const Graph& g, int k) {
  for (const auto& nbrs : g.adj) {
    if (static_cast<int>(nbrs.size()) != k) return false;
  }
  return true;
}

BipartiteDegrees bipartite_degrees(const Graph& g, const std::vector<int>& part_a,
                                   const std::vector<int>& part_b) {
  std::vector<char> in_a(g.vertex_count(), 0), in_b(g.vertex_count(), 0);
  for (int v : part_a) in_a.at(v) = 1;
  for (int v : part_b) {
    if (in_a.at(v)) throw std::invalid_argument("bipartite_degrees: parts overlap");
    in_b[v] = 1;
  }
  BipartiteDegrees out;
  out.deg_a.reserve(part_a.size());
  out.deg_b.reserve(part_b.size());
  for (int v : part_a) {
    int d = 0;
    for (int w : g.adj[v]) d += in_b[w];
    out.deg_a.push_back(d);
  }
  for (int v : part_b) {
    int d = 0;
    for (int w : g.adj[v]) d += in_a[w];
    out.deg_b.push_back(d);
  }
  return out;
}

std::vector<std::pair<int, int>> maximal_two_cliques(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.adj[u]) {
      if (v <= u) continue;
      // common neighbor test on two sorted lists
      const auto& a = g.adj[u];
      const auto& b = g.adj[v];
      std::size_t x = 0, y = 0;
      bool common = false;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) { common = true; break; }
        if (a[x] < b[y]) ++x; else ++y;
      }
      if (!common) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph induced(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t t = 0; t < verts.size(); ++t) {
    const int v = verts[t];
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("induced: vertex out of range");
    }
    if (pos[v] != -1) throw std::invalid_argument("induced: duplicate vertex");
    pos[v] = static_cast<int>(t);
  }
  Graph out;
  out.n = g.n;
  out.adj.assign(verts.size(), {});
  out.legend.reserve(verts.size());
  for (int v : verts) out.legend.push_back(g.legend[v]);
  for (std::size_t t = 0; t < verts.size(); ++t) {
    for (int w : g.adj[verts[t]]) {
      if (pos[w] != -1) out.adj[t].push_back(pos[w]);
    }
    std::sort(out.adj[t].begin(), out.adj[t].end());
  }
  return out;
}

namespace {

std::vector<std::pair<int, int>> sorted_edges(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;  // already sorted: u ascending, adj[u] sorted
}

}  // namespace

void export_graph(const Graph& g, ExportFormat fmt, std::ostream& os) {
  switch (fmt) {
    case ExportFormat::edges: {
      for (int v = 0; v < g.vertex_count(); ++v) {
        os << "# legend: " << v << ' ' << g.legend[v] << '\n';
      }
      for (const auto& [u, v] : sorted_edges(g)) os << u << ' ' << v << '\n';
      break;
    }
    case ExportFormat::dot: {
      os << "graph G {\n";
      for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v << " [label=\"" << g.legend[v] << "\"];\n";
      }
      for (const auto& [u, v] : sorted_edges(g)) {
        os << "  " << u << " -- " << v << ";\n";
      }
      os << "}\n";
      break;
    }
    case ExportFormat::json: {
      nlohmann::ordered_json j;
      j["n"] = g.n;
      j["vertices"] = g.legend;
      auto& je = j["edges"] = nlohmann::ordered_json::array();
      for (const auto& [u, v] : sorted_edges(g)) je.push_back({u, v});
      os << j.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace bt
