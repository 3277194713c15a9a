#include "burnkit/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace burnkit {

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = vertex_count;
  g.adj_.assign(vertex_count, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  ": label out of range");
    if (u == v)
      throw std::invalid_argument("edge " + std::to_string(i) + ": self-loop at " +
                                  std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.m_ += static_cast<long long>(nb.size());
  }
  g.m_ /= 2;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

DistanceProfile distances_from(const Graph& g, int source) {
  int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::out_of_range("source vertex out of range");
  DistanceProfile p;
  p.source = source;
  p.dist.assign(n, DistanceProfile::kUnreachable);
  p.dist[source] = 0;
  p.layers.push_back({source});
  std::vector<int> frontier{source};
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    std::vector<int> next;
    for (int u : frontier)
      for (int v : g.neighbors(u))
        if (p.dist[v] == DistanceProfile::kUnreachable) {
          p.dist[v] = d;
          next.push_back(v);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    p.layers.push_back(next);
    frontier = std::move(next);
  }
  return p;
}

EccentricityReport eccentricity_radius(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("empty graph has no radius");
  if (!is_connected(g))
    throw std::invalid_argument("eccentricity requires a connected graph");
  EccentricityReport rep;
  rep.ecc.resize(n);
  rep.radius = n;  // above any possible eccentricity
  rep.diameter = 0;
  for (int v = 0; v < n; ++v) {
    auto p = distances_from(g, v);
    rep.ecc[v] = static_cast<int>(p.layers.size()) - 1;
    if (rep.ecc[v] < rep.radius) {
      rep.radius = rep.ecc[v];
      rep.center = v;
    }
    rep.diameter = std::max(rep.diameter, rep.ecc[v]);
  }
  return rep;
}

std::vector<int> closed_neighborhood(const Graph& g, int v, int r) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
  std::vector<int> dist(n, -1);
  std::vector<int> out{v};
  dist[v] = 0;
  std::queue<int> q;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] == r) continue;
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        out.push_back(w);
        q.push(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  int n = g.vertex_count();
  s.degrees.resize(n);
  for (int v = 0; v < n; ++v) {
    s.degrees[v] = g.degree(v);
    ++s.degree_counts[s.degrees[v]];
  }
  s.connected = is_connected(g);
  s.triangle_free = true;
  for (int u = 0; u < n && s.triangle_free; ++u) {
    auto nu = g.neighbors(u);
    for (int v : nu) {
      if (v < u) continue;
      // sorted-list intersection of N(u) and N(v)
      auto nv = g.neighbors(v);
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) {
          s.triangle_free = false;
          break;
        }
        if (nu[i] < nv[j]) ++i; else ++j;
      }
      if (!s.triangle_free) break;
    }
  }
  return s;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return false;
  auto p = distances_from(g, 0);
  for (int v = 0; v < n; ++v)
    if (p.dist[v] == DistanceProfile::kUnreachable) return false;
  return true;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
         is_connected(g);
}

LeafStripResult strip_leaves(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("strip_leaves needs >= 2 vertices");
  if (!is_connected(g))
    throw std::invalid_argument("strip_leaves requires a connected graph");
  LeafStripResult res;
  std::vector<int> new_label(n, -1);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 2) {
      new_label[v] = static_cast<int>(res.old_label.size());
      res.old_label.push_back(v);
    }
  if (res.old_label.empty())
    throw std::invalid_argument("strip_leaves: all vertices are leaves");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_label[u] >= 0 && new_label[v] >= 0)
      edges.emplace_back(new_label[u], new_label[v]);
  res.reduced = Graph::from_edges(static_cast<int>(res.old_label.size()), edges);
  return res;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  auto e = path_graph(n).edges();
  e.emplace_back(n - 1, 0);
  return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace burnkit
