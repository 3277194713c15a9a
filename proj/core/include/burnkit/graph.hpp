#ifndef BURNKIT_GRAPH_HPP
#define BURNKIT_GRAPH_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace burnkit {

// Immutable simple undirected graph. Vertices are 0..n-1, adjacency lists
// are sorted, loop-free and symmetric; construction validates all three.
// Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  // throws std::invalid_argument on self-loops or labels out of range;
  // duplicate edges are collapsed
  static Graph from_edges(int vertex_count,
                          const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// BFS result from a single source. dist is -1 for unreachable vertices;
// layers[i] holds exactly the vertices at distance i, so the layers
// partition the reachable set.
struct DistanceProfile {
  static constexpr int kUnreachable = -1;
  int source = 0;
  std::vector<int> dist;
  std::vector<std::vector<int>> layers;
};

DistanceProfile distances_from(const Graph& g, int source);

struct EccentricityReport {
  std::vector<int> ecc;
  int radius = 0;
  int diameter = 0;
  int center = 0;  // lowest-index vertex attaining the radius
};

// throws std::invalid_argument if g is disconnected or empty
EccentricityReport eccentricity_radius(const Graph& g);

// Vertices within distance r of v, v included. Sorted.
std::vector<int> closed_neighborhood(const Graph& g, int v, int r);

struct GraphStats {
  std::vector<int> degrees;
  std::map<int, long long> degree_counts;  // n_k, k >= 0
  bool triangle_free = true;
  bool connected = true;
};

GraphStats graph_stats(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

struct LeafStripResult {
  Graph reduced;
  std::vector<int> old_label;  // old_label[new index] = index in the input
};

// Induced subgraph on the vertices of degree >= 2, relabeled densely.
// Requires a connected graph on >= 2 vertices; throws std::invalid_argument
// when the result would be empty (the graph is a single edge).
LeafStripResult strip_leaves(const Graph& g);

// small constructions shared by tools, tests and benchmarks
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

}  // namespace burnkit

#endif
