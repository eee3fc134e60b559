#ifndef DPW_GRAPH_HPP
#define DPW_GRAPH_HPP

#include <utility>
#include <vector>

#include "dpw/partial_injection.hpp"

namespace dpw {

// Finite simple connected undirected graph on a contiguous vertex interval.
class Graph {
public:
  Graph(Ambient vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  const Ambient& vertices() const { return vertices_; }
  int vertex_count() const { return vertices_.size(); }
  int edge_count() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

private:
  Ambient vertices_;
  int edge_count_;
  std::vector<std::vector<Vertex>> adj_;  // indexed by v - lo, each sorted
};

// All-pairs geodesic distances, from one BFS per vertex.
class DistanceMatrix {
public:
  explicit DistanceMatrix(const Graph& g);
  int at(Vertex u, Vertex v) const { return dist_[idx(u)][idx(v)]; }
  const Ambient& vertices() const { return vertices_; }

private:
  std::size_t idx(Vertex v) const { return static_cast<std::size_t>(v - vertices_.lo()); }
  Ambient vertices_;
  std::vector<std::vector<int>> dist_;
};

// Graph families.  The wheel W_n lives on {0..n} with hub 0; the cycle, path
// and complete graphs live on {1..n}; the star S_n lives on {0..n-1} with
// centre 0.
Graph wheel(int n);     // n >= 4
Graph cycle(int n);     // n >= 3
Graph path(int n);      // n >= 1
Graph star(int n);      // n >= 1
Graph complete(int n);  // n >= 1

// Geodesic distance by breadth-first search; the oracle of record.
int distance_bfs(const Graph& g, Vertex u, Vertex v);

// Closed form for the wheel metric; must agree with distance_bfs everywhere.
int wheel_distance(int n, Vertex u, Vertex v);

// x reduced into {1..n} (rim representatives mod n)
inline Vertex rim_norm(int n, Vertex x) {
  int r = (x - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

}  // namespace dpw

#endif  // DPW_GRAPH_HPP
