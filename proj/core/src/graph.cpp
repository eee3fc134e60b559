#include "dpw/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace dpw {

Graph::Graph(Ambient vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : vertices_(vertices), edge_count_(0), adj_(static_cast<std::size_t>(vertices.size())) {
  for (auto [u, v] : edges) {
    if (!vertices_.contains(u) || !vertices_.contains(v)) {
      throw std::invalid_argument("Graph: edge endpoint outside vertex set");
    }
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    auto& au = adj_[static_cast<std::size_t>(u - vertices_.lo())];
    if (std::find(au.begin(), au.end(), v) != au.end()) {
      throw std::invalid_argument("Graph: duplicate edge");
    }
    au.push_back(v);
    adj_[static_cast<std::size_t>(v - vertices_.lo())].push_back(u);
    ++edge_count_;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  // connectivity
  std::vector<char> seen(adj_.size(), 0);
  std::deque<Vertex> q{vertices_.lo()};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex y : neighbors(x)) {
      auto i = static_cast<std::size_t>(y - vertices_.lo());
      if (!seen[i]) {
        seen[i] = 1;
        ++reached;
        q.push_back(y);
      }
    }
  }
  if (reached != adj_.size()) throw std::invalid_argument("Graph: not connected");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (!vertices_.contains(v)) throw std::invalid_argument("Graph: invalid vertex");
  return adj_[static_cast<std::size_t>(v - vertices_.lo())];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

DistanceMatrix::DistanceMatrix(const Graph& g) : vertices_(g.vertices()) {
  const int V = g.vertex_count();
  dist_.assign(static_cast<std::size_t>(V), std::vector<int>(static_cast<std::size_t>(V), -1));
  for (Vertex s = vertices_.lo(); s <= vertices_.hi(); ++s) {
    auto& row = dist_[idx(s)];
    row[idx(s)] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (row[idx(y)] < 0) {
          row[idx(y)] = row[idx(x)] + 1;
          q.push_back(y);
        }
      }
    }
  }
}

Graph wheel(int n) {
  if (n < 4) throw std::invalid_argument("wheel: n must be >= 4");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return {Ambient::with_hub(n), e};
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return {Ambient::rim(n), e};
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return {Ambient::rim(n), e};
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star: n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= n - 1; ++i) e.emplace_back(0, i);
  return {Ambient::interval(0, n - 1), e};
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return {Ambient::rim(n), e};
}

int distance_bfs(const Graph& g, Vertex u, Vertex v) {
  if (!g.vertices().contains(u) || !g.vertices().contains(v)) {
    throw std::invalid_argument("distance_bfs: invalid vertex");
  }
  if (u == v) return 0;
  const Vertex lo = g.vertices().lo();
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), -1);
  d[static_cast<std::size_t>(u - lo)] = 0;
  std::deque<Vertex> q{u};
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex y : g.neighbors(x)) {
      auto i = static_cast<std::size_t>(y - lo);
      if (d[i] < 0) {
        d[i] = d[static_cast<std::size_t>(x - lo)] + 1;
        if (y == v) return d[i];
        q.push_back(y);
      }
    }
  }
  throw std::logic_error("distance_bfs: disconnected graph");
}

int wheel_distance(int n, Vertex u, Vertex v) {
  if (n < 4) throw std::invalid_argument("wheel_distance: n must be >= 4");
  if (u < 0 || u > n || v < 0 || v > n) {
    throw std::invalid_argument("wheel_distance: vertex out of range");
  }
  if (u == v) return 0;
  if (u == 0 || v == 0) return 1;
  int a = std::min(u, v), b = std::max(u, v);
  if (b - a == 1 || (a == 1 && b == n)) return 1;
  return 2;
}

}  // namespace dpw
