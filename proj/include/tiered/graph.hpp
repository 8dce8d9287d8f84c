#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tiered/numeric.hpp"

namespace tiered {

using Vertex = int;  // labels are 1..n

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex a, Vertex b);
std::string to_string(const Edge& e);

// Bit k is edge k in Graph::edges() order.
using EdgeSet = std::uint64_t;

inline bool contains(EdgeSet s, int k) { return (s >> k) & 1u; }
inline int cardinality(EdgeSet s) { return __builtin_popcountll(s); }

// Simple undirected graph on 1..n. Edges are kept in lexicographic order
// (smaller endpoint first), which fixes edge indices.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidGraph on loops, repeated edges or out-of-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }
  int edge_index(Vertex a, Vertex b) const;  // -1 when absent
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v - 1].size()); }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v - 1]; }

  // Requires edge_count() <= 64; throws CapExceeded otherwise.
  EdgeSet all_edges() const;

  int component_count() const;
  int component_count(EdgeSet kept) const;  // spanning subgraph on the kept edges
  bool connected() const { return component_count() == 1; }
  bool is_forest(EdgeSet kept) const;
  bool is_spanning_tree(EdgeSet kept) const;
  std::vector<Edge> edges_of(EdgeSet kept) const;
  EdgeSet edge_set_of(std::span<const Edge> edges) const;  // throws NotSpanningTree on missing edges

  // Connected component of v after deleting the vertex `removed` (0 for none).
  std::vector<Vertex> component_of(Vertex v, Vertex removed = 0) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> index_;  // n*n table of edge indices
};

// e - v + c
int cyclomatic_number(const Graph& g);

template <typename Scalar>
Matrix<Scalar> adjacency_matrix(const Graph& g) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    a(e.u - 1, e.v - 1) = Scalar(1);
    a(e.v - 1, e.u - 1) = Scalar(1);
  }
  return a;
}

template <typename Scalar>
Matrix<Scalar> laplacian(const Graph& g) {
  Matrix<Scalar> l = -adjacency_matrix<Scalar>(g);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) l(v - 1, v - 1) = Scalar(g.degree(v));
  return l;
}

// Laplacian with the row and column of `removed` deleted.
template <typename Scalar>
Matrix<Scalar> reduced_laplacian(const Graph& g, Vertex removed) {
  const Eigen::Index n = g.vertex_count();
  const Matrix<Scalar> l = laplacian<Scalar>(g);
  Matrix<Scalar> r(n - 1, n - 1);
  for (Eigen::Index i = 0, ri = 0; i < n; ++i) {
    if (i == removed - 1) continue;
    for (Eigen::Index j = 0, rj = 0; j < n; ++j) {
      if (j == removed - 1) continue;
      r(ri, rj++) = l(i, j);
    }
    ++ri;
  }
  return r;
}

// Backtracking isomorphism test. `colour_a`/`colour_b`, when non-empty, are
// vertex colours that the bijection must preserve.
bool isomorphic(const Graph& a, const Graph& b,
                std::span<const int> colour_a = {}, std::span<const int> colour_b = {});

}  // namespace tiered
