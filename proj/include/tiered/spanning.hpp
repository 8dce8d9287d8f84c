#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tiered/errors.hpp"
#include "tiered/graph.hpp"
#include "tiered/polynomial.hpp"

namespace tiered {

// A total order on the edges of a graph, stored as rank[edge index].
class EdgeOrder {
 public:
  // Throws InvalidGraph unless `rank` is a permutation of 0..size-1.
  explicit EdgeOrder(std::vector<int> rank);

  static EdgeOrder lexicographic(const Graph& g);
  static EdgeOrder random(const Graph& g, std::uint64_t seed);

  int rank(int edge) const { return rank_[edge]; }
  bool precedes(int a, int b) const { return rank_[a] < rank_[b]; }
  std::size_t size() const { return rank_.size(); }

 private:
  std::vector<int> rank_;
};

// Matrix-Tree count: determinant of the reduced Laplacian.
Integer count_spanning_trees(const Graph& g);

// Visits every spanning tree exactly once, in a fixed order. Throws
// DisconnectedGraph, and CapExceeded when the Matrix-Tree count exceeds
// caps.spanning_trees.
void for_each_spanning_tree(const Graph& g, const std::function<void(EdgeSet)>& visit,
                            const Caps& caps = {});
std::vector<EdgeSet> spanning_trees(const Graph& g, const Caps& caps = {});

struct Activity {
  int internal = 0;
  int external = 0;
};

// Internal: a tree edge minimal in its fundamental cut.
// External: a non-tree edge minimal in its fundamental cycle.
Activity activities(const Graph& g, EdgeSet tree, const EdgeOrder& order);
EdgeSet externally_active_edges(const Graph& g, EdgeSet tree, const EdgeOrder& order);

// Sum over spanning trees of x^internal y^external.
TuttePolynomial tutte_polynomial(const Graph& g, const EdgeOrder& order, const Caps& caps = {});
TuttePolynomial tutte_polynomial(const Graph& g, const Caps& caps = {});

// Histogram h[k] = #{T : external(T) = k} under the lexicographic order.
Polynomial external_activity_histogram(const Graph& g, const Caps& caps = {});

}  // namespace tiered
