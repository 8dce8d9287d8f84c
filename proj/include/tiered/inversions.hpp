#pragma once

#include <span>
#include <vector>

#include "tiered/errors.hpp"
#include "tiered/graph.hpp"
#include "tiered/polynomial.hpp"

namespace tiered {

class RootedTree {
 public:
  // Throws NotATree unless the edges form a spanning tree of 1..n, and
  // UnknownVertex for a root outside 1..n.
  RootedTree(int vertex_count, std::span<const Edge> edges, Vertex root);

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v - 1]; }  // 0 at the root
  int depth(Vertex v) const { return depth_[v - 1]; }
  // j lies strictly below i.
  bool is_descendant(Vertex j, Vertex i) const;
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  Vertex root_;
  std::vector<Edge> edges_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
};

// Pairs (i, j) with j strictly below i and i > j.
int tree_inversions(const RootedTree& t);

// Pairs (i, j) with i not the root, j strictly below i, i > j and
// {parent(i), j} an edge of g. Throws NotSpanningTree.
int kappa_inversions(const Graph& g, const RootedTree& t);

// Pairs (i, j) with i not the root, j strictly below i, j compatible with
// parent(i) and label(i) >= label(j). `labels` defaults to the vertex names;
// equality can only occur with repeated labels.
int generalized_inversions(const RootedTree& t, std::span<const int> tier,
                           std::span<const int> labels = {});

// Sum over spanning trees rooted at `root` of q^kappa.
Polynomial kappa_enumerator(const Graph& g, Vertex root, const Caps& caps = {});

}  // namespace tiered
