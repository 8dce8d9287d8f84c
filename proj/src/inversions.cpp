#include "tiered/inversions.hpp"

#include "tiered/spanning.hpp"

namespace tiered {

RootedTree::RootedTree(int vertex_count, std::span<const Edge> edges, Vertex root)
    : root_(root), parent_(vertex_count, -1), depth_(vertex_count, 0) {
  if (root < 1 || root > vertex_count)
    throw Error(ErrorKind::UnknownVertex, "root " + std::to_string(root) + " is not a vertex");
  if (static_cast<int>(edges.size()) != vertex_count - 1)
    throw Error(ErrorKind::NotATree, "a tree on " + std::to_string(vertex_count) + " vertices has " +
                                         std::to_string(vertex_count - 1) + " edges");
  std::vector<std::vector<Vertex>> adj(vertex_count + 1);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v < 1 || e.u > vertex_count || e.v > vertex_count || e.u == e.v)
      throw Error(ErrorKind::NotATree, "bad tree edge " + to_string(e));
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    edges_.push_back(make_edge(e.u, e.v));
  }
  parent_[root - 1] = 0;
  std::vector<Vertex> stack{root};
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (parent_[y - 1] != -1) continue;
      parent_[y - 1] = x;
      depth_[y - 1] = depth_[x - 1] + 1;
      ++reached;
      stack.push_back(y);
    }
  }
  if (reached != vertex_count) throw Error(ErrorKind::NotATree, "tree edges do not connect all vertices");
}

bool RootedTree::is_descendant(Vertex j, Vertex i) const {
  if (depth(j) <= depth(i)) return false;
  while (depth(j) > depth(i)) j = parent(j);
  return j == i;
}

int tree_inversions(const RootedTree& t) {
  int count = 0;
  for (Vertex i = 1; i <= t.vertex_count(); ++i)
    for (Vertex j = 1; j < i; ++j) count += t.is_descendant(j, i);
  return count;
}

int kappa_inversions(const Graph& g, const RootedTree& t) {
  if (g.vertex_count() != t.vertex_count())
    throw Error(ErrorKind::NotSpanningTree, "tree and graph have different vertex sets");
  for (const Edge& e : t.edges())
    if (!g.adjacent(e.u, e.v)) throw Error(ErrorKind::NotSpanningTree, "tree edge " + to_string(e) + " is not in the graph");
  int count = 0;
  for (Vertex i = 1; i <= t.vertex_count(); ++i) {
    if (i == t.root()) continue;
    for (Vertex j = 1; j < i; ++j)
      if (t.is_descendant(j, i) && g.adjacent(t.parent(i), j)) ++count;
  }
  return count;
}

int generalized_inversions(const RootedTree& t, std::span<const int> tier, std::span<const int> labels) {
  const int n = t.vertex_count();
  if (static_cast<int>(tier.size()) != n) throw Error(ErrorKind::InvalidGraph, "tier vector size differs from tree size");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::InvalidGraph, "label vector size differs from tree size");
  auto label = [&](Vertex v) { return labels.empty() ? v : labels[v - 1]; };
  auto compatible_labels = [&](Vertex a, Vertex b) {
    const int ta = tier[a - 1], tb = tier[b - 1];
    return (label(a) < label(b) && ta < tb) || (label(a) > label(b) && ta > tb);
  };
  int count = 0;
  for (Vertex i = 1; i <= n; ++i) {
    if (i == t.root()) continue;
    for (Vertex j = 1; j <= n; ++j)
      if (t.is_descendant(j, i) && label(i) >= label(j) && compatible_labels(t.parent(i), j)) ++count;
  }
  return count;
}

Polynomial kappa_enumerator(const Graph& g, Vertex root, const Caps& caps) {
  Polynomial p;
  for_each_spanning_tree(g, [&](EdgeSet tree) {
    auto edges = g.edges_of(tree);
    p.add_term(kappa_inversions(g, RootedTree(g.vertex_count(), edges, root)), 1);
  }, caps);
  return p;
}

}  // namespace tiered
