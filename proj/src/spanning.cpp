#include "tiered/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tiered {

EdgeOrder::EdgeOrder(std::vector<int> rank) : rank_(std::move(rank)) {
  std::vector<int> sorted = rank_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k)) throw Error(ErrorKind::InvalidGraph, "edge order is not a permutation");
}

EdgeOrder EdgeOrder::lexicographic(const Graph& g) {
  std::vector<int> rank(g.edge_count());
  std::iota(rank.begin(), rank.end(), 0);
  return EdgeOrder(std::move(rank));
}

EdgeOrder EdgeOrder::random(const Graph& g, std::uint64_t seed) {
  std::vector<int> rank(g.edge_count());
  std::iota(rank.begin(), rank.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(rank.begin(), rank.end(), rng);
  return EdgeOrder(std::move(rank));
}

Integer count_spanning_trees(const Graph& g) {
  if (g.vertex_count() <= 1) return 1;
  return numerator(exact_determinant(reduced_laplacian<Rational>(g, g.vertex_count())));
}

namespace {

struct Components {
  std::vector<int> parent;
  explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

// Branches on each edge in index order: include when it joins two
// components, exclude when the remaining edges can still connect the graph.
class TreeWalker {
 public:
  TreeWalker(const Graph& g, const std::function<void(EdgeSet)>& visit) : g_(g), visit_(visit) {}

  void run() {
    Components c(g_.vertex_count());
    walk(0, 0, 0, c);
  }

 private:
  bool completable(int next, EdgeSet chosen) const {
    EdgeSet kept = chosen;
    for (int k = next; k < g_.edge_count(); ++k) kept |= EdgeSet{1} << k;
    return g_.component_count(kept) == 1;
  }

  void walk(int k, EdgeSet chosen, int size, Components& c) {
    if (size == g_.vertex_count() - 1) {
      visit_(chosen);
      return;
    }
    if (k == g_.edge_count()) return;
    const Edge& e = g_.edge(k);
    int a = c.find(e.u - 1), b = c.find(e.v - 1);
    if (a != b) {
      c.parent[a] = b;
      walk(k + 1, chosen | (EdgeSet{1} << k), size + 1, c);
      c.parent[a] = a;
    }
    if (completable(k + 1, chosen)) walk(k + 1, chosen, size, c);
  }

  const Graph& g_;
  const std::function<void(EdgeSet)>& visit_;
};

}  // namespace

void for_each_spanning_tree(const Graph& g, const std::function<void(EdgeSet)>& visit, const Caps& caps) {
  if (!g.connected()) throw Error(ErrorKind::DisconnectedGraph, "spanning trees need a connected graph");
  g.all_edges();
  if (count_spanning_trees(g) > caps.spanning_trees)
    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(caps.spanning_trees) + " spanning trees (cap trees)");
  TreeWalker(g, visit).run();
}

std::vector<EdgeSet> spanning_trees(const Graph& g, const Caps& caps) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree(g, [&](EdgeSet t) { out.push_back(t); }, caps);
  return out;
}

namespace {

// Vertices reachable from `start` in the tree without using edge `skip`.
std::vector<char> side_of(const Graph& g, EdgeSet tree, Vertex start, int skip) {
  std::vector<char> seen(g.vertex_count() + 1, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbours(x)) {
      int k = g.edge_index(x, y);
      if (k == skip || !contains(tree, k) || seen[y]) continue;
      seen[y] = 1;
      stack.push_back(y);
    }
  }
  return seen;
}

// Edge indices on the tree path between a and b.
std::vector<int> tree_path(const Graph& g, EdgeSet tree, Vertex a, Vertex b) {
  std::vector<int> via(g.vertex_count() + 1, -1);
  std::vector<Vertex> from(g.vertex_count() + 1, 0);
  std::vector<Vertex> stack{a};
  from[a] = a;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbours(x)) {
      int k = g.edge_index(x, y);
      if (!contains(tree, k) || from[y]) continue;
      from[y] = x;
      via[y] = k;
      stack.push_back(y);
    }
  }
  std::vector<int> path;
  for (Vertex x = b; x != a; x = from[x]) path.push_back(via[x]);
  return path;
}

}  // namespace

EdgeSet externally_active_edges(const Graph& g, EdgeSet tree, const EdgeOrder& order) {
  EdgeSet active = 0;
  for (int k = 0; k < g.edge_count(); ++k) {
    if (contains(tree, k)) continue;
    const Edge& e = g.edge(k);
    auto path = tree_path(g, tree, e.u, e.v);
    if (std::all_of(path.begin(), path.end(), [&](int p) { return order.precedes(k, p); }))
      active |= EdgeSet{1} << k;
  }
  return active;
}

Activity activities(const Graph& g, EdgeSet tree, const EdgeOrder& order) {
  if (!g.is_spanning_tree(tree)) throw Error(ErrorKind::NotSpanningTree, "edge set is not a spanning tree");
  Activity a;
  a.external = cardinality(externally_active_edges(g, tree, order));
  for (int k = 0; k < g.edge_count(); ++k) {
    if (!contains(tree, k)) continue;
    auto side = side_of(g, tree, g.edge(k).u, k);
    bool minimal = true;
    for (int j = 0; j < g.edge_count() && minimal; ++j) {
      const Edge& f = g.edge(j);
      if (j != k && side[f.u] != side[f.v] && order.precedes(j, k)) minimal = false;
    }
    a.internal += minimal;
  }
  return a;
}

TuttePolynomial tutte_polynomial(const Graph& g, const EdgeOrder& order, const Caps& caps) {
  if (order.size() != static_cast<std::size_t>(g.edge_count()))
    throw Error(ErrorKind::InvalidGraph, "edge order size differs from edge count");
  TuttePolynomial t;
  for_each_spanning_tree(g, [&](EdgeSet tree) {
    Activity a = activities(g, tree, order);
    t.add_term(a.internal, a.external, 1);
  }, caps);
  return t;
}

TuttePolynomial tutte_polynomial(const Graph& g, const Caps& caps) {
  return tutte_polynomial(g, EdgeOrder::lexicographic(g), caps);
}

Polynomial external_activity_histogram(const Graph& g, const Caps& caps) {
  const EdgeOrder order = EdgeOrder::lexicographic(g);
  Polynomial h;
  for_each_spanning_tree(g, [&](EdgeSet tree) {
    h.add_term(cardinality(externally_active_edges(g, tree, order)), 1);
  }, caps);
  return h;
}

}  // namespace tiered
