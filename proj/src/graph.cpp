#include "tiered/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tiered/errors.hpp"

namespace tiered {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (n_ < 0) throw Error(ErrorKind::InvalidGraph, "negative vertex count");
  for (Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
    if (e.u < 1 || e.v > n_)
      throw Error(ErrorKind::InvalidGraph, "edge " + to_string(e) + " leaves 1.." + std::to_string(n_));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw Error(ErrorKind::InvalidGraph, "repeated edge " + to_string(*dup));
  edges_ = std::move(edges);
  adjacency_.assign(n_, {});
  index_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int k = 0; k < edge_count(); ++k) {
    const Edge& e = edges_[k];
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
    index_[(e.u - 1) * n_ + (e.v - 1)] = k;
    index_[(e.v - 1) * n_ + (e.u - 1)] = k;
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
  if (n >= 3) edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

int Graph::edge_index(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return -1;
  return index_[(a - 1) * n_ + (b - 1)];
}

EdgeSet Graph::all_edges() const {
  if (edge_count() > 64)
    throw Error(ErrorKind::CapExceeded, "edge-subset routines support at most 64 edges");
  return edge_count() == 64 ? ~EdgeSet{0} : ((EdgeSet{1} << edge_count()) - 1);
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

int Graph::component_count() const {
  DisjointSets ds(n_);
  int c = n_;
  for (const Edge& e : edges_) c -= ds.unite(e.u - 1, e.v - 1);
  return c;
}

int Graph::component_count(EdgeSet kept) const {
  DisjointSets ds(n_);
  int c = n_;
  for (int k = 0; k < edge_count(); ++k)
    if (contains(kept, k)) c -= ds.unite(edges_[k].u - 1, edges_[k].v - 1);
  return c;
}

bool Graph::is_forest(EdgeSet kept) const {
  DisjointSets ds(n_);
  for (int k = 0; k < edge_count(); ++k)
    if (contains(kept, k) && !ds.unite(edges_[k].u - 1, edges_[k].v - 1)) return false;
  return true;
}

bool Graph::is_spanning_tree(EdgeSet kept) const {
  return cardinality(kept) == n_ - 1 && is_forest(kept);
}

std::vector<Edge> Graph::edges_of(EdgeSet kept) const {
  std::vector<Edge> out;
  for (int k = 0; k < edge_count(); ++k)
    if (contains(kept, k)) out.push_back(edges_[k]);
  return out;
}

EdgeSet Graph::edge_set_of(std::span<const Edge> edges) const {
  all_edges();
  EdgeSet s = 0;
  for (const Edge& e : edges) {
    int k = edge_index(e.u, e.v);
    if (k < 0) throw Error(ErrorKind::NotSpanningTree, "edge " + to_string(make_edge(e.u, e.v)) + " is not in the graph");
    s |= EdgeSet{1} << k;
  }
  return s;
}

std::vector<Vertex> Graph::component_of(Vertex v, Vertex removed) const {
  std::vector<char> seen(n_ + 1, 0);
  std::vector<Vertex> stack{v}, out;
  seen[v] = 1;
  if (removed) seen[removed] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Vertex y : neighbours(x))
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cyclomatic_number(const Graph& g) {
  return g.edge_count() - g.vertex_count() + g.component_count();
}

bool isomorphic(const Graph& a, const Graph& b, std::span<const int> colour_a,
                std::span<const int> colour_b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto colour = [](std::span<const int> c, Vertex v) { return c.empty() ? 0 : c[v - 1]; };
  auto signature = [&](const Graph& g, std::span<const int> c, Vertex v) {
    return std::make_pair(colour(c, v), g.degree(v));
  };
  {
    std::vector<std::pair<int, int>> sa, sb;
    for (Vertex v = 1; v <= n; ++v) {
      sa.push_back(signature(a, colour_a, v));
      sb.push_back(signature(b, colour_b, v));
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Visit vertices of `a` so that each one (after the first of its component)
  // has an already-mapped neighbour.
  std::vector<Vertex> order;
  std::vector<char> placed(n + 1, 0);
  for (Vertex s = 1; s <= n; ++s) {
    if (placed[s]) continue;
    for (Vertex v : a.component_of(s)) placed[v] = 1;
    std::vector<Vertex> queue{s};
    std::vector<char> seen(n + 1, 0);
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex y : a.neighbours(queue[i]))
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
    order.insert(order.end(), queue.begin(), queue.end());
  }
  std::vector<Vertex> map(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    Vertex v = order[depth];
    for (Vertex w = 1; w <= n; ++w) {
      if (used[w] || signature(a, colour_a, v) != signature(b, colour_b, w)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        Vertex u = order[k];
        ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace tiered
