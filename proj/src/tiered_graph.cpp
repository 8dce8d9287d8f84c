#include "tiered/tiered_graph.hpp"

#include <algorithm>
#include <set>

namespace tiered {

std::vector<std::string> validate_tiered_graph(const TieredGraph& g) {
  std::vector<std::string> out;
  const int n = g.vertex_count();
  if (static_cast<int>(g.tier.size()) != n) {
    out.push_back("tier vector has " + std::to_string(g.tier.size()) + " entries for " +
                  std::to_string(n) + " vertices");
    return out;
  }
  if (g.tiers < 1 && n > 0) out.push_back("tier count must be positive");
  std::vector<char> used(std::max(g.tiers, 0) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    int t = g.tier_of(v);
    if (t < 1 || t > g.tiers)
      out.push_back("vertex " + std::to_string(v) + " has tier " + std::to_string(t) +
                    " outside 1.." + std::to_string(g.tiers));
    else
      used[t] = 1;
  }
  for (const Edge& e : g.graph.edges()) {
    int tu = g.tier_of(e.u), tv = g.tier_of(e.v);
    if (tu == tv)
      out.push_back("edge " + to_string(e) + " joins two vertices of tier " + std::to_string(tu));
    else if (tu > tv)
      out.push_back("edge " + to_string(e) + " has t(" + std::to_string(e.u) + ")=" +
                    std::to_string(tu) + " > t(" + std::to_string(e.v) + ")=" + std::to_string(tv));
  }
  if (!g.empty_tiers_allowed)
    for (int t = 1; t <= g.tiers; ++t)
      if (!used[t]) out.push_back("tier " + std::to_string(t) + " is empty");
  return out;
}

bool compatible(std::span<const int> tier, Vertex i, Vertex j) {
  const int ti = tier[i - 1], tj = tier[j - 1];
  return (i < j && ti < tj) || (i > j && ti > tj);
}

namespace {

int tier_count_checked(std::span<const int> tier) {
  int m = 0;
  for (int t : tier) {
    if (t < 1) throw Error(ErrorKind::NonSurjectiveTiering, "tiers start at 1");
    m = std::max(m, t);
  }
  std::set<int> seen(tier.begin(), tier.end());
  if (static_cast<int>(seen.size()) != m)
    throw Error(ErrorKind::NonSurjectiveTiering, "some tier in 1.." + std::to_string(m) + " is unused");
  return m;
}

void require_tree(const TieredGraph& t) {
  if (!is_tree(t.graph)) throw Error(ErrorKind::NotATree, "input is not a tree");
}

}  // namespace

TieredGraph complete_tiered_graph(std::span<const int> tier) {
  const int m = tier_count_checked(tier);
  const int n = static_cast<int>(tier.size());
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (compatible(tier, i, j)) edges.push_back({i, j});
  return {Graph(n, std::move(edges)), std::vector<int>(tier.begin(), tier.end()), m, false};
}

bool is_complete_tiered(const TieredGraph& g) {
  if (!is_valid(g)) return false;
  const int n = g.vertex_count();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (compatible(g.tier, i, j) != g.graph.adjacent(i, j)) return false;
  return true;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && g.connected();
}

std::vector<Edge> compatible_pairs(const TieredGraph& tree) {
  require_tree(tree);
  std::vector<Edge> out;
  const int n = tree.vertex_count();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (compatible(tree.tier, i, j) && !tree.graph.adjacent(i, j)) out.push_back({i, j});
  return out;
}

TieredGraph compatibility_graph(const TieredGraph& tree) {
  std::vector<Edge> edges = compatible_pairs(tree);
  edges.insert(edges.end(), tree.graph.edges().begin(), tree.graph.edges().end());
  return {Graph(tree.vertex_count(), std::move(edges)), tree.tier, tree.tiers, tree.empty_tiers_allowed};
}

TieredGraph reflect(const TieredGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> tier(n);
  for (Vertex i = 1; i <= n; ++i) tier[i - 1] = g.tiers + 1 - g.tier_of(reflect_vertex(n, i));
  std::vector<Edge> edges;
  for (const Edge& e : g.graph.edges()) edges.push_back(make_edge(reflect_vertex(n, e.u), reflect_vertex(n, e.v)));
  return {Graph(n, std::move(edges)), std::move(tier), g.tiers, g.empty_tiers_allowed};
}

TieredGraph dual_graph(const TieredGraph& g) {
  if (g.tiers < 2) throw Error(ErrorKind::TooFewTiers, "the dual needs at least two tiers");
  return reflect(g);
}

std::vector<Edge> forest_dual(int vertex_count, std::span<const Edge> forest) {
  std::vector<Edge> out;
  for (const Edge& e : forest)
    out.push_back(make_edge(reflect_vertex(vertex_count, e.u), reflect_vertex(vertex_count, e.v)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> spanning_forests(const Graph& g, const Caps& caps) {
  if (g.edge_count() > caps.slim_edges)
    throw Error(ErrorKind::CapExceeded, "forest enumeration limited to " + std::to_string(caps.slim_edges) + " edges (cap edges)");
  std::vector<EdgeSet> out;
  const EdgeSet all = g.all_edges();
  for (EdgeSet s = 0;; s = (s - all) & all) {  // increasing subsets of `all`
    if (g.is_forest(s)) out.push_back(s);
    if (s == all) break;
  }
  return out;
}

TieredGraph compress_tiers(const TieredGraph& g) {
  std::set<int> used(g.tier.begin(), g.tier.end());
  std::vector<int> rank(g.tiers + 2, 0);
  int k = 0;
  for (int t : used) rank[t] = ++k;
  TieredGraph out = g;
  for (int& t : out.tier) t = rank[t];
  out.tiers = k;
  out.empty_tiers_allowed = false;
  return out;
}

bool tiered_isomorphic(const TieredGraph& a, const TieredGraph& b) {
  TieredGraph ca = compress_tiers(a), cb = compress_tiers(b);
  return ca.tiers == cb.tiers && isomorphic(ca.graph, cb.graph, ca.tier, cb.tier);
}

}  // namespace tiered
