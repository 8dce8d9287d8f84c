#include "tiered/whitney.hpp"

#include <algorithm>
#include <set>

namespace tiered {

namespace {

void require_vertex(const TieredGraph& g, Vertex v, const char* side) {
  if (!g.graph.has_vertex(v))
    throw Error(ErrorKind::UnknownVertex, std::string(side) + " graph has no vertex " + std::to_string(v));
}

}  // namespace

Glued glue(const TieredGraph& g1, const TieredGraph& g2, std::span<const Attachment> pairs) {
  if (pairs.empty()) throw Error(ErrorKind::InvalidAttachment, "nothing to glue");
  std::set<Vertex> seen_left, seen_right;
  for (const Attachment& p : pairs) {
    require_vertex(g1, p.left, "first");
    require_vertex(g2, p.right, "second");
    if (!seen_left.insert(p.left).second || !seen_right.insert(p.right).second)
      throw Error(ErrorKind::OverlappingVertexSets, "a vertex is attached twice");
  }
  std::vector<Attachment> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.left < b.left; });
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (sorted[k].right < sorted[k - 1].right)
      throw Error(ErrorKind::InvalidAttachment, "attachment reverses the label order");
  const int offset = g1.tier_of(sorted[0].left) - g2.tier_of(sorted[0].right);
  for (const Attachment& p : sorted)
    if (g1.tier_of(p.left) - g2.tier_of(p.right) != offset)
      throw Error(ErrorKind::InvalidAttachment, "attached vertices have different tier offsets");

  // Label layout: blocks of g1 and g2 between consecutive merged vertices.
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Vertex> left(n1 + 1, 0), right(n2 + 1, 0);
  Vertex next = 1, a = 1, b = 1;
  for (std::size_t k = 0; k <= sorted.size(); ++k) {
    const Vertex stop_a = k < sorted.size() ? sorted[k].left : n1 + 1;
    const Vertex stop_b = k < sorted.size() ? sorted[k].right : n2 + 1;
    for (; a < stop_a; ++a) left[a] = next++;
    for (; b < stop_b; ++b) right[b] = next++;
    if (k < sorted.size()) {
      left[a++] = next;
      right[b++] = next++;
    }
  }
  const int n = next - 1;
  const int low = std::min(1, 1 + offset);
  const int shift1 = 1 - low, shift2 = offset + 1 - low;
  std::vector<int> tier(n, 0);
  for (Vertex v = 1; v <= n1; ++v) tier[left[v] - 1] = g1.tier_of(v) + shift1;
  for (Vertex v = 1; v <= n2; ++v) tier[right[v] - 1] = g2.tier_of(v) + shift2;
  const int tiers = std::max(g1.tiers + shift1, g2.tiers + shift2);

  std::set<Edge> edges;
  for (const Edge& e : g1.graph.edges()) edges.insert(make_edge(left[e.u], left[e.v]));
  for (const Edge& e : g2.graph.edges())
    if (!edges.insert(make_edge(right[e.u], right[e.v])).second)
      throw Error(ErrorKind::InvalidAttachment, "both graphs contain the merged edge " +
                                                    to_string(make_edge(right[e.u], right[e.v])));
  Glued out;
  out.graph = {Graph(n, std::vector<Edge>(edges.begin(), edges.end())), std::move(tier), tiers,
               g1.empty_tiers_allowed || g2.empty_tiers_allowed};
  out.left_map = std::move(left);
  out.right_map = std::move(right);
  return out;
}

TieredGraph identify(const TieredGraph& g1, Vertex v1, const TieredGraph& g2, Vertex v2) {
  const Attachment p{v1, v2};
  return glue(g1, g2, std::span(&p, 1)).graph;
}

namespace {

// Induced subgraph on `keep` (sorted), relabelled in order, tiers compressed.
TieredGraph induced(const TieredGraph& g, const std::vector<Vertex>& keep, std::vector<Vertex>& map) {
  map.assign(g.vertex_count() + 1, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) map[keep[k]] = static_cast<Vertex>(k + 1);
  std::vector<Edge> edges;
  for (const Edge& e : g.graph.edges())
    if (map[e.u] && map[e.v]) edges.push_back({map[e.u], map[e.v]});
  std::vector<int> tier;
  for (Vertex v : keep) tier.push_back(g.tier_of(v));
  return compress_tiers({Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(tier), g.tiers, false});
}

}  // namespace

Cleft cleave(const TieredGraph& g, Vertex v) {
  require_vertex(g, v, "input");
  if (!g.graph.connected()) throw Error(ErrorKind::DisconnectedGraph, "cleave needs a connected graph");
  const int n = g.vertex_count();
  Vertex start = v == 1 ? 2 : 1;
  if (n < 3) throw Error(ErrorKind::NotACutVertex, "vertex " + std::to_string(v) + " does not separate the graph");
  std::vector<Vertex> first = g.graph.component_of(start, v);
  if (static_cast<int>(first.size()) == n - 1)
    throw Error(ErrorKind::NotACutVertex, "vertex " + std::to_string(v) + " does not separate the graph");
  std::vector<char> in_first(n + 1, 0);
  for (Vertex x : first) in_first[x] = 1;
  std::vector<Vertex> second;
  for (Vertex x = 1; x <= n; ++x)
    if (x != v && !in_first[x]) second.push_back(x);
  first.push_back(v);
  second.push_back(v);
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  std::vector<Vertex> m1, m2;
  Cleft out{induced(g, first, m1), induced(g, second, m2), 0, 0};
  out.first_vertex = m1[v];
  out.second_vertex = m2[v];
  return out;
}

TieredGraph two_sum(const TieredGraph& g1, Vertex u1, Vertex v1, const TieredGraph& g2, Vertex u2, Vertex v2) {
  const Attachment p[2] = {{u1, u2}, {v1, v2}};
  return glue(g1, g2, p).graph;
}

TieredGraph twist(const TieredGraph& g1, Vertex u1, Vertex v1, const TieredGraph& g2, Vertex u2, Vertex v2) {
  two_sum(g1, u1, v1, g2, u2, v2);
  const int n2 = g2.vertex_count();
  const Attachment p[2] = {{u1, reflect_vertex(n2, v2)}, {v1, reflect_vertex(n2, u2)}};
  return glue(g1, reflect(g2), p).graph;
}

}  // namespace tiered
