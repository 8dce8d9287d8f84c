#pragma once

// Fixtures and independent oracles shared by the unit and acceptance tests.
// Oracles deliberately avoid the library routine they check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "tiered/graph.hpp"
#include "tiered/polynomial.hpp"
#include "tiered/polyomino.hpp"
#include "tiered/sandpile.hpp"
#include "tiered/tiered_graph.hpp"

namespace fixtures {

using namespace tiered;

// Random tree on 1..n (each vertex hangs off an earlier one, then shuffled)
// plus each remaining pair with probability p.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<Edge> edges;
  for (int k = 1; k < n; ++k) {
    int parent = std::uniform_int_distribution<int>(0, k - 1)(rng);
    edges.insert(make_edge(perm[k], perm[parent]));
  }
  std::bernoulli_distribution extra(p);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (extra(rng)) edges.insert({i, j});
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

// Connected tiered graph: random surjective tiering, then a random spanning
// tree of the complete tiered graph plus extra compatible edges.
// Needs 2 <= tiers <= n, otherwise no connected tiering exists.
inline TieredGraph random_tiered_graph(int n, int tiers, double p, std::mt19937_64& rng) {
  if (tiers < 2 || tiers > n) throw std::invalid_argument("random_tiered_graph: need 2 <= tiers <= n");
  while (true) {
    std::vector<int> tier(n);
    for (int& t : tier) t = std::uniform_int_distribution<int>(1, tiers)(rng);
    std::set<int> used(tier.begin(), tier.end());
    if (static_cast<int>(used.size()) != tiers) continue;
    TieredGraph full = complete_tiered_graph(tier);
    if (!full.graph.connected()) continue;
    std::vector<Edge> pool = full.graph.edges();
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> comp(n + 1);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    std::vector<Edge> edges;
    std::bernoulli_distribution extra(p);
    for (const Edge& e : pool) {
      int a = find(e.u), b = find(e.v);
      if (a != b) {
        comp[a] = b;
        edges.push_back(e);
      } else if (extra(rng)) {
        edges.push_back(e);
      }
    }
    return {Graph(n, std::move(edges)), tier, tiers, false};
  }
}

// Tiers (1,1,2,2,2,3) with a five-edge spanning tree.
inline TieredGraph sample_tiered_tree() {
  return {Graph(6, {{3, 6}, {5, 6}, {2, 4}, {1, 3}, {4, 6}}), {1, 1, 2, 2, 2, 3}, 3, false};
}

inline LabelledPolyomino sample_polyomino() {
  LabelledPolyomino p;
  p.upper = LatticePath::parse("NNENNEENEEEEE");
  p.lower = LatticePath::parse("EENEEENENEENN");
  p.parts = {{1, 2, 3, 4, 5, 6, 9}, {8}, {7, 10, 11, 12}};
  p.labels = {{0, 0, 8, Colour::Black}, {0, 1, 11, Colour::Red}, {1, 0, 3, Colour::Blue},
              {1, 2, 7, Colour::Red},   {1, 3, 10, Colour::Red}, {2, 1, 6, Colour::Blue},
              {3, 1, 5, Colour::Blue},  {3, 4, 12, Colour::Red}, {4, 1, 4, Colour::Blue},
              {5, 2, 1, Colour::Blue},  {6, 3, 9, Colour::Blue}, {7, 3, 2, Colour::Blue}};
  return p;
}

}  // namespace fixtures

namespace oracle {

using namespace tiered;

// Deletion-contraction on a multigraph given as an edge list.
inline TuttePolynomial tutte_deletion_contraction(int n, std::vector<std::pair<int, int>> edges) {
  std::map<std::vector<std::pair<int, int>>, TuttePolynomial> memo;
  std::function<TuttePolynomial(std::vector<std::pair<int, int>>)> rec = [&](std::vector<std::pair<int, int>> es) {
    for (auto& e : es)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    if (auto it = memo.find(es); it != memo.end()) return it->second;
    TuttePolynomial out;
    if (es.empty()) {
      out.add_term(0, 0, 1);
    } else {
      auto e = es.back();
      std::vector<std::pair<int, int>> rest(es.begin(), es.end() - 1);
      auto mul = [](const TuttePolynomial& t, int dx, int dy) {
        TuttePolynomial r;
        for (const auto& [exp, c] : t.terms()) r.add_term(exp.first + dx, exp.second + dy, c);
        return r;
      };
      auto contract = [&]() {
        std::vector<std::pair<int, int>> c;
        for (auto f : rest) {
          if (f.first == e.second) f.first = e.first;
          if (f.second == e.second) f.second = e.first;
          c.push_back(f);
        }
        return c;
      };
      if (e.first == e.second) {
        out = mul(rec(rest), 0, 1);
      } else {
        // Bridge test: are the ends still connected without e?
        std::vector<int> comp(n + 1);
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        for (auto f : rest) comp[find(f.first)] = find(f.second);
        if (find(e.first) != find(e.second)) {
          out = mul(rec(contract()), 1, 0);
        } else {
          out = rec(rest);
          const TuttePolynomial contracted = rec(contract());
          for (const auto& [exp, c] : contracted.terms()) out.add_term(exp.first, exp.second, c);
        }
      }
    }
    memo[es] = out;
    return out;
  };
  return rec(std::move(edges));
}

inline TuttePolynomial tutte_deletion_contraction(const Graph& g) {
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges()) es.push_back({e.u, e.v});
  return tutte_deletion_contraction(g.vertex_count(), es);
}

// All (n-1)-edge subsets that are acyclic.
inline std::vector<EdgeSet> spanning_trees_by_subsets(const Graph& g) {
  std::vector<EdgeSet> out;
  const int e = g.edge_count(), n = g.vertex_count();
  for (EdgeSet s = 0; s < (EdgeSet{1} << e); ++s) {
    if (__builtin_popcountll(s) != n - 1) continue;
    std::vector<int> comp(n + 1);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    bool acyclic = true;
    for (int k = 0; k < e && acyclic; ++k) {
      if (!((s >> k) & 1u)) continue;
      int a = find(g.edge(k).u), b = find(g.edge(k).v);
      if (a == b) acyclic = false;
      else comp[a] = b;
    }
    if (acyclic) out.push_back(s);
  }
  return out;
}

// Recurrence by definition: with the sink holding deg(sink) grains, some
// non-empty sequence of legal topplings (the sink included) returns to c.
inline bool recurrent_by_cycle_search(const Graph& g, const Configuration& c) {
  const int n = g.vertex_count();
  std::vector<std::int64_t> start(n);
  for (Vertex v = 1; v <= n; ++v) start[v - 1] = v == c.sink ? g.degree(v) : c[v];
  std::set<std::vector<std::int64_t>> seen;
  std::queue<std::vector<std::int64_t>> queue;
  auto moves = [&](const std::vector<std::int64_t>& s) {
    std::vector<std::vector<std::int64_t>> out;
    for (Vertex v = 1; v <= n; ++v) {
      if (s[v - 1] < g.degree(v)) continue;
      auto t = s;
      t[v - 1] -= g.degree(v);
      for (Vertex w : g.neighbours(v)) t[w - 1] += 1;
      out.push_back(std::move(t));
    }
    return out;
  };
  for (auto& t : moves(start)) {
    if (seen.insert(t).second) queue.push(t);
  }
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop();
    if (s == start) return true;
    for (auto& t : moves(s))
      if (seen.insert(t).second) queue.push(t);
  }
  return false;
}

// Cars with preferences 1..n take the first free spot at or after it.
inline bool parks_on_street(const std::vector<int>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<char> taken(n + 1, 0);
  for (int want : f) {
    int spot = want;
    while (spot <= n && taken[spot]) ++spot;
    if (spot > n) return false;
    taken[spot] = 1;
  }
  return true;
}

// Every pair of lattice paths and every placement of labels, filtered by
// validate_lpp.
inline std::vector<LabelledPolyomino> lpps_by_brute_force(const OrderedSetPartition& u) {
  const int m = static_cast<int>(u.blue.size()) + 1, n = static_cast<int>(u.red.size()) + 1;
  std::vector<std::string> paths;
  std::string word = std::string(m, 'E') + std::string(n, 'N');
  std::sort(word.begin(), word.end());
  do paths.push_back(word);
  while (std::next_permutation(word.begin(), word.end()));
  std::vector<LabelledPolyomino> out;
  for (const auto& up : paths) {
    for (const auto& low : paths) {
      LabelledPolyomino base;
      base.upper = LatticePath::parse(up);
      base.lower = LatticePath::parse(low);
      base.parts = u;
      // Cells under each lower E step and left of each upper N step.
      std::vector<std::pair<int, int>> blue_cells, red_cells;
      int x = 0, y = 0;
      for (char ch : low) {
        if (ch == 'E') blue_cells.push_back({x++, y});
        else ++y;
      }
      x = y = 0;
      for (char ch : up) {
        if (ch == 'N') red_cells.push_back({x, y++});
        else ++x;
      }
      if (!validate_lpp(base).empty() && validate_lpp(base).front().find("touch") != std::string::npos) continue;
      std::vector<int> blues = u.blue, reds = u.red;
      do {
        do {
          LabelledPolyomino p = base;
          p.labels.push_back({0, 0, u.sink(), Colour::Black});
          for (std::size_t k = 0; k < blues.size(); ++k)
            p.labels.push_back({blue_cells[k + 1].first, blue_cells[k + 1].second, blues[k], Colour::Blue});
          for (std::size_t k = 0; k < reds.size(); ++k)
            p.labels.push_back({red_cells[k + 1].first, red_cells[k + 1].second, reds[k], Colour::Red});
          std::sort(p.labels.begin(), p.labels.end(), [](const CellLabel& a, const CellLabel& b) {
            return std::tie(a.column, a.row) < std::tie(b.column, b.row);
          });
          if (validate_lpp(p).empty()) out.push_back(std::move(p));
        } while (std::next_permutation(reds.begin(), reds.end()));
      } while (std::next_permutation(blues.begin(), blues.end()));
    }
  }
  return out;
}

// Area by scanning each cell: walk left along its row to the row's label and
// down its column to the column's label.
inline int area_by_cell_scan(const LabelledPolyomino& p) {
  std::map<std::pair<int, int>, int> at;
  for (const CellLabel& l : p.labels) at[{l.column, l.row}] = l.label;
  std::vector<int> bottom(p.lower.width()), top(p.upper.width());
  int x = 0, y = 0;
  for (char ch : p.lower.steps()) (ch == 'E') ? void(bottom[x++] = y) : void(++y);
  x = y = 0;
  for (char ch : p.upper.steps()) (ch == 'E') ? void(top[x++] = y - 1) : void(++y);
  int count = 0;
  for (int c = 0; c < p.lower.width(); ++c)
    for (int r = bottom[c]; r <= top[c]; ++r) {
      if (at.count({c, r})) continue;
      int lc = c;
      while (!at.count({lc, r})) --lc;
      int lr = r;
      while (!at.count({c, lr})) --lr;
      const int row_label = at[{lc, r}], column_label = at[{c, lr}];
      count += row_label > column_label;
    }
  return count;
}

}  // namespace oracle
