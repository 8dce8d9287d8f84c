#include "tiered/sandpile.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>

#include "tiered/spanning.hpp"

namespace tiered {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "no vertex " + std::to_string(v));
}

void require_shape(const Graph& g, const Configuration& c) {
  require_vertex(g, c.sink);
  if (c.grains.size() != g.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "configuration size differs from the vertex count");
}

}  // namespace

Configuration Configuration::zero(int vertex_count, Vertex sink) {
  return {sink, IntVector::Zero(vertex_count)};
}

std::int64_t Configuration::total() const {
  std::int64_t s = grains.sum();
  return sink >= 1 && sink <= grains.size() ? s - grains(sink - 1) : s;
}

IntVector delta(const Graph& g, Vertex v) {
  require_vertex(g, v);
  IntVector d = IntVector::Zero(g.vertex_count());
  d(v - 1) = g.degree(v);
  for (Vertex w : g.neighbours(v)) d(w - 1) = -1;
  return d;
}

IntVector delta(const Graph& g, std::span<const Vertex> vertices) {
  IntVector d = IntVector::Zero(g.vertex_count());
  for (Vertex v : vertices) d += delta(g, v);
  return d;
}

bool is_non_negative(const Configuration& c) {
  for (Eigen::Index i = 0; i < c.grains.size(); ++i)
    if (i != c.sink - 1 && c.grains(i) < 0) return false;
  return true;
}

bool is_stable(const Graph& g, const Configuration& c) {
  require_shape(g, c);
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (v != c.sink && c[v] >= g.degree(v)) return false;
  return true;
}

bool can_topple(const Graph& g, const Configuration& c, Vertex v) {
  require_shape(g, c);
  require_vertex(g, v);
  return v != c.sink && is_non_negative(c) && c[v] >= g.degree(v);
}

Configuration topple(const Graph& g, const Configuration& c, Vertex v) {
  if (!can_topple(g, c, v))
    throw Error(ErrorKind::NotToppleable, "vertex " + std::to_string(v) + " cannot topple");
  Configuration out = c;
  out.grains -= delta(g, v);
  out[c.sink] = 0;
  return out;
}

Stabilization stabilize(const Graph& g, Configuration c, SelectionPolicy policy, std::uint64_t seed) {
  require_shape(g, c);
  if (!g.connected()) throw Error(ErrorKind::DisconnectedGraph, "stabilization needs a connected graph");
  if (!is_non_negative(c)) throw Error(ErrorKind::NotToppleable, "configuration has negative entries");
  c[c.sink] = 0;
  Stabilization out;
  std::mt19937_64 rng(seed);
  std::deque<Vertex> queue;
  std::vector<char> queued(g.vertex_count() + 1, 0);
  auto unstable = [&](Vertex v) { return v != c.sink && c[v] >= g.degree(v); };
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (unstable(v)) {
      queue.push_back(v);
      queued[v] = 1;
    }
  while (true) {
    Vertex v = 0;
    if (policy == SelectionPolicy::Fifo) {
      while (!queue.empty() && !v) {
        Vertex x = queue.front();
        queue.pop_front();
        queued[x] = 0;
        if (unstable(x)) v = x;
      }
    } else {
      std::vector<Vertex> candidates;
      for (Vertex x = 1; x <= g.vertex_count(); ++x)
        if (unstable(x)) candidates.push_back(x);
      if (!candidates.empty()) {
        if (policy == SelectionPolicy::LowestLabel) v = candidates.front();
        else if (policy == SelectionPolicy::HighestLabel) v = candidates.back();
        else v = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      }
    }
    if (!v) break;
    c.grains -= delta(g, v);
    c[c.sink] = 0;
    out.topplings.push_back(v);
    if (policy == SelectionPolicy::Fifo) {
      for (Vertex w : g.neighbours(v))
        if (!queued[w] && unstable(w)) {
          queue.push_back(w);
          queued[w] = 1;
        }
      if (unstable(v) && !queued[v]) {
        queue.push_back(v);
        queued[v] = 1;
      }
    }
  }
  out.config = std::move(c);
  return out;
}

Configuration max_stable(const Graph& g, Vertex sink) {
  require_vertex(g, sink);
  Configuration c = Configuration::zero(g.vertex_count(), sink);
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (v != sink) c[v] = g.degree(v) - 1;
  return c;
}

Configuration complement(const Graph& g, const Configuration& c) {
  require_shape(g, c);
  Configuration out = max_stable(g, c.sink);
  out.grains -= c.grains;
  out[c.sink] = 0;
  return out;
}

namespace {

// Burns from the sink; `fires(v, burnt_neighbours)` decides ignition.
template <typename Fires>
bool burns_completely(const Graph& g, Vertex sink, Fires fires) {
  const int n = g.vertex_count();
  std::vector<char> burnt(n + 1, 0);
  std::vector<int> burnt_neighbours(n + 1, 0);
  std::vector<Vertex> stack{sink};
  burnt[sink] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbours(x)) {
      if (burnt[y]) continue;
      ++burnt_neighbours[y];
      if (fires(y, burnt_neighbours[y])) {
        burnt[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

}  // namespace

bool is_recurrent(const Graph& g, const Configuration& c) {
  if (!is_non_negative(c) || !is_stable(g, c)) throw Error(ErrorKind::NotStable, "configuration is not stable");
  // v ignites once its grains cover the edges to unburnt vertices.
  return burns_completely(g, c.sink, [&](Vertex v, int burnt) { return c[v] >= g.degree(v) - burnt; });
}

bool is_superstable(const Graph& g, const Configuration& c) {
  require_shape(g, c);
  if (!is_non_negative(c)) return false;
  return burns_completely(g, c.sink, [&](Vertex v, int burnt) { return c[v] < burnt; });
}

bool is_g_parking(const Graph& g, const Configuration& c, const Caps& caps) {
  require_shape(g, c);
  const int n = g.vertex_count();
  if (n - 1 > caps.subset_vertices)
    throw Error(ErrorKind::CapExceeded, "subset test limited to " + std::to_string(caps.subset_vertices) + " non-sink vertices (cap subset)");
  if (!is_non_negative(c)) return false;
  std::vector<Vertex> others;
  for (Vertex v = 1; v <= n; ++v)
    if (v != c.sink) others.push_back(v);
  const int k = static_cast<int>(others.size());
  std::vector<std::uint64_t> nbr(k, 0);  // neighbours among `others`, as bits
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (g.adjacent(others[a], others[b])) nbr[a] |= std::uint64_t{1} << b;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    bool witnessed = false;
    for (int a = 0; a < k && !witnessed; ++a) {
      if (!((subset >> a) & 1u)) continue;
      const int leaving = g.degree(others[a]) - __builtin_popcountll(nbr[a] & subset);
      witnessed = c[others[a]] < leaving;
    }
    if (!witnessed) return false;
  }
  return true;
}

std::vector<Configuration> enumerate_g_parking(const Graph& g, Vertex sink, const Caps& caps) {
  require_vertex(g, sink);
  // A component missing the sink has no edges leaving it, so nothing parks.
  if (!g.connected()) return {};
  if (count_spanning_trees(g) > caps.spanning_trees)
    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(caps.spanning_trees) + " parking configurations (cap trees)");
  std::vector<Vertex> others;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (v != sink) others.push_back(v);
  // Superstables are closed downward; each is generated once from c - e_v
  // where v is its last non-zero coordinate.
  std::vector<Configuration> out;
  Configuration c = Configuration::zero(g.vertex_count(), sink);
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    out.push_back(c);
    for (std::size_t k = from; k < others.size(); ++k) {
      Vertex v = others[k];
      ++c[v];
      if (c[v] < g.degree(v) && is_superstable(g, c)) grow(k);
      --c[v];
    }
  };
  grow(0);
  return out;
}

std::vector<Configuration> enumerate_recurrent(const Graph& g, Vertex sink, const Caps& caps) {
  std::vector<Configuration> out;
  for (const Configuration& b : enumerate_g_parking(g, sink, caps)) out.push_back(complement(g, b));
  return out;
}

ParkingStatistics parking_statistics(const Graph& g, const Configuration& c) {
  require_shape(g, c);
  ParkingStatistics s;
  s.sum = c.total();
  s.reversed_sum = (g.edge_count() - g.vertex_count() + 1) - s.sum;
  return s;
}

Polynomial rs_enumerator(const Graph& g, Vertex sink, const Caps& caps) {
  Polynomial p;
  for (const Configuration& b : enumerate_g_parking(g, sink, caps))
    p.add_term(static_cast<int>(parking_statistics(g, b).reversed_sum), 1);
  return p;
}

bool is_classical_parking_function(std::span<const int> f) {
  const int n = static_cast<int>(f.size());
  std::vector<int> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k)
    if (sorted[k] < 1 || sorted[k] > k + 1) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_classical_parking_functions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 1);
  while (true) {
    if (is_classical_parking_function(f)) out.push_back(f);
    int k = n - 1;
    while (k >= 0 && f[k] == n) f[k--] = 1;
    if (k < 0) break;
    ++f[k];
  }
  return out;
}

std::vector<int> parking_function_from_preferences(std::span<const int> preferences) {
  std::vector<int> f(preferences.begin(), preferences.end());
  for (int& x : f) ++x;
  return f;
}

std::vector<int> preferences_from_parking_function(std::span<const int> f) {
  std::vector<int> p(f.begin(), f.end());
  for (int& x : p) --x;
  return p;
}

}  // namespace tiered
