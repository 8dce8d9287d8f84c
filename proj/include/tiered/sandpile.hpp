#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tiered/errors.hpp"
#include "tiered/graph.hpp"
#include "tiered/polynomial.hpp"

namespace tiered {

// Grains on every vertex; grains(v - 1) is vertex v. The sink entry is
// carried as zero and never read.
struct Configuration {
  Vertex sink = 0;
  IntVector grains;

  static Configuration zero(int vertex_count, Vertex sink);
  std::int64_t operator[](Vertex v) const { return grains(v - 1); }
  std::int64_t& operator[](Vertex v) { return grains(v - 1); }
  std::int64_t total() const;  // non-sink grains

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.sink == b.sink && a.grains == b.grains;
  }
};

// Column of the Laplacian: deg(v) at v, -1 at each neighbour.
IntVector delta(const Graph& g, Vertex v);
IntVector delta(const Graph& g, std::span<const Vertex> vertices);

bool is_non_negative(const Configuration& c);
bool is_stable(const Graph& g, const Configuration& c);
bool can_topple(const Graph& g, const Configuration& c, Vertex v);

// c - delta(v) off the sink. Throws UnknownVertex, NotToppleable.
Configuration topple(const Graph& g, const Configuration& c, Vertex v);

enum class SelectionPolicy { LowestLabel, HighestLabel, Fifo, Random };

struct Stabilization {
  Configuration config;
  std::vector<Vertex> topplings;
};
// Topples unstable vertices, chosen by `policy`, until stable.
// Throws DisconnectedGraph.
Stabilization stabilize(const Graph& g, Configuration c,
                        SelectionPolicy policy = SelectionPolicy::LowestLabel, std::uint64_t seed = 0);

// deg(v) - 1 everywhere off the sink.
Configuration max_stable(const Graph& g, Vertex sink);
// c_max - c.
Configuration complement(const Graph& g, const Configuration& c);

// Burning test. Throws NotStable.
bool is_recurrent(const Graph& g, const Configuration& c);

// Definition: every non-empty set I of non-sink vertices has some i in I
// with c(i) < #{edges from i leaving I}. Exhaustive over subsets; throws
// CapExceeded above caps.subset_vertices non-sink vertices.
bool is_g_parking(const Graph& g, const Configuration& c, const Caps& caps = {});
// Same predicate by burning from the sink.
bool is_superstable(const Graph& g, const Configuration& c);

// All G-parking configurations, in a fixed order. Throws CapExceeded when
// their number (the spanning tree count) exceeds caps.spanning_trees. Empty
// on a disconnected graph.
std::vector<Configuration> enumerate_g_parking(const Graph& g, Vertex sink, const Caps& caps = {});
std::vector<Configuration> enumerate_recurrent(const Graph& g, Vertex sink, const Caps& caps = {});

struct ParkingStatistics {
  std::int64_t sum = 0;           // s(b)
  std::int64_t reversed_sum = 0;  // g - s(b), g = e - v + 1
};
ParkingStatistics parking_statistics(const Graph& g, const Configuration& c);

// Sum over G-parking b of q^(g - s(b)).
Polynomial rs_enumerator(const Graph& g, Vertex sink, const Caps& caps = {});

// Classical parking functions: values in 1..n, sorted a_(k) <= k.
bool is_classical_parking_function(std::span<const int> f);
std::vector<std::vector<int>> enumerate_classical_parking_functions(int n);
// Street preferences 0..n-1 are parking configurations on K_(n+1) with
// sink 0; a classical parking function is the same data shifted by one.
std::vector<int> parking_function_from_preferences(std::span<const int> preferences);
std::vector<int> preferences_from_parking_function(std::span<const int> f);

}  // namespace tiered
