#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tiered/sandpile.hpp"
#include "tiered/spanning.hpp"

using namespace tiered;

namespace {

// Every stable configuration with the given sink.
std::vector<Configuration> stable_configurations(const Graph& g, Vertex sink) {
  std::vector<Configuration> out;
  Configuration c = Configuration::zero(g.vertex_count(), sink);
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (v > g.vertex_count()) {
      out.push_back(c);
      return;
    }
    if (v == sink) return rec(v + 1);
    for (int k = 0; k < g.degree(v); ++k) {
      c[v] = k;
      rec(v + 1);
    }
    c[v] = 0;
  };
  rec(1);
  return out;
}

}  // namespace

TEST_CASE("delta is a Laplacian column") {
  std::mt19937_64 rng(2);
  Graph g = fixtures::random_connected_graph(6, 0.4, rng);
  const auto l = laplacian<std::int64_t>(g);
  for (Vertex v = 1; v <= 6; ++v) CHECK(delta(g, v) == l.col(v - 1));
  std::vector<Vertex> all{1, 2, 3, 4, 5, 6};
  CHECK(delta(g, all).isZero());
}

TEST_CASE("toppling on the triangle") {
  Graph k3 = Graph::complete(3);
  Configuration c = Configuration::zero(3, 3);
  c[1] = 2;
  Configuration t = topple(k3, c, 1);
  CHECK(t[1] == 0);
  CHECK(t[2] == 1);
  CHECK_THROWS_AS(topple(k3, t, 1), Error);
  CHECK_THROWS_AS(topple(k3, c, 3), Error);
  CHECK_THROWS_AS(topple(k3, c, 4), Error);
}

TEST_CASE("recurrent and parking configurations on the triangle") {
  Graph k3 = Graph::complete(3);
  Configuration a = Configuration::zero(3, 3);
  a[1] = 1;
  a[2] = 1;
  CHECK(is_recurrent(k3, a));
  Configuration b = Configuration::zero(3, 3);
  b[1] = 1;
  CHECK(is_g_parking(k3, b));
  Configuration both = Configuration::zero(3, 3);
  both[1] = 1;
  both[2] = 1;
  CHECK_FALSE(is_g_parking(k3, both));
  CHECK(enumerate_g_parking(k3, 3).size() == 3);
  Configuration unstable = Configuration::zero(3, 3);
  unstable[1] = 2;
  CHECK_THROWS_AS(is_recurrent(k3, unstable), Error);
}

TEST_CASE("burning test agrees with the cycle-search definition") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = fixtures::random_connected_graph(3 + trial % 4, 0.4, rng);
    const Vertex sink = 1 + static_cast<int>(rng() % g.vertex_count());
    for (const Configuration& c : stable_configurations(g, sink))
      CHECK(is_recurrent(g, c) == oracle::recurrent_by_cycle_search(g, c));
  }
}

TEST_CASE("subset definition, burning and enumeration of parking configurations agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = fixtures::random_connected_graph(3 + trial % 5, 0.5, rng);
    const Vertex sink = 1 + static_cast<int>(rng() % g.vertex_count());
    int parking = 0, recurrent = 0;
    for (const Configuration& c : stable_configurations(g, sink)) {
      const bool p = is_g_parking(g, c);
      CHECK(p == is_superstable(g, c));
      CHECK(p == is_recurrent(g, complement(g, c)));
      parking += p;
      recurrent += is_recurrent(g, c);
    }
    CHECK(parking == static_cast<int>(enumerate_g_parking(g, sink).size()));
    CHECK(recurrent == parking);
    CHECK(count_spanning_trees(g) == parking);
  }
}

TEST_CASE("stabilization is independent of the toppling policy") {
  std::mt19937_64 rng(31);
  Graph g = fixtures::random_connected_graph(6, 0.5, rng);
  for (int trial = 0; trial < 30; ++trial) {
    Configuration c = Configuration::zero(6, 1);
    for (Vertex v = 2; v <= 6; ++v) c[v] = static_cast<std::int64_t>(rng() % 12);
    auto low = stabilize(g, c, SelectionPolicy::LowestLabel);
    CHECK(is_stable(g, low.config));
    for (auto policy : {SelectionPolicy::HighestLabel, SelectionPolicy::Fifo, SelectionPolicy::Random}) {
      auto other = stabilize(g, c, policy, trial);
      CHECK(other.config == low.config);
      // The toppling multiset is also policy independent.
      auto a = low.topplings, b = other.topplings;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("classical parking functions") {
  CHECK(is_classical_parking_function(std::vector<int>{1, 1, 2}));
  CHECK_FALSE(is_classical_parking_function(std::vector<int>{2, 2, 3}));
  const int expected[] = {1, 1, 3, 16, 125, 1296};
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerate_classical_parking_functions(n);
    CHECK(static_cast<int>(all.size()) == expected[n]);
    for (const auto& f : all) CHECK(oracle::parks_on_street(f));
  }
  // Every sequence that parks is listed.
  int parks = 0;
  std::vector<int> f(4, 1);
  while (true) {
    parks += oracle::parks_on_street(f);
    int k = 3;
    while (k >= 0 && f[k] == 4) f[k--] = 1;
    if (k < 0) break;
    ++f[k];
  }
  CHECK(parks == 125);
}

TEST_CASE("street preferences are parking configurations on the complete graph") {
  // K_(n+1) with sink n+1: preference p_i <-> configuration c(i) = p_i.
  const int n = 4;
  Graph k = Graph::complete(n + 1);
  int agree = 0;
  for (const auto& f : enumerate_classical_parking_functions(n)) {
    auto pref = preferences_from_parking_function(f);
    CHECK(parking_function_from_preferences(pref) == f);
    Configuration c = Configuration::zero(n + 1, n + 1);
    for (int i = 0; i < n; ++i) c[i + 1] = pref[i];
    agree += is_g_parking(k, c);
  }
  CHECK(agree == 125);
}

TEST_CASE("reversed-sum enumerator is T(1, q)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = fixtures::random_connected_graph(3 + trial % 5, 0.45, rng);
    const Vertex sink = 1 + static_cast<int>(rng() % g.vertex_count());
    CHECK(rs_enumerator(g, sink) == oracle::tutte_deletion_contraction(g).at_x_equals_one());
  }
}

TEST_CASE("subset test honours its cap") {
  Caps tight;
  tight.subset_vertices = 3;
  Graph g = Graph::path(6);
  try {
    is_g_parking(g, Configuration::zero(6, 1), tight);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}
