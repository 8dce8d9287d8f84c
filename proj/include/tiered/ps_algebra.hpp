#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tiered/errors.hpp"
#include "tiered/graph.hpp"
#include "tiered/polynomial.hpp"
#include "tiered/tiered_graph.hpp"

namespace tiered {

// Bit v-1 is vertex v.
using VertexSet = std::uint64_t;

// Edges from i to vertices outside I. Throws VertexNotInSubset.
int d_subset_degree(const Graph& g, VertexSet subset, Vertex i);

struct Monomial {
  std::vector<int> exponents;  // exponents[v - 1]; the sink exponent is 0
  int degree() const;
  bool divides(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// m_I = prod_{i in I} x_i^{d_I(i)} over non-empty I avoiding the sink.
std::vector<Monomial> monomial_ideal_generators(const Graph& g, Vertex sink, const Caps& caps = {});
// Monomials divisible by no m_I.
std::vector<Monomial> standard_monomials(const Graph& g, Vertex sink, const Caps& caps = {});

// p_I = (sum_{i in I} x_i)^{D_I + 1}, D_I = edges between I and its complement.
struct PowerGenerator {
  VertexSet support = 0;
  int exponent = 0;
};
std::vector<PowerGenerator> power_ideal_generators(const Graph& g, Vertex sink, const Caps& caps = {});

// Graded dimensions of the quotients by the monomial and power ideals. The
// monomial quotient counts spanning trees; with exponents D_I + 1 the power
// quotient counts spanning forests and has series s^{e - v + c} T(1 + s, 1/s).
Polynomial monomial_quotient_dims(const Graph& g, Vertex sink, const Caps& caps = {});
Polynomial power_quotient_dims(const Graph& g, Vertex sink, const Caps& caps = {});

// Edge subsets H whose complement is a connected spanning subgraph,
// grouped by |H|; each group ascending. Throws CapExceeded above
// caps.slim_edges edges.
std::vector<std::vector<EdgeSet>> slim_subgraphs(const Graph& g, const Caps& caps = {});

// c(i, e) = +1 when i is the smaller end of e, -1 when the larger, else 0.
IntMatrix c_algebra_generators(const Graph& g);

// Graded dimensions of the algebra generated by X_i = sum_e c(i, e) phi_e,
// where phi_e^2 = 0 and phi_H = 0 unless H is slim.
Polynomial c_algebra_graded_dims(const Graph& g, const Caps& caps = {});

// s^{e - v + c} T(1, 1/s). Throws NonPolynomialResult.
Polynomial hilbert_via_tutte(const Graph& g, const Caps& caps = {});
// s^{e - v + c} T(1 + s, 1/s): sums to T(2, 1), the forest count, and is
// the series of power_quotient_dims. Throws NonPolynomialResult.
Polynomial forest_hilbert_via_tutte(const Graph& g, const Caps& caps = {});
// h[k] = #{T : external activity = e - v + c - k}, lexicographic order.
Polynomial external_activity_profile(const Graph& g, const Caps& caps = {});

// Graded dimensions of span{ prod_{(i,j) in H} (z_i - z_j) : H slim }.
// Throws NotCompleteTiered, CapExceeded above caps.rank_vertices vertices.
Polynomial s_space_graded_dims(const TieredGraph& g, const Caps& caps = {});

// The products over H = E \ (T + externally active edges of T) span the
// same graded space.
struct SpanningLemmaReport {
  Polynomial spanned;
  Polynomial space;
  bool holds() const { return spanned == space; }
};
SpanningLemmaReport spanning_lemma_check(const TieredGraph& g, const Caps& caps = {});

struct GradedAlgebraReport {
  Polynomial c_dims;
  Polynomial hilbert;
  Polynomial external_activity;
  Integer tree_count;
  std::optional<Polynomial> s_dims;
  std::optional<Polynomial> power_dims;
  std::optional<Polynomial> monomial_dims;

  // c_dims, hilbert and external_activity agree and sum to tree_count.
  bool tutte_match() const;
  std::optional<bool> s_space_match() const;
};

// S_G is included for complete tiered graphs; the ideal quotients when the
// graph is within caps.rank_vertices.
GradedAlgebraReport graded_algebra_report(const TieredGraph& g, Vertex sink, const Caps& caps = {});
GradedAlgebraReport graded_algebra_report(const Graph& g, Vertex sink, const Caps& caps = {});

}  // namespace tiered
