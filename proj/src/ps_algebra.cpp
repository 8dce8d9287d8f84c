#include "tiered/ps_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "tiered/spanning.hpp"

namespace tiered {

namespace {

bool in(VertexSet s, Vertex v) { return (s >> (v - 1)) & 1u; }

std::vector<Vertex> non_sink(const Graph& g, Vertex sink) {
  if (!g.has_vertex(sink)) throw Error(ErrorKind::UnknownVertex, "no sink " + std::to_string(sink));
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (v != sink) out.push_back(v);
  return out;
}

void require_subset_cap(const Graph& g, const Caps& caps) {
  if (g.vertex_count() - 1 > caps.subset_vertices)
    throw Error(ErrorKind::CapExceeded, "subset enumeration limited to " + std::to_string(caps.subset_vertices) +
                                            " non-sink vertices (cap subset)");
}

void require_rank_cap(const Graph& g, const Caps& caps) {
  if (g.vertex_count() > caps.rank_vertices)
    throw Error(ErrorKind::CapExceeded, "graded ranks limited to " + std::to_string(caps.rank_vertices) + " vertices (cap rank)");
}

// Non-empty subsets of `others`, as vertex masks.
template <typename Visit>
void for_each_subset(const std::vector<Vertex>& others, Visit visit) {
  const std::uint64_t count = std::uint64_t{1} << others.size();
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    VertexSet s = 0;
    for (std::size_t k = 0; k < others.size(); ++k)
      if ((bits >> k) & 1u) s |= VertexSet{1} << (others[k] - 1);
    visit(s);
  }
}

// Exponent vectors of total degree d over `vars` variables.
std::vector<std::vector<int>> compositions(int vars, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(vars, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == vars - 1) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[k] = x;
      rec(k + 1, left - x);
    }
  };
  if (vars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int d_subset_degree(const Graph& g, VertexSet subset, Vertex i) {
  if (!g.has_vertex(i)) throw Error(ErrorKind::UnknownVertex, "no vertex " + std::to_string(i));
  if (!in(subset, i)) throw Error(ErrorKind::VertexNotInSubset, "vertex " + std::to_string(i) + " is not in the subset");
  int d = 0;
  for (Vertex w : g.neighbours(i)) d += !in(subset, w);
  return d;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exponents.size(); ++k)
    if (exponents[k] > other.exponents[k]) return false;
  return true;
}

std::vector<Monomial> monomial_ideal_generators(const Graph& g, Vertex sink, const Caps& caps) {
  require_subset_cap(g, caps);
  std::vector<Monomial> out;
  for_each_subset(non_sink(g, sink), [&](VertexSet s) {
    Monomial m{std::vector<int>(g.vertex_count(), 0)};
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
      if (in(s, v)) m.exponents[v - 1] = d_subset_degree(g, s, v);
    out.push_back(std::move(m));
  });
  return out;
}

std::vector<Monomial> standard_monomials(const Graph& g, Vertex sink, const Caps& caps) {
  require_rank_cap(g, caps);
  const auto generators = monomial_ideal_generators(g, sink, caps);
  const auto others = non_sink(g, sink);
  std::vector<Monomial> out;
  Monomial m{std::vector<int>(g.vertex_count(), 0)};
  // x_i^{deg i} is a generator (I = {i}), so exponents stay below deg i.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == others.size()) {
      if (std::none_of(generators.begin(), generators.end(), [&](const Monomial& gen) { return gen.divides(m); }))
        out.push_back(m);
      return;
    }
    for (int e = 0; e < std::max(g.degree(others[k]), 1); ++e) {
      m.exponents[others[k] - 1] = e;
      rec(k + 1);
    }
    m.exponents[others[k] - 1] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PowerGenerator> power_ideal_generators(const Graph& g, Vertex sink, const Caps& caps) {
  require_subset_cap(g, caps);
  std::vector<PowerGenerator> out;
  for_each_subset(non_sink(g, sink), [&](VertexSet s) {
    int cut = 0;
    for (const Edge& e : g.edges()) cut += in(s, e.u) != in(s, e.v);
    out.push_back({s, cut + 1});
  });
  return out;
}

Polynomial monomial_quotient_dims(const Graph& g, Vertex sink, const Caps& caps) {
  Polynomial p;
  for (const Monomial& m : standard_monomials(g, sink, caps)) p.add_term(m.degree(), 1);
  return p;
}

Polynomial power_quotient_dims(const Graph& g, Vertex sink, const Caps& caps) {
  require_rank_cap(g, caps);
  const auto others = non_sink(g, sink);
  const int vars = static_cast<int>(others.size());
  const auto generators = power_ideal_generators(g, sink, caps);
  std::vector<int> slot(g.vertex_count() + 1, -1);
  for (int k = 0; k < vars; ++k) slot[others[k]] = k;

  // Multinomial expansion of (sum_{i in I} x_i)^p as exponent vector -> coefficient.
  auto expand = [&](VertexSet s, int p) {
    std::vector<int> support;
    for (Vertex v : others)
      if (in(s, v)) support.push_back(slot[v]);
    std::vector<std::pair<std::vector<int>, Integer>> terms;
    for (const auto& c : compositions(static_cast<int>(support.size()), p)) {
      Integer coef = 1;
      int left = p;
      for (int part : c) {
        coef *= binomial(left, part);
        left -= part;
      }
      std::vector<int> e(vars, 0);
      for (std::size_t k = 0; k < support.size(); ++k) e[support[k]] = c[k];
      terms.push_back({std::move(e), coef});
    }
    return terms;
  };

  Polynomial dims;
  for (int d = 0;; ++d) {
    const auto basis = compositions(vars, d);
    std::map<std::vector<int>, Eigen::Index> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<Eigen::Index>(k);
    EchelonBasis<Rational> span(static_cast<Eigen::Index>(basis.size()));
    for (const PowerGenerator& gen : generators) {
      if (gen.exponent > d || span.full()) continue;
      const auto power = expand(gen.support, gen.exponent);
      for (const auto& shift : compositions(vars, d - gen.exponent)) {
        Vector<Rational> v = Vector<Rational>::Zero(static_cast<Eigen::Index>(basis.size()));
        for (const auto& [e, coef] : power) {
          std::vector<int> sum = e;
          for (int k = 0; k < vars; ++k) sum[k] += shift[k];
          v(index.at(sum)) += Rational(coef);
        }
        span.insert(std::move(v));
        if (span.full()) break;
      }
    }
    const auto quotient = static_cast<long>(basis.size()) - static_cast<long>(span.rank());
    if (quotient == 0) break;
    dims.add_term(d, quotient);
  }
  return dims;
}

std::vector<std::vector<EdgeSet>> slim_subgraphs(const Graph& g, const Caps& caps) {
  if (g.edge_count() > caps.slim_edges)
    throw Error(ErrorKind::CapExceeded, "slim subgraphs limited to " + std::to_string(caps.slim_edges) + " edges (cap edges)");
  if (!g.connected()) throw Error(ErrorKind::DisconnectedGraph, "slim subgraphs need a connected graph");
  const EdgeSet all = g.all_edges();
  // Slim sets are closed under subsets: extend each by edges above its maximum.
  std::vector<std::vector<EdgeSet>> levels{{0}};
  while (true) {
    std::vector<EdgeSet> next;
    for (EdgeSet h : levels.back()) {
      const int start = h ? 64 - __builtin_clzll(h) : 0;
      for (int k = start; k < g.edge_count(); ++k) {
        const EdgeSet grown = h | (EdgeSet{1} << k);
        if (g.component_count(all & ~grown) == 1) next.push_back(grown);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

IntMatrix c_algebra_generators(const Graph& g) {
  IntMatrix c = IntMatrix::Zero(g.vertex_count(), g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    c(g.edge(k).u - 1, k) = 1;
    c(g.edge(k).v - 1, k) = -1;
  }
  return c;
}

Polynomial c_algebra_graded_dims(const Graph& g, const Caps& caps) {
  const auto levels = slim_subgraphs(g, caps);
  const IntMatrix c = c_algebra_generators(g);
  Polynomial dims;
  dims.add_term(0, 1);
  std::vector<Vector<Rational>> previous{Vector<Rational>::Ones(1)};
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const auto& below = levels[k - 1];
    const auto& level = levels[k];
    std::unordered_map<EdgeSet, Eigen::Index> index;
    for (std::size_t i = 0; i < level.size(); ++i) index[level[i]] = static_cast<Eigen::Index>(i);
    EchelonBasis<Rational> span(static_cast<Eigen::Index>(level.size()));
    // Degree-k span is X_i times the degree-(k-1) span.
    for (const auto& b : previous) {
      for (Vertex i = 1; i <= g.vertex_count() && !span.full(); ++i) {
        Vector<Rational> v = Vector<Rational>::Zero(static_cast<Eigen::Index>(level.size()));
        bool nonzero = false;
        for (Eigen::Index h = 0; h < b.size(); ++h) {
          if (b(h) == 0) continue;
          for (Vertex w : g.neighbours(i)) {
            const int e = g.edge_index(i, w);
            const EdgeSet grown = below[h] | (EdgeSet{1} << e);
            if (grown == below[h]) continue;
            auto it = index.find(grown);
            if (it == index.end()) continue;
            v(it->second) += b(h) * c(i - 1, e);
            nonzero = true;
          }
        }
        if (nonzero) span.insert(std::move(v));
      }
      if (span.full()) break;
    }
    if (span.rank() == 0) break;
    dims.add_term(static_cast<int>(k), static_cast<long>(span.rank()));
    previous = span.rows();
  }
  return dims;
}

Polynomial hilbert_via_tutte(const Graph& g, const Caps& caps) {
  const int shift = cyclomatic_number(g);
  const TuttePolynomial t = tutte_polynomial(g, caps);
  Polynomial h;
  for (const auto& [exp, coef] : t.terms()) {
    if (exp.second > shift) throw Error(ErrorKind::NonPolynomialResult, "T(1, 1/s) has a pole beyond s^" + std::to_string(shift));
    h.add_term(shift - exp.second, coef);
  }
  return h;
}

Polynomial forest_hilbert_via_tutte(const Graph& g, const Caps& caps) {
  const int shift = cyclomatic_number(g);
  const TuttePolynomial t = tutte_polynomial(g, caps);
  Polynomial h;
  for (const auto& [exp, coef] : t.terms()) {
    if (exp.second > shift) throw Error(ErrorKind::NonPolynomialResult, "T(1 + s, 1/s) has a pole beyond s^" + std::to_string(shift));
    Polynomial term = Polynomial::monomial(shift - exp.second, coef);
    for (int k = 0; k < exp.first; ++k) term = term * Polynomial({1, 1});
    h += term;
  }
  return h;
}

Polynomial external_activity_profile(const Graph& g, const Caps& caps) {
  const int shift = cyclomatic_number(g);
  const Polynomial hist = external_activity_histogram(g, caps);
  Polynomial out;
  for (int k = 0; k <= hist.degree(); ++k) out.add_term(shift - k, hist.coefficient(k));
  return out;
}

namespace {

// Sparse polynomial in z_1..z_n; keys pack 6-bit exponents.
using SparsePoly = std::unordered_map<std::uint64_t, Integer>;

SparsePoly times_difference(const SparsePoly& p, Vertex i, Vertex j) {
  SparsePoly out;
  const std::uint64_t di = std::uint64_t{1} << (6 * (i - 1)), dj = std::uint64_t{1} << (6 * (j - 1));
  for (const auto& [key, coef] : p) {
    out[key + di] += coef;
    out[key + dj] -= coef;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Rank of a family of homogeneous polynomials of one degree.
Eigen::Index rank_of(const std::vector<const SparsePoly*>& family) {
  std::unordered_map<std::uint64_t, Eigen::Index> index;
  for (const SparsePoly* p : family)
    for (const auto& term : *p) index.emplace(term.first, static_cast<Eigen::Index>(index.size()));
  EchelonBasis<Rational> span(static_cast<Eigen::Index>(index.size()));
  for (const SparsePoly* p : family) {
    if (span.full()) break;
    Vector<Rational> v = Vector<Rational>::Zero(span.dimension());
    for (const auto& [key, coef] : *p) v(index.at(key)) = Rational(coef);
    span.insert(std::move(v));
  }
  return span.rank();
}

void require_s_space_caps(const TieredGraph& g, const Caps& caps) {
  if (!is_complete_tiered(g)) throw Error(ErrorKind::NotCompleteTiered, "S_G needs a complete tiered graph");
  require_rank_cap(g.graph, caps);
  if (g.vertex_count() > 10) throw Error(ErrorKind::CapExceeded, "S_G monomial keys hold at most 10 variables");
}

}  // namespace

Polynomial s_space_graded_dims(const TieredGraph& tg, const Caps& caps) {
  require_s_space_caps(tg, caps);
  const Graph& g = tg.graph;
  const auto levels = slim_subgraphs(g, caps);
  Polynomial dims;
  std::unordered_map<EdgeSet, SparsePoly> previous{{0, SparsePoly{{0, 1}}}};
  for (std::size_t k = 0; k < levels.size(); ++k) {
    std::unordered_map<EdgeSet, SparsePoly> current;
    std::vector<const SparsePoly*> family;
    for (EdgeSet h : levels[k]) {
      if (h) {
        const int top = 63 - __builtin_clzll(h);
        const Edge& e = g.edge(top);
        current[h] = times_difference(previous.at(h & ~(EdgeSet{1} << top)), e.u, e.v);
      } else {
        current[h] = previous.at(0);
      }
    }
    for (EdgeSet h : levels[k]) family.push_back(&current.at(h));
    const Eigen::Index r = rank_of(family);
    if (r == 0) break;
    dims.add_term(static_cast<int>(k), static_cast<long>(r));
    previous = std::move(current);
  }
  return dims;
}

SpanningLemmaReport spanning_lemma_check(const TieredGraph& tg, const Caps& caps) {
  require_s_space_caps(tg, caps);
  const Graph& g = tg.graph;
  const EdgeOrder order = EdgeOrder::lexicographic(g);
  const EdgeSet all = g.all_edges();
  std::map<int, std::vector<SparsePoly>> by_degree;
  for_each_spanning_tree(g, [&](EdgeSet tree) {
    const EdgeSet h = all & ~(tree | externally_active_edges(g, tree, order));
    SparsePoly z{{0, 1}};
    for (int k = 0; k < g.edge_count(); ++k)
      if (contains(h, k)) z = times_difference(z, g.edge(k).u, g.edge(k).v);
    by_degree[cardinality(h)].push_back(std::move(z));
  }, caps);
  SpanningLemmaReport report;
  for (const auto& [degree, polys] : by_degree) {
    std::vector<const SparsePoly*> family;
    for (const auto& p : polys) family.push_back(&p);
    report.spanned.add_term(degree, static_cast<long>(rank_of(family)));
  }
  report.space = s_space_graded_dims(tg, caps);
  return report;
}

bool GradedAlgebraReport::tutte_match() const {
  return c_dims == hilbert && hilbert == external_activity && c_dims.sum_of_coefficients() == tree_count;
}

std::optional<bool> GradedAlgebraReport::s_space_match() const {
  if (!s_dims) return std::nullopt;
  return *s_dims == c_dims;
}

GradedAlgebraReport graded_algebra_report(const Graph& g, Vertex sink, const Caps& caps) {
  if (!g.has_vertex(sink)) throw Error(ErrorKind::UnknownVertex, "no sink " + std::to_string(sink));
  GradedAlgebraReport r;
  r.c_dims = c_algebra_graded_dims(g, caps);
  r.hilbert = hilbert_via_tutte(g, caps);
  r.external_activity = external_activity_profile(g, caps);
  r.tree_count = count_spanning_trees(g);
  if (g.vertex_count() <= caps.rank_vertices) {
    r.power_dims = power_quotient_dims(g, sink, caps);
    r.monomial_dims = monomial_quotient_dims(g, sink, caps);
  }
  return r;
}

GradedAlgebraReport graded_algebra_report(const TieredGraph& g, Vertex sink, const Caps& caps) {
  GradedAlgebraReport r = graded_algebra_report(g.graph, sink, caps);
  if (is_complete_tiered(g) && g.vertex_count() <= caps.rank_vertices) r.s_dims = s_space_graded_dims(g, caps);
  return r;
}

}  // namespace tiered
