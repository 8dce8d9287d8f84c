#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tiered/numeric.hpp"
#include "tiered/polynomial.hpp"

using namespace tiered;

namespace {

// Leibniz expansion over all permutations.
Integer leibniz(const Matrix<Integer>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Integer term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("exact determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    Matrix<Integer> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    Matrix<Rational> q = m.cast<Rational>();
    CHECK(exact_determinant(q) == Rational(leibniz(m)));
  }
}

TEST_CASE("exact determinant of a singular matrix is zero") {
  Matrix<Rational> m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  CHECK(exact_determinant(m) == 0);
}

TEST_CASE("echelon basis rank") {
  Matrix<Rational> m(4, 3);
  m << 1, 2, 3, 2, 4, 6, 0, 1, 1, 1, 3, 4;
  CHECK(exact_rank(m) == 2);
  EchelonBasis<Rational> b(3);
  Vector<Rational> v(3);
  v << 0, 0, 0;
  CHECK_FALSE(b.insert(v));
  v << 1, 1, 0;
  CHECK(b.insert(v));
  v << 2, 2, 0;
  CHECK_FALSE(b.insert(v));
  CHECK(b.rank() == 1);
}

TEST_CASE("univariate polynomial arithmetic") {
  Polynomial a({1, 1});  // 1 + q
  Polynomial sq = a * a;
  CHECK(sq == Polynomial({1, 2, 1}));
  CHECK(sq.evaluate(2) == 9);
  CHECK(sq.to_string() == "q^2 + 2q + 1");
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK((a + Polynomial({-1, -1})).is_zero());
}

TEST_CASE("bivariate polynomial formatting and specialisation") {
  TuttePolynomial t;
  t.add_term(2, 0, 1);
  t.add_term(1, 0, 1);
  t.add_term(0, 1, 1);
  CHECK(t.to_string() == "x^2 + x + y");
  CHECK(t.evaluate(1, 1) == 3);
  CHECK(t.at_x_equals_one() == Polynomial({2, 1}));
  t.add_term(0, 1, -1);
  CHECK(t.coefficient(0, 1) == 0);
  CHECK(t.terms().size() == 2);
}
