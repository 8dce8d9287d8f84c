#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tiered/numeric.hpp"

namespace tiered {

// Dense univariate polynomial with exact coefficients; no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);

  static Polynomial monomial(int degree, const Integer& coefficient = 1);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Integer coefficient(int k) const;
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  void add_term(int k, const Integer& c);
  Integer evaluate(const Integer& x) const;
  Integer sum_of_coefficients() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(char variable = 'q') const;

 private:
  void trim();
  std::vector<Integer> coefficients_;
};

// Sparse bivariate polynomial in x, y; used for Tutte polynomials.
class TuttePolynomial {
 public:
  void add_term(int x_degree, int y_degree, const Integer& c);
  Integer coefficient(int x_degree, int y_degree) const;
  const std::map<std::pair<int, int>, Integer>& terms() const { return terms_; }

  Integer evaluate(const Integer& x, const Integer& y) const;
  // T(1, q) as a polynomial in q.
  Polynomial at_x_equals_one() const;

  friend bool operator==(const TuttePolynomial&, const TuttePolynomial&) = default;
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Integer> terms_;  // zero coefficients are erased
};

}  // namespace tiered
