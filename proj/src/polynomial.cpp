#include "tiered/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace tiered {

Polynomial::Polynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(int degree, const Integer& coefficient) {
  Polynomial p;
  p.add_term(degree, coefficient);
  return p;
}

Integer Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[k];
}

void Polynomial::add_term(int k, const Integer& c) {
  if (k >= static_cast<int>(coefficients_.size())) coefficients_.resize(k + 1);
  coefficients_[k] += c;
  trim();
}

Integer Polynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer Polynomial::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& c : coefficients_) s += c;
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return Polynomial(std::move(out));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::string Polynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coefficients_[k];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << variable;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

void TuttePolynomial::add_term(int x_degree, int y_degree, const Integer& c) {
  auto key = std::make_pair(x_degree, y_degree);
  Integer& slot = terms_[key];
  slot += c;
  if (slot == 0) terms_.erase(key);
}

Integer TuttePolynomial::coefficient(int x_degree, int y_degree) const {
  auto it = terms_.find({x_degree, y_degree});
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer TuttePolynomial::evaluate(const Integer& x, const Integer& y) const {
  Integer acc = 0;
  for (const auto& [exp, c] : terms_) acc += c * pow(x, exp.first) * pow(y, exp.second);
  return acc;
}

Polynomial TuttePolynomial::at_x_equals_one() const {
  Polynomial p;
  for (const auto& [exp, c] : terms_) p.add_term(exp.second, c);
  return p;
}

std::string TuttePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : sorted) {
    Integer mag = c < 0 ? Integer(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const bool bare = exp.first == 0 && exp.second == 0;
    if (mag != 1 || bare) os << mag;
    auto factor = [&](char v, int e) {
      if (e == 0) return;
      os << v;
      if (e > 1) os << '^' << e;
    };
    factor('x', exp.first);
    factor('y', exp.second);
  }
  return os.str();
}

}  // namespace tiered
