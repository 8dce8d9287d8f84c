#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace tiered {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<int>;

// Gaussian elimination over a field; Scalar must divide exactly.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  Matrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == Scalar(0)) continue;
      Scalar f = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

// Incremental semi-echelon basis. Rows are reduced in insertion order, so a
// stored row is zero at the pivots of every row stored before it.
template <typename Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index dimension) : dimension_(dimension) {}

  // True when v is independent of the current span (and is then stored).
  bool insert(Vector<Scalar> v) {
    eigen_assert(v.size() == dimension_);
    if (full()) return false;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar f = v(pivots_[k]);
      if (f == Scalar(0)) continue;
      for (Eigen::Index i : supports_[k]) v(i) -= f * rows_[k](i);
    }
    Eigen::Index pivot = 0;
    while (pivot < dimension_ && v(pivot) == Scalar(0)) ++pivot;
    if (pivot == dimension_) return false;
    const Scalar inv = Scalar(1) / v(pivot);
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = pivot; i < dimension_; ++i) {
      if (v(i) == Scalar(0)) continue;
      v(i) *= inv;
      support.push_back(i);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    supports_.push_back(std::move(support));
    return true;
  }

  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index dimension() const { return dimension_; }
  bool full() const { return rank() == dimension_; }
  // A basis of the span (not reduced above the pivots).
  const std::vector<Vector<Scalar>>& rows() const { return rows_; }

 private:
  Eigen::Index dimension_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
  std::vector<std::vector<Eigen::Index>> supports_;
};

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  EchelonBasis<Scalar> basis(m.cols());
  for (Eigen::Index r = 0; r < m.rows() && !basis.full(); ++r)
    basis.insert(m.row(r).transpose());
  return basis.rank();
}

}  // namespace tiered
