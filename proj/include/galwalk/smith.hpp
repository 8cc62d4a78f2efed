#pragma once

// Smith normal form over arbitrary-precision integers.

#include <cstddef>
#include <string>
#include <vector>

#include "galwalk/exactmat.hpp"

namespace galwalk {

/// Dense rows×cols integer matrix.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Determinant of a square matrix (fraction-free Bareiss elimination).
  Integer determinant() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// left · input · right = diagonal, with unimodular left/right and a
/// diagonal whose nonzero entries are nonnegative and successively divide.
struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
  /// Nonzero diagonal entries, in order.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Basis (as columns) of the integer kernel {x : m·x = 0}.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

/// Inverse of a unimodular matrix; throws std::domain_error otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

}  // namespace galwalk
