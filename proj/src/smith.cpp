#include "galwalk/smith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace galwalk {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("IntegerMatrix: ragged rows");
    for (long x : r) a_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("IntegerMatrix product: shape mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("IntegerMatrix difference: shape mismatch");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("IntegerMatrix sum: shape mismatch");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix m = *this;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += f * row[src]
void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
  const std::size_t R = input.rows(), C = input.cols();
  IntegerMatrix d = input;
  IntegerMatrix left = IntegerMatrix::identity(R);
  IntegerMatrix right = IntegerMatrix::identity(C);

  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    for (;;) {
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (d(i, j) != 0 && (pi == R || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == R) goto done;
      swap_rows(d, t, pi);
      swap_rows(left, t, pi);
      swap_cols(d, t, pj);
      swap_cols(right, t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, -q);
        add_row(left, i, t, -q);
        dirty = dirty || d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, -q);
        add_col(right, j, t, -q);
        dirty = dirty || d(t, j) != 0;
      }
      if (dirty) continue;

      // Row and column cleared; enforce divisibility of the trailing block.
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == R) break;
      add_row(d, t, bad, 1);
      add_row(left, t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j) {
        d(t, j) = -d(t, j);
      }
      for (std::size_t j = 0; j < R; ++j) left(t, j) = -left(t, j);
    }
  }
done:
  SmithForm s{d, left, right, {}, 0};
  for (std::size_t i = 0; i < std::min(R, C); ++i)
    if (d(i, i) != 0) {
      s.invariant_factors.push_back(d(i, i));
      ++s.rank;
    }
  return s;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  // m = L^-1 D R^-1, so m·R·e_j = L^-1·D·e_j vanishes for j >= rank.
  const std::size_t k = m.cols() - s.rank;
  IntegerMatrix basis(m.cols(), k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j) = s.right(i, s.rank + j);
  return basis;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("unimodular_inverse: non-square matrix");
  RationalMatrix q(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  RationalMatrix inv = mat_inverse(q);
  if (!inv.is_integral()) throw std::domain_error("unimodular_inverse: matrix is not unimodular");
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = inv(i, j).get_num();
  return out;
}

}  // namespace galwalk
