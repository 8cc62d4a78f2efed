#pragma once

// Exact rational linear algebra: matrices, polynomials, characteristic
// polynomials and reduction modulo primes.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace galwalk {

using Integer = mpz_class;
using Rational = mpq_class;

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Polynomial over Q, coefficients indexed by degree. The zero polynomial
/// has no coefficients; otherwise the leading coefficient is nonzero.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs);

  static RationalPolynomial monomial(const Rational& c, std::size_t degree);
  /// Monic polynomial with the given roots.
  static RationalPolynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  /// Coefficient of T^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_monic() const;

  RationalPolynomial monic() const;
  RationalPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  /// Least common multiple of the coefficient denominators.
  Integer denominator_lcm() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

PolyDivision divide(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic greatest common divisor (zero if both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Square n×n matrix over Q. Entries are kept in lowest terms.
class RationalMatrix {
public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);
  /// Companion matrix of a monic polynomial (last column holds -c_i).
  static RationalMatrix companion(const RationalPolynomial& f);

  std::size_t dim() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  RationalMatrix transpose() const;
  Rational trace() const;
  Rational determinant() const;
  bool is_identity() const;
  bool is_integral() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  std::string to_string() const;

private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  return mat_mul(a, b);
}
/// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix.
RationalMatrix mat_inverse(const RationalMatrix& a);

/// det(T·I - a), via Faddeev-LeVerrier over Q.
RationalPolynomial char_poly(const RationalMatrix& a);

/// Polynomial over F_p with residues in [0, p). Zero polynomial is empty.
struct PrimeFieldPolynomial {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const PrimeFieldPolynomial&, const PrimeFieldPolynomial&) = default;
  std::string to_string() const;
};

/// Coefficientwise reduction. std::nullopt marks a bad prime: some
/// denominator is divisible by p or the leading coefficient vanishes mod p.
std::optional<PrimeFieldPolynomial> reduce_poly_mod_p(const RationalPolynomial& f, std::uint32_t p);

/// Residue of a rational with denominator prime to p.
std::optional<std::uint32_t> reduce_rational_mod_p(const Rational& x, std::uint32_t p);

/// Dense n×n matrix over F_p.
class PrimeFieldMatrix {
public:
  PrimeFieldMatrix() = default;
  PrimeFieldMatrix(std::uint32_t p, std::size_t n);

  static PrimeFieldMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return n_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<std::uint32_t>& entries() const { return a_; }

  std::uint32_t determinant() const;

  friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
  friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
  std::uint32_t p_ = 2;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> a_;
};

/// Entrywise reduction; std::nullopt if a denominator is divisible by p.
std::optional<PrimeFieldMatrix> reduce_matrix_mod_p(const RationalMatrix& a, std::uint32_t p);

/// Characteristic polynomial over F_p by Hessenberg reduction (any prime p).
PrimeFieldPolynomial char_poly_mod_p(const PrimeFieldMatrix& a);

// Scalar helpers for F_p.
std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// Inverse of a nonzero residue (p prime).
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

}  // namespace galwalk
