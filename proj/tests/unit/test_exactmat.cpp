#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "galwalk/exactmat.hpp"

using namespace galwalk;

namespace {

RationalMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// det(T·I − A) by the Leibniz expansion over Q[T]: an oracle independent of
// the Faddeev–LeVerrier recurrence.
RationalPolynomial leibniz_char_poly(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  RationalPolynomial total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    RationalPolynomial term{Rational(inversions % 2 ? -1 : 1)};
    for (std::size_t i = 0; i < n; ++i) {
      RationalPolynomial entry{Rational(-a(i, sigma[i]))};
      if (sigma[i] == i) entry = RationalPolynomial{Rational(-a(i, i)), Rational(1)};
      term = term * entry;
    }
    total = total + term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::uint32_t leibniz_det_mod_p(const PrimeFieldMatrix& a, std::uint32_t shift) {
  // det(shift·I − a) mod p.
  const std::size_t n = a.dim();
  const std::uint32_t p = a.modulus();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t e = (p - a(i, sigma[i])) % p;
      if (sigma[i] == i) e = (e + shift) % p;
      term = term * e % p;
    }
    total = (total + (inversions % 2 ? p - term : term)) % p;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return static_cast<std::uint32_t>(total);
}

std::uint32_t eval_mod_p(const PrimeFieldPolynomial& f, std::uint32_t x) {
  std::uint64_t acc = 0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = (acc * x + *it) % f.p;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  RationalMatrix m{{Rational(2, 4), Rational(6, 3)}, {0, 1}};
  RationalMatrix sq = m * m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational x = sq(i, j);
      Rational y = x;
      y.canonicalize();
      CHECK(x == y);
      CHECK(x.get_den() >= 1);
    }
  CHECK(sq(0, 0) == Rational(1, 4));
}

TEST_CASE("mat_mul examples and errors") {
  RationalMatrix a{{1, 2}, {3, 4}};
  CHECK(RationalMatrix::identity(2) * a == a);
  CHECK(RationalMatrix::diagonal({2, 3}) * RationalMatrix::diagonal({Rational(1, 2), Rational(1, 3)}) ==
        RationalMatrix::identity(2));
  RationalMatrix swap{{0, 1}, {1, 0}};
  CHECK((swap * swap).is_identity());
  CHECK_THROWS_AS(mat_mul(RationalMatrix(2), RationalMatrix(3)), DimensionMismatch);
}

TEST_CASE("mat_inverse examples and errors") {
  CHECK(mat_inverse(RationalMatrix::identity(3)) == RationalMatrix::identity(3));
  CHECK(mat_inverse(RationalMatrix::diagonal({2, 3})) == RationalMatrix::diagonal({Rational(1, 2), Rational(1, 3)}));
  CHECK(mat_inverse(RationalMatrix{{1, 1}, {0, 1}}) == RationalMatrix{{1, -1}, {0, 1}});
  CHECK_THROWS_AS(mat_inverse(RationalMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("inverse of inverse is the identity map") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 100) {
    RationalMatrix a = random_int_matrix(rng, 1 + checked % 4);
    if (a.determinant() == 0) continue;
    RationalMatrix inv = mat_inverse(a);
    CHECK(mat_inverse(inv) == a);
    CHECK((a * inv).is_identity());
    ++checked;
  }
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(RationalMatrix::identity(2)) == RationalPolynomial{1, -2, 1});
  CHECK(char_poly(RationalMatrix::diagonal({2, 3})) == RationalPolynomial{6, -5, 1});
  RationalPolynomial t3m2{-2, 0, 0, 1};
  CHECK(char_poly(RationalMatrix::companion(t3m2)) == t3m2);
}

TEST_CASE("char_poly agrees with the Leibniz expansion for n <= 4") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    RationalMatrix a = random_int_matrix(rng, n);
    if (trial % 3 == 0) {
      a(0, 0) = Rational(trial % 7 + 1, 3);
      a(0, 0).canonicalize();
    }
    RationalPolynomial f = char_poly(a);
    CHECK(f.is_monic());
    CHECK(f.degree() == static_cast<int>(n));
    CHECK(f == leibniz_char_poly(a));
  }
}

TEST_CASE("char_poly is invariant under conjugation") {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 100) {
    std::size_t n = 2 + checked % 3;
    RationalMatrix a = random_int_matrix(rng, n), b = random_int_matrix(rng, n);
    if (a.determinant() == 0) continue;
    CHECK(char_poly(a * b * mat_inverse(a)) == char_poly(b));
    ++checked;
  }
}

TEST_CASE("determinant is (-1)^n times the constant term") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 4;
    RationalMatrix a = random_int_matrix(rng, n);
    Rational c0 = char_poly(a).coeff(0);
    CHECK(a.determinant() == (n % 2 ? -c0 : c0));
  }
}

TEST_CASE("reduce_poly_mod_p examples") {
  auto r = reduce_poly_mod_p(RationalPolynomial{6, -5, 1}, 7);
  REQUIRE(r);
  CHECK(r->coeffs == std::vector<std::uint32_t>{6, 2, 1});
  CHECK_FALSE(reduce_poly_mod_p(RationalPolynomial{0, Rational(-1, 2), 1}, 2));
  auto s = reduce_poly_mod_p(RationalPolynomial{1, 0, 1}, 5);
  REQUIRE(s);
  CHECK(s->coeffs == std::vector<std::uint32_t>{1, 0, 1});
  // Leading coefficient vanishing mod p is also a bad prime.
  CHECK_FALSE(reduce_poly_mod_p(RationalPolynomial{1, 5}, 5));
  CHECK(*reduce_rational_mod_p(Rational(1, 2), 7) == 4);
  CHECK_FALSE(reduce_rational_mod_p(Rational(1, 14), 7));
}

TEST_CASE("char_poly_mod_p agrees with a brute-force determinant") {
  std::mt19937_64 rng(19);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + trial % 4;
      PrimeFieldMatrix a(p, n);
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
      PrimeFieldPolynomial f = char_poly_mod_p(a);
      REQUIRE(f.degree() == static_cast<int>(n));
      for (std::uint32_t x = 0; x < p; ++x) CHECK(eval_mod_p(f, x) == leibniz_det_mod_p(a, x));
    }
  }
}

TEST_CASE("reduction commutes with the characteristic polynomial") {
  std::mt19937_64 rng(23);
  const std::uint32_t primes[] = {5, 7, 11, 13, 97};
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    RationalMatrix a = random_int_matrix(rng, n, -9, 9);
    std::uint32_t p = primes[trial % 5];
    auto lhs = reduce_poly_mod_p(char_poly(a), p);
    auto am = reduce_matrix_mod_p(a, p);
    REQUIRE(lhs);
    REQUIRE(am);
    CHECK(*lhs == char_poly_mod_p(*am));
  }
}

TEST_CASE("prime-field helpers") {
  CHECK(mod_pow(3, 6, 7) == 1);
  for (std::uint32_t a = 1; a < 13; ++a) CHECK(mod_mul(a, mod_inv(a, 13), 13) == 1);
  PrimeFieldMatrix m = PrimeFieldMatrix::identity(5, 3);
  CHECK(m.determinant() == 1);
  CHECK(m * m == m);
}

TEST_CASE("polynomial division and gcd") {
  RationalPolynomial f = RationalPolynomial::from_roots({1, 2, 3});
  RationalPolynomial g = RationalPolynomial::from_roots({2, 5});
  CHECK(gcd(f, g) == RationalPolynomial::from_roots({2}));
  PolyDivision d = divide(f, g);
  CHECK(d.quotient * g + d.remainder == f);
  CHECK(d.remainder.degree() < g.degree());
  CHECK(f.evaluate(3) == 0);
  CHECK(f.derivative() == RationalPolynomial{11, -12, 3});
}
