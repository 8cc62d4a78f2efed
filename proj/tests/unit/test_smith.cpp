#include <doctest.h>

#include <random>

#include "galwalk/smith.hpp"

using namespace galwalk;

namespace {

Integer det_by_cofactors(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    Integer term = a[0][j] * det_by_cofactors(minor);
    total += j % 2 ? Integer(-term) : term;
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// k-th determinantal divisor: gcd of all k×k minors.
Integer determinantal_divisor(const IntegerMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
      Integer d = det_by_cofactors(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-6, 6);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng) * (d(rng) % 3 == 0 ? 2 : 1);
  return m;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  SmithForm s = smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(s.invariant_factors == std::vector<Integer>{2, 6, 12});
  CHECK(s.rank == 3);
  SmithForm z = smith_normal_form(IntegerMatrix{{1, 2}, {2, 4}});
  CHECK(z.invariant_factors == std::vector<Integer>{1});
  CHECK(z.rank == 1);
}

TEST_CASE("invariant factors are ratios of determinantal divisors") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
    IntegerMatrix m = random_matrix(rng, r, c);
    SmithForm s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(s.left.determinant()) == 1);
    CHECK(abs(s.right.determinant()) == 1);
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      Integer dk = determinantal_divisor(m, k);
      if (dk == 0) break;
      ++rank;
      REQUIRE(s.invariant_factors.size() >= k);
      CHECK(s.invariant_factors[k - 1] == dk / prev);
      prev = dk;
    }
    CHECK(s.rank == rank);
    for (std::size_t k = 1; k < s.invariant_factors.size(); ++k)
      CHECK(s.invariant_factors[k] % s.invariant_factors[k - 1] == 0);
  }
}

TEST_CASE("integer kernel and unimodular inverse") {
  IntegerMatrix m{{1, 1, 1, 1}, {0, 1, 2, 3}};
  IntegerMatrix k = integer_kernel(m);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 2);
  CHECK(m * k == IntegerMatrix(2, 2));
  IntegerMatrix u{{2, 1}, {1, 1}};
  CHECK(u * unimodular_inverse(u) == IntegerMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntegerMatrix{{2, 0}, {0, 1}}), std::domain_error);
}
