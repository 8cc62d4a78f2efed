#include <doctest.h>

#include <algorithm>
#include <map>

#include "galwalk/exactmat.hpp"
#include "galwalk/modpoly.hpp"
#include "galwalk/scenarios.hpp"
#include "galwalk/walker.hpp"

using namespace galwalk;

namespace {

using Coeffs = std::vector<std::uint32_t>;  // low degree first, monic

// Schoolbook remainder, kept separate from the library arithmetic.
Coeffs naive_rem(Coeffs a, const Coeffs& m, std::uint32_t p) {
  auto inv = [p](std::uint32_t x) {
    for (std::uint32_t y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return 0u;
  };
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv(m.back());
  while (a.size() > dm) {
    std::uint32_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<Coeffs> monic_of_degree(int d, std::uint32_t p) {
  std::vector<Coeffs> out;
  Coeffs c(d + 1, 0);
  c[d] = 1;
  while (true) {
    out.push_back(c);
    int i = 0;
    while (i < d && ++c[i] == p) c[i++] = 0;
    if (i == d) break;
  }
  return out;
}

bool naive_irreducible(const Coeffs& f, std::uint32_t p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; 2 * e <= d; ++e)
    for (const auto& g : monic_of_degree(e, p))
      if (naive_rem(f, g, p).empty()) return false;
  return true;
}

// Factor degrees by trial division with all monic irreducibles; nullopt on
// a repeated factor.
std::optional<CycleType> naive_pattern(Coeffs f, std::uint32_t p) {
  std::vector<int> parts;
  const int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; e <= d && f.size() > 1; ++e)
    for (const auto& g : monic_of_degree(e, p)) {
      if (!naive_irreducible(g, p)) continue;
      int times = 0;
      while (f.size() > 1 && naive_rem(f, g, p).empty()) {
        // exact division by g
        Coeffs q(f.size() - g.size() + 1, 0), r = f;
        for (std::size_t i = q.size(); i-- > 0;) {
          q[i] = r[i + g.size() - 1];
          for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + p * p - q[i] * g[j] % p) % p;
        }
        f = q;
        ++times;
      }
      if (times > 1) return std::nullopt;
      if (times == 1) parts.push_back(e);
    }
  return CycleType(parts);
}

}  // namespace

TEST_CASE("cycle type parsing and ordering") {
  CycleType t = CycleType::parse("(1,2,1)");
  CHECK(t.parts() == std::vector<int>{2, 1, 1});
  CHECK(t.to_string() == "(2,1,1)");
  CHECK(t.degree() == 4);
  CHECK(CycleType::parse("3,1") == CycleType({1, 3}));
  CHECK(t.repeated(2) == CycleType({2, 2, 1, 1, 1, 1}));
  CHECK_THROWS(CycleType({0, 1}));
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  CHECK(partitions(4).front() == CycleType({4}));
}

TEST_CASE("distinct-degree pattern matches trial division over small fields") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int d = 1; d <= 4; ++d) {
      for (const auto& f : monic_of_degree(d, p)) {
        PrimeFieldPolynomial g{p, f};
        auto got = distinct_degree_pattern(g);
        auto want = naive_pattern(f, p);
        INFO("p=" << p << " f=" << fp_trim(g).coeffs.size());
        CHECK(got.has_value() == want.has_value());
        if (got && want) CHECK(*got == *want);
      }
    }
  }
}

TEST_CASE("non-monic input gives the same pattern") {
  PrimeFieldPolynomial f{7, {3, 0, 3}};  // 3(T^2 + 1), irreducible mod 7
  CHECK(distinct_degree_pattern(f) == CycleType({2}));
}

TEST_CASE("squarefree_root over Q") {
  RationalPolynomial r{-2, 0, 1};
  CHECK(squarefree_root(r * r, 2) == r);
  CHECK(squarefree_root(Rational(3) * r, 1) == r);
  CHECK_FALSE(squarefree_root(r * r, 1));
  RationalPolynomial s{-3, 0, 1};
  CHECK_FALSE(squarefree_root(r * r * s, 2));
  CHECK(squarefree_over_q(r * s));
  CHECK_FALSE(squarefree_over_q(RationalPolynomial::from_roots({1, 1, 2})));
}

TEST_CASE("frobenius_cycle_type statuses") {
  RationalPolynomial f{Rational(1, 3), 0, 1};
  CHECK(frobenius_cycle_type(f, 3).status == FrobeniusStatus::bad_prime);
  RationalPolynomial g{1, 0, 1};  // discriminant -4
  CHECK(frobenius_cycle_type(g, 2).status == FrobeniusStatus::not_squarefree);
  auto s = frobenius_cycle_type(g, 5);
  REQUIRE(s.status == FrobeniusStatus::good);
  CHECK(*s.cycle_type == CycleType({1, 1}));
  CHECK(*frobenius_cycle_type(g, 7).cycle_type == CycleType({2}));
  CHECK(*frobenius_cycle_type(g * g, 7, 2).cycle_type == CycleType({2, 2}));
}

TEST_CASE("primes_in matches trial division") {
  auto ps = primes_in(1, 200);
  std::vector<std::uint32_t> want;
  for (std::uint32_t n = 2; n <= 200; ++n) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= n; ++d) prime &= n % d != 0;
    if (prime) want.push_back(n);
  }
  CHECK(ps == want);
  CHECK(primes_in(24, 28).empty());
}

TEST_CASE("T^2 + 1 splits at about half of 500 primes") {
  auto ps = primes_in(3, 100000);
  ps.resize(500);
  int split = 0;
  for (auto p : ps) {
    auto s = frobenius_cycle_type(RationalPolynomial{1, 0, 1}, p);
    REQUIRE(s.status == FrobeniusStatus::good);
    split += *s.cycle_type == CycleType({1, 1});
    CHECK((*s.cycle_type == CycleType({1, 1})) == (p % 4 == 1));
  }
  CHECK(std::abs(split / 500.0 - 0.5) <= 0.05);
}

TEST_CASE("T^3 - 2 follows the S3 type distribution") {
  std::map<CycleType, int> counts;
  auto ps = primes_in(1000, 100000);
  ps.resize(2000);
  for (auto p : ps) ++counts[*frobenius_cycle_type(RationalPolynomial{-2, 0, 0, 1}, p).cycle_type];
  CHECK(counts[CycleType({1, 1, 1})] / 2000.0 == doctest::Approx(1.0 / 6).epsilon(0.2));
  CHECK(counts[CycleType({2, 1})] / 2000.0 == doctest::Approx(1.0 / 2).epsilon(0.1));
  CHECK(counts[CycleType({3})] / 2000.0 == doctest::Approx(1.0 / 3).epsilon(0.1));
}

TEST_CASE("an sl3 walk element loses at most 10% of primes in [100, 1000]") {
  Scenario sc = make_scenario("sl3");
  int tested = 0;
  for (std::uint64_t i = 0; tested < 5 && i < 50; ++i) {
    RationalPolynomial f = char_poly(sample_walk(sc.generators, 20, 3, i).element);
    if (!squarefree_over_q(f)) continue;
    ++tested;
    auto ps = primes_in(100, 1000);
    int skipped = 0;
    for (auto p : ps) skipped += frobenius_cycle_type(f, p).status != FrobeniusStatus::good;
    CHECK(skipped <= ps.size() / 10);
  }
  CHECK(tested == 5);
}
