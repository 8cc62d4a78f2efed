#include <doctest.h>

#include <algorithm>

#include "galwalk/finfield.hpp"
#include "galwalk/picatalog.hpp"
#include "galwalk/scenarios.hpp"

using namespace galwalk;

TEST_CASE("orders of SL2 over small prime fields") {
  GeneratorSet g = make_scenario("sl2").generators;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) CHECK(enumerate_mod_p(g, p).order() == p * (p * p - 1));
  CHECK(enumerate_mod_p(make_scenario("sl3").generators, 3).order() == 5616);
}

TEST_CASE("SL2 class counts by eigenvalue splitting") {
  // Split regular semisimple: (p-3)/2 classes of size p(p+1); non-split:
  // (p-1)/2 classes of size p(p-1).
  GeneratorSet g = make_scenario("sl2").generators;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    FiniteGroupModP grp = enumerate_mod_p(g, p);
    CosetCensus c = census(grp.cosets[0], p, 0);
    CHECK(c.total == p * (p * p - 1));
    CHECK(c.type_counts[CycleType({1, 1})] == p * (p + 1) * (p - 3) / 2);
    CHECK(c.type_counts[CycleType({2})] == p * (p - 1) * (p - 1) / 2);
    CHECK(c.rs_count == c.type_counts[CycleType({1, 1})] + c.type_counts[CycleType({2})]);
  }
}

TEST_CASE("cosets have equal size") {
  for (const char* name : {"sl_tau2", "sl_power_cyclic2x2", "nonsemisimple_counterexample"}) {
    Scenario sc = make_scenario(name);
    std::uint32_t p = std::string(name) == "nonsemisimple_counterexample" ? 7 : 5;
    FiniteGroupModP grp = enumerate_mod_p(sc.generators, p);
    REQUIRE(grp.cosets.size() == static_cast<std::size_t>(sc.coset_count()));
    for (const auto& c : grp.cosets) CHECK(c.size() == grp.cosets[0].size());
  }
}

TEST_CASE("census agrees with Frobenius types of reduced walk elements") {
  Scenario sc = make_scenario("sl_tau2");
  const std::uint32_t p = 13;
  FiniteGroupModP grp = enumerate_mod_p(sc.generators, p);
  auto walks = batch_sample(sc.generators, 25, 100, 8);
  int compared = 0;
  for (const auto& w : walks) {
    auto reduced = reduce_matrix_mod_p(w.element, p);
    REQUIRE(reduced);
    const auto& coset = grp.cosets[w.label];
    CHECK(std::find(coset.begin(), coset.end(), *reduced) != coset.end());
    const int mult = w.label == 0 ? 2 : 1;
    auto mine = element_cycle_type(*reduced, mult);
    FrobeniusSample fs = frobenius_cycle_type(char_poly(w.element), p, mult);
    if (fs.status == FrobeniusStatus::good) {
      REQUIRE(mine);
      CHECK(*mine == *fs.cycle_type);
      ++compared;
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("bad primes and limits") {
  GeneratorSet tau = make_scenario("sl_tau2").generators;
  CHECK_THROWS_AS(enumerate_mod_p(tau, 2), BadPrime);
  GeneratorSet ce = make_scenario("nonsemisimple_counterexample").generators;
  CHECK_THROWS_AS(enumerate_mod_p(ce, 3), BadPrime);  // diag(2, 3) is singular mod 3
  GeneratorSet res = make_scenario("res_scalars_sqrt2").generators;
  CHECK_THROWS_AS(enumerate_mod_p(res, 9), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_mod_p(res, 257), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_mod_p(make_scenario("sl2").generators, 13, 1000), GroupTooLarge);
  CHECK_THROWS_AS(enumerate_mod_p(make_scenario("sl_power_cyclic2x3").generators, 5), std::invalid_argument);
}

TEST_CASE("density report flags absent target types") {
  Scenario sc = make_scenario("sl_tau2");
  std::vector<CosetCensus> cs;
  std::vector<std::map<CycleType, Rational>> targets;
  for (std::uint32_t p : {5u, 13u}) {
    FiniteGroupModP grp = enumerate_mod_p(sc.generators, p);
    for (int c = 0; c < 2; ++c) {
      PredictedGroup t = *catalog_weyl_lookup("sl_tau2", c);
      cs.push_back(census(grp.cosets[c], p, c, t.multiplicity));
      targets.push_back(t.group->type_distribution());
    }
  }
  DensityReport rep = density_report(cs, targets);
  std::size_t flagged = 0;
  for (const auto& r : rep.rows) {
    CHECK(r.flagged == (r.in_target && r.count == 0));
    flagged += r.flagged;
    if (r.count == 0) continue;
    CHECK(r.coset_density > 0);
    CHECK(r.rs_density >= r.coset_density);
  }
  CHECK(flagged == rep.violations);
  // (1^4) is absent from the tau coset at p = 5 and present at p = 13.
  auto find = [&](std::uint32_t p) {
    return std::find_if(rep.rows.begin(), rep.rows.end(), [&](const DensityRow& r) {
      return r.p == p && r.coset == 1 && r.type == CycleType({1, 1, 1, 1});
    });
  };
  REQUIRE(find(5) != rep.rows.end());
  CHECK(find(5)->flagged);
  REQUIRE(find(13) != rep.rows.end());
  CHECK(find(13)->count > 0);
  CHECK(rep.violations >= 1);
  CHECK(rep.min_density == 0.0);
}
