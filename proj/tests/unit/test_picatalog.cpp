#include <doctest.h>

#include <numeric>

#include "galwalk/picatalog.hpp"
#include "galwalk/scenarios.hpp"

using namespace galwalk;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }
std::size_t pow_of(std::size_t b, std::size_t e) { return e == 0 ? 1 : b * pow_of(b, e - 1); }

std::size_t euler_phi(std::size_t d) {
  std::size_t c = 0;
  for (std::size_t a = 1; a <= d; ++a) c += std::gcd(a, d) == 1;
  return c;
}

}  // namespace

TEST_CASE("symmetric predictions") {
  for (int n = 2; n <= 5; ++n) {
    PredictedGroup g = pi_sl_n(n);
    CHECK(g.group->order() == factorial(n));
    CHECK(g.degree == n);
    CHECK(g.natural_symmetric);
    CHECK(g.multiplicity == 1);
  }
  CHECK(pi_sl_n(2).exact_name == "C2");
  CHECK(pi_sl_n(4).exact_name == "S4");
}

TEST_CASE("tau-coset group orders") {
  for (int r = 1; r <= 2; ++r) {
    const int n = 2 * r;
    CHECK(pi_sl_n_tau(n).group->order() == pow_of(2, 3 * r) * factorial(r));
    CHECK(sl_n_tau_coset_weyl_action(n).group->order() == pow_of(2, 2 * r - 1) * factorial(r));
    CHECK(pi_sl_n_tau(n).degree == 4 * r);
  }
  // Odd r: Gal(Q(i)/Q) doubles the coset Weyl group; even r: they agree.
  CHECK(sl_n_tau_eigenvalue_action(2).group->order() == 4);
  CHECK(sl_n_tau_eigenvalue_action(2).exact_name == "V4");
  CHECK(sl_n_tau_eigenvalue_action(4).group->order() == 16);
  CHECK(sl_n_tau_eigenvalue_action(6).group->order() == pow_of(2, 6) * factorial(3));
  CHECK_THROWS_AS(pi_sl_n_tau(3), std::invalid_argument);
}

TEST_CASE("the tau-coset sign character is a homomorphism of index 2") {
  for (int n : {2, 6}) {
    const PredictedGroup pred = sl_n_tau_eigenvalue_action(n);
    const EnumeratedGroup& g = *pred.group;
    std::size_t kernel = 0;
    for (const auto& a : g.elements()) {
      int ca = tau_coset_character(a);
      CHECK((ca == 1 || ca == -1));
      kernel += ca == 1;
    }
    CHECK(2 * kernel == g.order());
    for (std::size_t i = 0; i < g.order(); i += 7)
      for (std::size_t j = 0; j < g.order(); j += 11)
        CHECK(tau_coset_character(g.elements()[i] * g.elements()[j]) ==
              tau_coset_character(g.elements()[i]) * tau_coset_character(g.elements()[j]));
  }
  const PredictedGroup weyl4 = sl_n_tau_coset_weyl_action(4);
  for (const auto& a : weyl4.group->elements()) CHECK(tau_coset_character(a) == 1);
}

TEST_CASE("identity coset of the tau scenario") {
  PredictedGroup g = sl_n_tau_identity_action(2);
  CHECK(g.multiplicity == 2);
  CHECK(g.group->order() == 2);
  CHECK(sl_n_tau_identity_action(4).group->order() == 24);
}

TEST_CASE("power-cyclic and restriction-of-scalars orders") {
  for (int n = 2; n <= 3; ++n)
    for (int d = 2; d <= 3; ++d) {
      CHECK(sl_power_cyclic_weyl_action(n, d).group->order() == pow_of(d, n - 1) * factorial(n));
      CHECK(pi_sl_power_cyclic(n, d).group->order() == pow_of(d, n - 1) * factorial(n) * euler_phi(d));
      CHECK(sl_power_identity_action(n, d).group->order() == pow_of(factorial(n), d));
    }
  PredictedGroup r = pi_restriction_of_scalars(2, cyclic_group(2));
  CHECK(r.group->order() == 8);
  CHECK(r.degree == 4);
  CHECK_THROWS_AS(pi_restriction_of_scalars(2, direct_product({cyclic_group(1), cyclic_group(1)})), std::invalid_argument);
}

TEST_CASE("lattice actions") {
  for (int n = 2; n <= 5; ++n) {
    IntegerMatrix t = sl_n_transpose_inverse_lattice_action(n);
    CHECK(t * t == IntegerMatrix::identity(n - 1));
    EnumeratedGroup s = symmetric_group(n);
    for (std::size_t i = 0; i < s.order(); i += 5)
      for (std::size_t j = 0; j < s.order(); j += 3) {
        const auto& a = s.elements()[i];
        const auto& b = s.elements()[j];
        CHECK(sl_n_weyl_lattice_action(a * b) == sl_n_weyl_lattice_action(a) * sl_n_weyl_lattice_action(b));
      }
  }
}

TEST_CASE("coset Weyl structure of the transpose-inverse outer automorphism") {
  for (int n = 2; n <= 6; ++n) {
    CosetWeylReport rep = coset_weyl_structure(n, sl_n_transpose_inverse_lattice_action(n));
    const std::size_t k = n / 2;
    INFO("n = " << n);
    CHECK(rep.fixed_weyl_order == pow_of(2, k) * factorial(k));
    CHECK(rep.torsion_invariants == std::vector<Integer>(n - 1 - k, Integer(2)));
    CHECK(rep.total_order == Integer(pow_of(2, n - 1 - k) * pow_of(2, k) * factorial(k)));
  }
  CHECK(coset_weyl_structure(2, sl_n_transpose_inverse_lattice_action(2)).total_order ==
        sl_n_tau_coset_weyl_action(2).group->order());
  CHECK(coset_weyl_structure(4, sl_n_transpose_inverse_lattice_action(4)).total_order ==
        sl_n_tau_coset_weyl_action(4).group->order());
  CosetWeylReport id = coset_weyl_structure(4, IntegerMatrix::identity(3));
  CHECK(id.fixed_weyl_order == 24);
  CHECK(id.torsion_order == 1);
  CHECK_THROWS_AS(coset_weyl_structure(3, IntegerMatrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(coset_weyl_structure(3, IntegerMatrix{{1, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("catalog entries are consistent with the scenarios") {
  for (const auto& name : scenario_names()) {
    Scenario sc = make_scenario(name);
    for (int c = 0; c < sc.coset_count(); ++c) {
      for (auto lookup : {catalog_lookup(name, c), catalog_weyl_lookup(name, c)}) {
        if (!lookup) continue;
        INFO(name << " coset " << c);
        CHECK(lookup->group->degree() == static_cast<std::size_t>(lookup->degree));
        CHECK(lookup->degree == static_cast<int>(sc.dimension()));
        CHECK(lookup->degree % lookup->multiplicity == 0);
        Rational total = 0;
        for (const auto& [t, f] : lookup->group->type_distribution()) total += f;
        CHECK(total == 1);
      }
      for (const auto& alt : catalog_alternates(name, c)) CHECK(alt.group->order() > 0);
    }
  }
  CHECK_FALSE(catalog_lookup("nonsemisimple_counterexample", 1));
  CHECK_THROWS_AS(catalog_lookup("no_such_scenario", 0), std::invalid_argument);
}
