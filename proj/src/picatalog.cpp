#include "galwalk/picatalog.hpp"

#include <numeric>
#include <stdexcept>

namespace galwalk {

std::vector<CycleType> PredictedGroup::types() const {
  std::vector<CycleType> out;
  for (const auto& [t, f] : group->type_distribution()) out.push_back(t);
  return out;
}

namespace {

PredictedGroup make(std::string name, EnumeratedGroup g, int multiplicity = 1, std::string exact = {},
                    bool natural = false) {
  PredictedGroup pg;
  pg.name = std::move(name);
  pg.degree = static_cast<int>(g.degree());
  pg.group = std::make_shared<const EnumeratedGroup>(std::move(g));
  pg.multiplicity = multiplicity;
  pg.exact_name = std::move(exact);
  pg.natural_symmetric = natural;
  return pg;
}

Permutation perm(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  return Permutation::from_cycles(n, cycles);
}

// Signed permutations of r pairs on points 4j + 2s + e: swap sides of pair
// j, and exchange pairs j, j+1 keeping (s, e).
std::vector<Permutation> signed_pair_generators(int r) {
  const std::size_t N = 4 * r;
  std::vector<Permutation> gens;
  for (int j = 0; j < r; ++j) gens.push_back(perm(N, {{4 * j, 4 * j + 2}, {4 * j + 1, 4 * j + 3}}));
  for (int j = 0; j + 1 < r; ++j) {
    std::vector<std::vector<int>> cyc;
    for (int t = 0; t < 4; ++t) cyc.push_back({4 * j + t, 4 * (j + 1) + t});
    gens.push_back(perm(N, cyc));
  }
  return gens;
}

std::string quartic_name_for(const EnumeratedGroup& g) {
  if (g.degree() != 4 || !g.is_transitive()) return {};
  switch (g.order()) {
    case 24: return "S4";
    case 12: return "A4";
    case 8: return "D4";
    case 4: return g.type_distribution().count(CycleType({4})) ? "C4" : "V4";
    default: return {};
  }
}

}  // namespace

PredictedGroup pi_sl_n(int n) {
  if (n < 2) throw std::invalid_argument("pi_sl_n: n must be at least 2");
  EnumeratedGroup g = symmetric_group(n);
  std::string exact = n == 2 ? "C2" : (n == 4 ? "S4" : "");
  return make("S" + std::to_string(n), std::move(g), 1, exact, true);
}

PredictedGroup pi_sl_n_tau(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("pi_sl_n_tau: n must be even (the action on the extra eigenvalues for odd n is unspecified)");
  const int r = n / 2;
  const std::size_t N = 4 * r;
  std::vector<Permutation> gens = signed_pair_generators(r);
  for (int w = 0; w < 2 * r; ++w) gens.push_back(perm(N, {{2 * w, 2 * w + 1}}));
  EnumeratedGroup g = enumerate(gens, N);
  std::string exact = quartic_name_for(g);
  return make("Z2 wr_Omega W" + std::to_string(r), std::move(g), 1, exact);
}

int tau_coset_character(const Permutation& g) {
  if (g.degree() % 4 != 0) throw std::invalid_argument("tau_coset_character: degree must be a multiple of 4");
  int sign = 1;
  for (std::size_t j = 0; j < g.degree() / 4; ++j) {
    const int img = g(static_cast<int>(4 * j));
    if (((img >> 1) & 1) ^ (img & 1)) sign = -sign;
  }
  return sign;
}

namespace {

EnumeratedGroup paired_sign_group(int r) {
  std::vector<Permutation> gens = signed_pair_generators(r);
  for (int j = 0; j < r; ++j) gens.push_back(perm(4 * r, {{4 * j, 4 * j + 1}, {4 * j + 2, 4 * j + 3}}));
  return enumerate(gens, 4 * r);
}

EnumeratedGroup character_kernel(const EnumeratedGroup& g) {
  std::vector<Permutation> kernel;
  for (const auto& x : g.elements())
    if (!x.is_identity() && tau_coset_character(x) == 1) kernel.push_back(x);
  return enumerate(kernel, g.degree());
}

}  // namespace

PredictedGroup sl_n_tau_coset_weyl_action(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("sl_n_tau_coset_weyl_action: n must be even");
  const int r = n / 2;
  EnumeratedGroup g = character_kernel(paired_sign_group(r));
  std::string exact = quartic_name_for(g);
  if (n == 2) exact = "C2";
  return make("W(tau coset), Z2^" + std::to_string(r - 1) + " x| W" + std::to_string(r), std::move(g), 1, exact);
}

PredictedGroup sl_n_tau_eigenvalue_action(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("sl_n_tau_eigenvalue_action: n must be even");
  const int r = n / 2;
  if (r % 2 == 0) {
    PredictedGroup pg = sl_n_tau_coset_weyl_action(n);
    pg.name = "Z2^" + std::to_string(r) + " x| W" + std::to_string(r) + " (paired signs), kernel of the sign character";
    return pg;
  }
  EnumeratedGroup g = paired_sign_group(r);
  std::string exact = quartic_name_for(g);
  return make("Z2^" + std::to_string(r) + " x| W" + std::to_string(r) + " (paired signs)", std::move(g), 1, exact);
}

PredictedGroup sl_n_tau_identity_action(int n) {
  if (n < 2) throw std::invalid_argument("sl_n_tau_identity_action: n must be at least 2");
  EnumeratedGroup g = diagonal_action(symmetric_group(n), 2);
  if (n == 2) return make("S2 on eigenvalue pairs", std::move(g), 2, "C2");
  return make("S" + std::to_string(n) + " diagonal", std::move(g), 1);
}

namespace {

EnumeratedGroup power_cyclic_group(int n, int d, bool with_galois) {
  if (n < 2 || d < 2) throw std::invalid_argument("pi_sl_power_cyclic: need n >= 2 and d >= 2");
  const std::size_t N = static_cast<std::size_t>(n) * d;
  auto pt = [d](int i, int j) { return i * d + ((j % d) + d) % d; };
  std::vector<Permutation> gens;
  // Rotate block i forward and block i+1 backward: kernel of the total rotation.
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<std::uint8_t> img(N);
    std::iota(img.begin(), img.end(), 0);
    for (int j = 0; j < d; ++j) {
      img[pt(i, j)] = static_cast<std::uint8_t>(pt(i, j + 1));
      img[pt(i + 1, j)] = static_cast<std::uint8_t>(pt(i + 1, j - 1));
    }
    gens.emplace_back(std::move(img));
  }
  // Block transpositions.
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<std::uint8_t> img(N);
    std::iota(img.begin(), img.end(), 0);
    for (int j = 0; j < d; ++j) {
      img[pt(i, j)] = static_cast<std::uint8_t>(pt(i + 1, j));
      img[pt(i + 1, j)] = static_cast<std::uint8_t>(pt(i, j));
    }
    gens.emplace_back(std::move(img));
  }
  // Gal(Q(ζ_d)/Q) ≅ (Z/d)^×, acting by j ↦ u·j in every block.
  for (int u = 2; with_galois && u < d; ++u) {
    if (std::gcd(u, d) != 1) continue;
    std::vector<std::uint8_t> img(N);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) img[pt(i, j)] = static_cast<std::uint8_t>(pt(i, u * j));
    gens.emplace_back(std::move(img));
  }
  return enumerate(gens, N);
}

}  // namespace

PredictedGroup pi_sl_power_cyclic(int n, int d) {
  EnumeratedGroup g = power_cyclic_group(n, d, true);
  std::string exact = quartic_name_for(g);
  return make("(Z" + std::to_string(d) + ")^" + std::to_string(n - 1) + " x| S" + std::to_string(n) + " with Gal(Q(zeta" +
                  std::to_string(d) + ")/Q)",
              std::move(g), 1, exact);
}

PredictedGroup sl_power_cyclic_weyl_action(int n, int d) {
  EnumeratedGroup g = power_cyclic_group(n, d, false);
  std::string exact = quartic_name_for(g);
  return make("(Z" + std::to_string(d) + ")^" + std::to_string(n - 1) + " x| S" + std::to_string(n), std::move(g), 1, exact);
}

PredictedGroup sl_power_identity_action(int n, int d) {
  if (n < 2 || d < 1) throw std::invalid_argument("sl_power_identity_action: need n >= 2 and d >= 1");
  std::vector<EnumeratedGroup> factors(d, symmetric_group(n));
  EnumeratedGroup g = direct_product(factors);
  std::string exact = (n == 2 && d == 2) ? "V4" : "";
  return make("S" + std::to_string(n) + "^" + std::to_string(d), std::move(g), 1, exact);
}

PredictedGroup pi_restriction_of_scalars(int n, const EnumeratedGroup& gal) {
  if (n < 1) throw std::invalid_argument("pi_restriction_of_scalars: n must be positive");
  if (!gal.is_transitive()) throw std::invalid_argument("pi_restriction_of_scalars: Galois action must be transitive");
  EnumeratedGroup g = wreath_product(symmetric_group(n), gal);
  std::string exact = quartic_name_for(g);
  if (g.degree() == 2 && g.order() == 2) exact = "C2";
  bool natural = gal.degree() == 1;
  return make("S" + std::to_string(n) + " wr G" + std::to_string(gal.order()), std::move(g), 1, exact, natural);
}

// ---------------------------------------------------------------------------

IntegerMatrix sl_n_weyl_lattice_action(const Permutation& w) {
  const std::size_t n = w.degree();
  const std::size_t r = n - 1;
  IntegerMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    auto img = static_cast<std::size_t>(w(static_cast<int>(i)));
    if (img == r) {
      for (std::size_t k = 0; k < r; ++k) m(k, i) = -1;
    } else {
      m(img, i) = 1;
    }
  }
  return m;
}

IntegerMatrix sl_n_transpose_inverse_lattice_action(int n) {
  if (n < 2) throw std::invalid_argument("sl_n_transpose_inverse_lattice_action: n must be at least 2");
  std::vector<std::uint8_t> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = static_cast<std::uint8_t>(n - 1 - i);
  IntegerMatrix w0 = sl_n_weyl_lattice_action(Permutation(rev));
  IntegerMatrix neg(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) neg(i, j) = -w0(i, j);
  return neg;
}

CosetWeylReport coset_weyl_structure(int n, const IntegerMatrix& tau) {
  const std::size_t r = static_cast<std::size_t>(n - 1);
  if (n < 2 || tau.rows() != r || tau.cols() != r)
    throw std::invalid_argument("coset_weyl_structure: tau must be (n-1)x(n-1)");
  const IntegerMatrix id = IntegerMatrix::identity(r);

  // Finite-order elements of GL_r(Z) at these ranks have order well below 120.
  IntegerMatrix power = tau;
  int order = 1;
  while (!(power == id)) {
    if (++order > 120) throw std::invalid_argument("coset_weyl_structure: tau is not of finite order");
    power = power * tau;
  }

  CosetWeylReport rep;
  const EnumeratedGroup weyl = symmetric_group(n);
  for (const auto& w : weyl.elements()) {
    IntegerMatrix L = sl_n_weyl_lattice_action(w);
    if (L * tau == tau * L) ++rep.fixed_weyl_order;
  }

  // K = ker(1 + tau + ... + tau^{ord-1}) holds the characters trivial on the
  // fixed torus C°; (T/C°)^tau is dual to K / (1 - tau)K.
  IntegerMatrix norm(r, r);
  IntegerMatrix p = id;
  for (int i = 0; i < order; ++i) {
    norm = norm + p;
    p = p * tau;
  }
  SmithForm sn = smith_normal_form(norm);
  const std::size_t k = r - sn.rank;
  if (k > 0) {
    IntegerMatrix vinv = unimodular_inverse(sn.right);
    IntegerMatrix conj = vinv * tau * sn.right;
    IntegerMatrix restricted(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) restricted(i, j) = (i == j ? 1 : 0) - conj(sn.rank + i, sn.rank + j);
    SmithForm st = smith_normal_form(restricted);
    if (st.rank != k) throw std::domain_error("coset_weyl_structure: fixed-point group is not finite");
    for (const auto& f : st.invariant_factors)
      if (f != 1) {
        rep.torsion_invariants.push_back(f);
        rep.torsion_order *= f;
      }
  }
  rep.total_order = rep.torsion_order * static_cast<unsigned long>(rep.fixed_weyl_order);
  return rep;
}

// ---------------------------------------------------------------------------

std::optional<PredictedGroup> catalog_lookup(const std::string& scenario, int coset) {
  auto bad_coset = [&] { return std::invalid_argument("catalog: scenario " + scenario + " has no coset " + std::to_string(coset)); };
  if (scenario == "sl2" || scenario == "sl3" || scenario == "sl4") {
    if (coset != 0) throw bad_coset();
    return pi_sl_n(scenario.back() - '0');
  }
  if (scenario == "sl_tau2" || scenario == "sl_tau4") {
    int n = scenario.back() - '0';
    if (coset == 0) return sl_n_tau_identity_action(n);
    if (coset == 1) return sl_n_tau_eigenvalue_action(n);
    throw bad_coset();
  }
  if (scenario == "sl_power_cyclic2x2" || scenario == "sl_power_cyclic2x3") {
    int d = scenario.back() - '0';
    if (coset == 0) return sl_power_identity_action(2, d);
    if (coset > 0 && coset < d) return pi_sl_power_cyclic(2, d);
    throw bad_coset();
  }
  if (scenario == "res_scalars_sqrt2") {
    if (coset != 0) throw bad_coset();
    return pi_restriction_of_scalars(2, symmetric_group(2));
  }
  if (scenario == "nonsemisimple_counterexample") {
    if (coset != 0 && coset != 1) throw bad_coset();
    return std::nullopt;
  }
  throw std::invalid_argument("catalog: unknown scenario " + scenario);
}

std::optional<PredictedGroup> catalog_weyl_lookup(const std::string& scenario, int coset) {
  auto pi = catalog_lookup(scenario, coset);
  if (!pi) return pi;
  if ((scenario == "sl_tau2" || scenario == "sl_tau4") && coset == 1)
    return sl_n_tau_coset_weyl_action(scenario.back() - '0');
  if ((scenario == "sl_power_cyclic2x2" || scenario == "sl_power_cyclic2x3") && coset > 0)
    return sl_power_cyclic_weyl_action(2, scenario.back() - '0');
  if (scenario == "res_scalars_sqrt2") return sl_power_identity_action(2, 2);
  return pi;
}

std::vector<PredictedGroup> catalog_alternates(const std::string& scenario, int coset) {
  if ((scenario == "sl_tau2" || scenario == "sl_tau4") && coset == 1) return {pi_sl_n_tau(scenario.back() - '0')};
  catalog_lookup(scenario, coset);
  return {};
}

}  // namespace galwalk
