// Python bindings. Rationals cross the boundary as "p/q" strings; the
// galwalk package turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galwalk/experiment.hpp"
#include "galwalk/finfield.hpp"
#include "galwalk/picatalog.hpp"

namespace py = pybind11;
using namespace galwalk;

namespace {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  r.canonicalize();
  return r;
}

RationalPolynomial to_poly(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return RationalPolynomial(std::move(c));
}

std::vector<std::string> from_poly(const RationalPolynomial& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

RationalMatrix to_matrix(const std::vector<std::vector<std::string>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> from_matrix(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i].push_back(m(i, j).get_str());
  return rows;
}

py::tuple type_tuple(const CycleType& t) { return py::tuple(py::cast(t.parts())); }

py::dict group_dict(const PredictedGroup& g) {
  py::dict d;
  d["name"] = g.name;
  d["order"] = g.group->order();
  d["degree"] = g.degree;
  d["multiplicity"] = g.multiplicity;
  d["exact_name"] = g.exact_name;
  d["natural_symmetric"] = g.natural_symmetric;
  py::dict dist;
  for (const auto& [t, f] : g.group->type_distribution()) dist[type_tuple(t)] = f.get_str();
  d["distribution"] = dist;
  return d;
}

py::object lookup(const std::string& scenario, int coset, bool weyl) {
  auto g = weyl ? catalog_weyl_lookup(scenario, coset) : catalog_lookup(scenario, coset);
  if (!g) return py::none();
  return group_dict(*g);
}

py::dict scenario_info(const std::string& name) {
  Scenario sc = make_scenario(name);
  py::dict d;
  d["name"] = sc.name;
  d["description"] = sc.description;
  d["dimension"] = sc.dimension();
  d["cosets"] = sc.coset_names;
  py::list gens;
  for (const auto& g : sc.generators.generators()) {
    py::dict e;
    e["matrix"] = from_matrix(g.matrix);
    e["label"] = g.label;
    gens.append(e);
  }
  d["generators"] = gens;
  return d;
}

py::dict sample(const std::string& scenario, int k, std::uint64_t seed, std::uint64_t index) {
  Scenario sc = make_scenario(scenario);
  WalkSample w = sample_walk(sc.generators, k, seed, index);
  py::dict d;
  d["matrix"] = from_matrix(w.element);
  d["label"] = w.label;
  d["word"] = std::vector<int>(w.word.begin(), w.word.end());
  return d;
}

py::tuple frobenius(const std::vector<std::string>& coeffs, std::uint32_t p, int multiplicity) {
  FrobeniusSample s = frobenius_cycle_type(to_poly(coeffs), p, multiplicity);
  const char* status = s.status == FrobeniusStatus::good        ? "good"
                       : s.status == FrobeniusStatus::bad_prime ? "bad_prime"
                                                                : "not_squarefree";
  return py::make_tuple(status, s.cycle_type ? py::object(type_tuple(*s.cycle_type)) : py::none());
}

py::dict identify_poly(const std::vector<std::string>& coeffs, const std::string& scenario, int coset,
                       std::uint32_t primes_min, std::uint32_t primes_max, std::size_t budget, double tv_max,
                       double coverage_min) {
  auto target = catalog_lookup(scenario, coset);
  if (!target) throw std::invalid_argument("no predicted group for this coset");
  Identification r;
  {
    py::gil_scoped_release release;
    r = identify(to_poly(coeffs), *target, primes_in(primes_min, primes_max), budget, Thresholds{tv_max, coverage_min});
  }
  py::dict d;
  d["regular_semisimple"] = r.regular_semisimple;
  d["verdict"] = to_string(r.verdict.kind);
  d["target"] = r.verdict.target;
  d["exact_group"] = r.verdict.exact_group;
  d["tv_distance"] = r.verdict.tv_distance;
  d["coverage"] = r.verdict.coverage;
  d["good_primes"] = r.summary.good_count;
  d["bad_primes"] = r.summary.bad_count;
  py::dict counts;
  for (const auto& [t, c] : r.summary.counts) counts[type_tuple(t)] = c;
  d["counts"] = counts;
  return d;
}

py::list census_mod_p(const std::string& scenario, std::uint32_t p) {
  Scenario sc = make_scenario(scenario);
  FiniteGroupModP g = enumerate_mod_p(sc.generators, p);
  py::list out;
  for (int c = 0; c < sc.coset_count(); ++c) {
    auto weyl = catalog_weyl_lookup(scenario, c);
    CosetCensus cen = census(g.cosets[c], p, c, weyl ? weyl->multiplicity : 1);
    py::dict d;
    d["coset"] = c;
    d["total"] = cen.total;
    d["rs_count"] = cen.rs_count;
    py::dict types;
    for (const auto& [t, n] : cen.type_counts) types[type_tuple(t)] = n;
    d["type_counts"] = types;
    out.append(d);
  }
  return out;
}

py::dict counterexample(int k) {
  CounterexampleOracle o = exhaustive_counterexample(k);
  py::dict d;
  d["k"] = o.k;
  d["words"] = o.words;
  d["off_coset"] = o.off_coset;
  d["off_coset_trivial"] = o.off_coset_trivial;
  d["parity_violations"] = o.parity_violations;
  d["trivial_fraction"] = o.trivial_fraction().get_str();
  return d;
}

py::dict weyl_structure(int n) {
  CosetWeylReport r = coset_weyl_structure(n, sl_n_transpose_inverse_lattice_action(n));
  py::dict d;
  d["fixed_weyl_order"] = r.fixed_weyl_order;
  std::vector<std::string> inv;
  for (const auto& x : r.torsion_invariants) inv.push_back(x.get_str());
  d["torsion_invariants"] = inv;
  d["total_order"] = r.total_order.get_str();
  return d;
}

std::string run_text(const std::string& verb, const std::string& config_json) {
  ExperimentConfig c = parse_config(config_json, verb_defaults(verb));
  c.validate();
  py::gil_scoped_release release;
  auto [table, meta] = run_verb(verb, c);
  return c.format == "json" ? to_json(table, meta) : to_csv(table, meta);
}

}  // namespace

PYBIND11_MODULE(_galwalk, m) {
  m.doc() = "Galois groups of random walks on linear groups";
  m.def("version", &artifact_version);
  m.def("rng_algorithm", [] { return std::string(kRngAlgorithm); });
  m.def("scenario_names", &scenario_names);
  m.def("scenario_info", &scenario_info, py::arg("name"));
  m.def("sample_walk", &sample, py::arg("scenario"), py::arg("k"), py::arg("seed"), py::arg("index"));
  m.def("char_poly", [](const std::vector<std::vector<std::string>>& rows) { return from_poly(char_poly(to_matrix(rows))); },
        py::arg("rows"));
  m.def("frobenius_cycle_type", &frobenius, py::arg("coeffs"), py::arg("p"), py::arg("multiplicity") = 1);
  m.def("quadratic_galois", [](const std::vector<std::string>& c) { return to_string(quadratic_galois(to_poly(c))); },
        py::arg("coeffs"));
  m.def(
      "quartic_galois",
      [](const std::vector<std::string>& c) {
        QuarticGalois q = quartic_galois_exact(to_poly(c));
        return py::make_tuple(to_string(q.group), q.irreducible);
      },
      py::arg("coeffs"));
  m.def("predicted_group", [](const std::string& s, int c) { return lookup(s, c, false); }, py::arg("scenario"),
        py::arg("coset"));
  m.def("weyl_group", [](const std::string& s, int c) { return lookup(s, c, true); }, py::arg("scenario"),
        py::arg("coset"));
  m.def("identify", &identify_poly, py::arg("coeffs"), py::arg("scenario"), py::arg("coset"),
        py::arg("primes_min") = 1000, py::arg("primes_max") = 100000, py::arg("budget") = 300, py::arg("tv_max") = 0.1,
        py::arg("coverage_min") = 1.0);
  m.def("census_mod_p", &census_mod_p, py::arg("scenario"), py::arg("p"));
  m.def("counterexample_oracle", &counterexample, py::arg("k"));
  m.def("counterexample_closed_form", [](int k) { return counterexample_closed_form(k).get_str(); }, py::arg("k"));
  m.def("coset_weyl_structure", &weyl_structure, py::arg("n"));
  m.def("run_verb", &run_text, py::arg("verb"), py::arg("config_json"));

  py::register_exception<GroupTooLarge>(m, "GroupTooLarge", PyExc_RuntimeError);
}
