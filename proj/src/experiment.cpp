#include "galwalk/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "galwalk/finfield.hpp"
#include "galwalk/picatalog.hpp"

#ifndef GALWALK_VERSION
#define GALWALK_VERSION "0.0.0"
#endif

namespace galwalk {

const char* artifact_version() { return GALWALK_VERSION; }

// --------------------------------------------------------------------------
// Configuration

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("config: " + what); };
  if (scenario.empty()) fail("scenario is empty");
  if (k_values.empty()) fail("k needs at least one value");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] < 0) fail("k values must be nonnegative");
    if (i && k_values[i] <= k_values[i - 1]) fail("k values must be strictly ascending");
  }
  if (samples == 0) fail("samples must be positive");
  if (primes_min < 2 || primes_max < primes_min) fail("prime window must satisfy 2 <= primes_min <= primes_max");
  if (budget == 0) fail("budget must be positive");
  if (!(thresholds.tv_max > 0.0 && thresholds.tv_max <= 1.0)) fail("tv_max must lie in (0, 1]");
  if (!(thresholds.coverage_min > 0.0 && thresholds.coverage_min <= 1.0)) fail("coverage_min must lie in (0, 1]");
  if (format != "csv" && format != "json") fail("format must be csv or json");
  if (out.empty()) fail("out is empty");
  if (fp_primes.empty()) fail("fp_primes needs at least one prime");
  if (threads == 0) fail("threads must be positive");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + text);
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw std::invalid_argument("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

namespace {

ExperimentConfig parse_config_from(const std::string& text, ExperimentConfig cfg, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config " + path + ": expected a flat JSON object");

  auto ints = [](const nlohmann::json& v) {
    if (v.is_string()) return parse_int_list(v.get<std::string>());
    if (v.is_number_integer()) return std::vector<int>{v.get<int>()};
    return v.get<std::vector<int>>();
  };
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "scenario") cfg.scenario = v.get<std::string>();
      else if (key == "k") cfg.k_values = ints(v);
      else if (key == "samples") cfg.samples = v.get<std::size_t>();
      else if (key == "primes_min") cfg.primes_min = v.get<std::uint32_t>();
      else if (key == "primes_max") cfg.primes_max = v.get<std::uint32_t>();
      else if (key == "budget") cfg.budget = v.get<std::size_t>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "format") cfg.format = v.get<std::string>();
      else if (key == "tv_max") cfg.thresholds.tv_max = v.get<double>();
      else if (key == "coverage_min") cfg.thresholds.coverage_min = v.get<double>();
      else if (key == "threads") cfg.threads = v.get<unsigned>();
      else if (key == "fp_primes") {
        cfg.fp_primes.clear();
        for (int p : ints(v)) {
          if (p < 2) throw std::invalid_argument("fp_primes entries must be primes");
          cfg.fp_primes.push_back(static_cast<std::uint32_t>(p));
        }
      } else throw std::invalid_argument("unknown key");
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("config " + path + ": key '" + key + "': " + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config " + path + ": key '" + key + "': " + e.what());
    }
  }
  return cfg;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text, ExperimentConfig base) {
  return parse_config_from(json_text, std::move(base), "<string>");
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read config file: " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config_from(ss.str(), std::move(base), path);
}

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Walk seed for step count k: independent streams across k.
std::uint64_t seed_for_k(std::uint64_t seed, int k) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(k) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Runs body(i) for i in [0, n) on `threads` workers, strided.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < n; i += threads) body(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Cell count(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

Metadata make_metadata(const ExperimentConfig& c, const std::string& verb) {
  return {
      {"verb", verb},
      {"scenario", c.scenario},
      {"seed", std::to_string(c.seed)},
      {"rng", kRngAlgorithm},
      {"k", join(c.k_values)},
      {"samples", std::to_string(c.samples)},
      {"primes_min", std::to_string(c.primes_min)},
      {"primes_max", std::to_string(c.primes_max)},
      {"budget", std::to_string(c.budget)},
      {"tv_max", format_double(c.thresholds.tv_max)},
      {"coverage_min", format_double(c.thresholds.coverage_min)},
      {"fp_primes", join(c.fp_primes)},
      {"artifact_version", artifact_version()},
  };
}

// --------------------------------------------------------------------------
// Convergence

double ConvergenceCell::mismatch_fraction() const {
  if (samples == 0) return 0.0;
  return static_cast<double>(samples - n_certified - n_consistent) / static_cast<double>(samples);
}

namespace {

struct SampleOutcome {
  int label = 0;
  bool rs = false;
  VerdictKind kind = VerdictKind::Inconclusive;
  int quadratic = -1;  // 0 trivial, 1 order 2, -1 not applicable
};

}  // namespace

std::vector<ConvergenceCell> run_convergence(const ExperimentConfig& config) {
  config.validate();
  const Scenario sc = make_scenario(config.scenario);
  const int m = sc.coset_count();
  std::vector<std::optional<PredictedGroup>> predicted;
  for (int c = 0; c < m; ++c) predicted.push_back(catalog_lookup(sc.name, c));
  const std::vector<std::uint32_t> primes = primes_in(config.primes_min, config.primes_max);

  std::vector<ConvergenceCell> cells;
  for (int k : config.k_values) {
    const std::uint64_t seed = seed_for_k(config.seed, k);
    std::vector<SampleOutcome> outcomes(config.samples);
    parallel_for(config.samples, config.threads, [&](std::size_t i) {
      WalkSample s = sample_walk(sc.generators, k, seed, i);
      SampleOutcome& o = outcomes[i];
      o.label = s.label;
      RationalPolynomial f = char_poly(s.element);
      if (const auto& pg = predicted[s.label]) {
        Identification id = identify(f, *pg, primes, config.budget, config.thresholds);
        o.rs = id.regular_semisimple;
        o.kind = id.verdict.kind;
      } else {
        o.rs = squarefree_over_q(f);
        if (o.rs && f.degree() == 2) o.quadratic = quadratic_galois(f) == SmallGroup::C1 ? 0 : 1;
      }
    });

    for (int c = 0; c < m; ++c) {
      ConvergenceCell cell;
      cell.k = k;
      cell.coset = c;
      cell.has_prediction = predicted[c].has_value();
      for (const auto& o : outcomes) {
        if (o.label != c) continue;
        ++cell.samples;
        if (!o.rs) continue;
        ++cell.n_rs;
        if (!cell.has_prediction) {
          if (o.quadratic == 0) ++cell.n_quadratic_trivial;
          if (o.quadratic == 1) ++cell.n_quadratic_order2;
          continue;
        }
        switch (o.kind) {
          case VerdictKind::CertifiedSn:
          case VerdictKind::CertifiedExact: ++cell.n_certified; break;
          case VerdictKind::Consistent: ++cell.n_consistent; break;
          case VerdictKind::Rejected: ++cell.n_rejected; break;
          case VerdictKind::Inconclusive: ++cell.n_inconclusive; break;
        }
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

Table convergence_table(const std::vector<ConvergenceCell>& cells) {
  Table t;
  t.columns = {"k",           "coset",        "samples",        "n_rs",
               "n_certified", "n_consistent", "n_rejected",     "n_inconclusive",
               "mismatch_fraction", "n_quadratic_trivial", "n_quadratic_order2"};
  for (const auto& c : cells) {
    if (c.has_prediction)
      t.add({std::int64_t{c.k}, std::int64_t{c.coset}, count(c.samples), count(c.n_rs), count(c.n_certified),
             count(c.n_consistent), count(c.n_rejected), count(c.n_inconclusive), c.mismatch_fraction(),
             std::monostate{}, std::monostate{}});
    else
      t.add({std::int64_t{c.k}, std::int64_t{c.coset}, count(c.samples), count(c.n_rs), std::monostate{},
             std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}, count(c.n_quadratic_trivial),
             count(c.n_quadratic_order2)});
  }
  return t;
}

LogLinearFit fit_mismatch(const std::vector<ConvergenceCell>& cells, int coset) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& c : cells)
    if (c.coset == coset && c.has_prediction && c.samples > 0 && c.mismatch_fraction() > 0.0)
      pts.emplace_back(c.k, std::log(c.mismatch_fraction()));
  LogLinearFit fit;
  fit.points = pts.size();
  if (pts.size() < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return fit;
  const double slope = (n * sxy - sx * sy) / den;
  fit.beta = -slope;
  fit.c = std::exp((sy - slope * sx) / n);
  return fit;
}

// --------------------------------------------------------------------------
// Finite fields

Table run_finite_field(const ExperimentConfig& config) {
  config.validate();
  const Scenario sc = make_scenario(config.scenario);
  if (sc.dimension() > 4)
    throw std::invalid_argument("finfield: scenario " + sc.name + " has dimension " + std::to_string(sc.dimension()) +
                                " (at most 4 supported)");
  Table t;
  t.columns = {"p",           "coset",      "status",        "type",      "count",     "rs_count", "total",
               "rs_fraction", "rs_density", "coset_density", "predicted", "in_target", "flagged"};
  for (std::uint32_t p : config.fp_primes) {
    FiniteGroupModP grp;
    try {
      grp = enumerate_mod_p(sc.generators, p);
    } catch (const BadPrime&) {
      t.add({std::int64_t{p}, std::monostate{}, std::string("bad_prime"), std::monostate{}, std::monostate{},
             std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{},
             std::monostate{}, std::monostate{}, std::monostate{}});
      continue;
    } catch (const GroupTooLarge& e) {
      throw GroupTooLarge(std::string(e.what()) + " (p = " + std::to_string(p) + ")");
    }
    std::vector<CosetCensus> censuses;
    std::vector<std::map<CycleType, Rational>> targets;
    for (int c = 0; c < sc.coset_count(); ++c) {
      auto pg = catalog_weyl_lookup(sc.name, c);
      censuses.push_back(census(grp.cosets[c], p, c, pg ? pg->multiplicity : 1));
      targets.push_back(pg ? pg->group->type_distribution() : std::map<CycleType, Rational>{});
    }
    DensityReport rep = density_report(censuses, targets);
    for (const auto& r : rep.rows) {
      const CosetCensus& cs = censuses[r.coset];
      t.add({std::int64_t{p}, std::int64_t{r.coset}, std::string("good"), r.type.to_string(), count(r.count),
             count(cs.rs_count), count(cs.total), cs.rs_fraction(), r.rs_density, r.coset_density, r.predicted,
             r.in_target, r.flagged});
    }
  }
  return t;
}

// --------------------------------------------------------------------------
// Counterexample oracle

Rational CounterexampleOracle::trivial_fraction() const {
  if (off_coset == 0) return 0;
  Rational r(Integer(std::to_string(off_coset_trivial)), Integer(std::to_string(off_coset)));
  r.canonicalize();
  return r;
}

Rational counterexample_closed_form(int k) {
  if (k < 1) throw std::invalid_argument("counterexample_closed_form: k must be positive");
  Integer pk = 1;
  pk <<= k;  // 2^k
  // even k: (1 - 2^{1-k}) / (2 (1 - 2^{-k})) = (2^k - 2) / (2 (2^k - 1))
  Rational r = k % 2 == 0 ? Rational(pk - 2, 2 * (pk - 1)) : Rational(pk, 2 * (pk - 1));
  r.canonicalize();
  return r;
}

namespace {

struct OracleWalk {
  const std::vector<Generator>& gens;
  const ComponentGroup& group;
  std::size_t identity_index;
  int k;
  CounterexampleOracle& acc;

  void descend(const RationalMatrix& prefix, int label, int depth, int n_identity) {
    if (depth == k) {
      ++acc.words;
      if (label == 0) return;
      ++acc.off_coset;
      bool trivial = quadratic_galois(char_poly(prefix)) == SmallGroup::C1;
      if (trivial) ++acc.off_coset_trivial;
      bool rule = (n_identity % 2) == ((k + 1) % 2);
      if (trivial != rule) ++acc.parity_violations;
      return;
    }
    for (std::size_t s = 0; s < gens.size(); ++s)
      descend(prefix * gens[s].matrix, group.multiply(label, gens[s].label), depth + 1,
              n_identity + (s == identity_index ? 1 : 0));
  }
};

}  // namespace

CounterexampleOracle exhaustive_counterexample(int k) {
  if (k < 0 || k > 12) throw std::invalid_argument("exhaustive_counterexample: k must lie in [0, 12]");
  const Scenario sc = make_scenario("nonsemisimple_counterexample");
  const auto& gens = sc.generators.generators();
  std::size_t id = gens.size();
  for (std::size_t s = 0; s < gens.size(); ++s)
    if (gens[s].matrix.is_identity()) id = s;
  CounterexampleOracle acc;
  acc.k = k;
  OracleWalk walk{gens, sc.generators.component_group(), id, k, acc};
  walk.descend(RationalMatrix::identity(2), 0, 0, 0);
  return acc;
}

CounterexampleEstimate estimate_counterexample(int k, std::size_t off_coset_samples, std::uint64_t seed) {
  const Scenario sc = make_scenario("nonsemisimple_counterexample");
  CounterexampleEstimate e;
  e.k = k;
  if (k == 0) return e;
  const std::uint64_t s = seed_for_k(seed, k);
  while (e.off_coset < off_coset_samples) {
    WalkSample w = sample_walk(sc.generators, k, s, e.drawn++);
    if (w.label == 0) continue;
    ++e.off_coset;
    if (quadratic_galois(char_poly(w.element)) == SmallGroup::C1) ++e.trivial;
  }
  return e;
}

Table run_oracle(const ExperimentConfig& config) {
  config.validate();
  if (config.scenario != "nonsemisimple_counterexample")
    throw std::invalid_argument("oracle: only the nonsemisimple_counterexample scenario has an exhaustive oracle");
  Table t;
  t.columns = {"k",          "words",       "off_coset",   "off_coset_trivial", "exact_fraction",
               "exact_value", "closed_form", "parity_violations", "mc_off_coset", "mc_trivial",
               "mc_fraction", "abs_difference"};
  for (int k : config.k_values) {
    if (k > 10) throw std::invalid_argument("oracle: k must be at most 10");
    if (k == 0) continue;
    CounterexampleOracle o = exhaustive_counterexample(k);
    CounterexampleEstimate e = estimate_counterexample(k, config.samples, config.seed);
    const double exact = o.trivial_fraction().get_d();
    t.add({std::int64_t{k}, count(o.words), count(o.off_coset), count(o.off_coset_trivial),
           o.trivial_fraction().get_str(), exact, counterexample_closed_form(k).get_d(), count(o.parity_violations),
           count(e.off_coset), count(e.trivial), e.fraction(), std::abs(e.fraction() - exact)});
  }
  return t;
}

// --------------------------------------------------------------------------
// Catalog and registry

Table run_catalog(const ExperimentConfig& config) {
  std::vector<std::string> names =
      config.scenario == "all" ? scenario_names() : std::vector<std::string>{config.scenario};
  Table t;
  t.columns = {"scenario", "coset", "role", "group", "order", "degree", "multiplicity", "exact_name", "type",
               "frequency", "frequency_value"};
  for (const auto& name : names) {
    const Scenario sc = make_scenario(name);
    for (int c = 0; c < sc.coset_count(); ++c) {
      auto pg = catalog_lookup(name, c);
      if (!pg) {
        t.add({name, std::int64_t{c}, std::string("none"), std::monostate{}, std::monostate{},
               std::int64_t{sc.dimension()}, std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{},
               std::monostate{}});
        continue;
      }
      std::vector<std::pair<std::string, PredictedGroup>> groups{{"primary", *pg}};
      for (auto& alt : catalog_alternates(name, c)) groups.emplace_back("alternate", std::move(alt));
      for (const auto& [role, g] : groups)
        for (const auto& [type, freq] : g.group->type_distribution())
          t.add({name, std::int64_t{c}, role, g.name, count(g.group->order()), std::int64_t{g.degree},
                 std::int64_t{g.multiplicity}, g.exact_name, type.to_string(), freq.get_str(), freq.get_d()});
    }
  }
  return t;
}

Table scenarios_table() {
  Table t;
  t.columns = {"scenario", "dimension", "cosets", "generators", "coset_names", "description"};
  for (const auto& sc : builtin_scenarios()) {
    std::string names;
    for (std::size_t i = 0; i < sc.coset_names.size(); ++i) names += (i ? ";" : "") + sc.coset_names[i];
    t.add({sc.name, std::int64_t{sc.dimension()}, std::int64_t{sc.coset_count()}, count(sc.generators.size()), names,
           sc.description});
  }
  return t;
}

ExperimentConfig verb_defaults(const std::string& verb) {
  ExperimentConfig c;
  if (verb == "oracle") {
    c.scenario = "nonsemisimple_counterexample";
    c.k_values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    c.samples = 20000;
  } else if (verb == "catalog") {
    c.scenario = "all";
  }
  return c;
}

std::pair<Table, Metadata> run_verb(const std::string& verb, const ExperimentConfig& config) {
  if (verb == "scenarios") return {scenarios_table(), make_metadata(config, verb)};
  if (verb == "finfield") return {run_finite_field(config), make_metadata(config, verb)};
  if (verb == "oracle") return {run_oracle(config), make_metadata(config, verb)};
  if (verb == "catalog") return {run_catalog(config), make_metadata(config, verb)};
  if (verb != "run") throw std::invalid_argument("unknown verb: " + verb);
  auto cells = run_convergence(config);
  Metadata meta = make_metadata(config, verb);
  const int cosets = make_scenario(config.scenario).coset_count();
  for (int coset = 0; coset < cosets; ++coset) {
    LogLinearFit fit = fit_mismatch(cells, coset);
    if (fit.points < 2) continue;
    meta.emplace_back("fit_coset" + std::to_string(coset), "c=" + format_double(fit.c) + " beta=" +
                                                               format_double(fit.beta) +
                                                               " points=" + std::to_string(fit.points));
  }
  return {convergence_table(cells), std::move(meta)};
}

}  // namespace galwalk
