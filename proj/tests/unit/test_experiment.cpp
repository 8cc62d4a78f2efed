#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "galwalk/experiment.hpp"

using namespace galwalk;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("galwalk_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

bool square(const Rational& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t());
}

// Off-coset words of length k and how many have a rational-square
// discriminant, by direct 2x2 products.
std::pair<std::uint64_t, std::uint64_t> brute_counterexample(int k) {
  Scenario sc = make_scenario("nonsemisimple_counterexample");
  const auto& gens = sc.generators.generators();
  std::uint64_t off = 0, trivial = 0;
  const std::uint64_t total = std::uint64_t{1} << (2 * k);
  for (std::uint64_t w = 0; w < total; ++w) {
    RationalMatrix m = RationalMatrix::identity(2);
    int label = 0;
    for (int i = 0; i < k; ++i) {
      const auto& g = gens[(w >> (2 * i)) & 3];
      m = m * g.matrix;
      label ^= g.label;
    }
    if (label != 1) continue;
    ++off;
    Rational tr = m(0, 0) + m(1, 1);
    Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    trivial += square(tr * tr - 4 * det);
  }
  return {off, trivial};
}

}  // namespace

TEST_CASE("integer lists") {
  CHECK(parse_int_list("5,10,20") == std::vector<int>{5, 10, 20});
  CHECK(parse_int_list(" 1, 2 ") == std::vector<int>{1, 2});
  CHECK_THROWS(parse_int_list("1,,2"));
  CHECK_THROWS(parse_int_list("a"));
  CHECK_THROWS(parse_int_list(""));
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  CHECK_NOTHROW(c.validate());
  c.k_values = {10, 5};
  CHECK_THROWS(c.validate());
  c = {};
  c.primes_min = 500;
  c.primes_max = 100;
  CHECK_THROWS(c.validate());
  c = {};
  c.format = "xml";
  CHECK_THROWS(c.validate());
  c = {};
  c.scenario = "nope";  // names are checked when the scenario is built
  CHECK_THROWS(run_convergence(c));
}

TEST_CASE("config file values and precedence") {
  const std::string path = temp_path("config.json");
  write_file(path, R"({"scenario": "sl3", "k": [3, 6], "samples": 7, "seed": 42, "tv_max": 0.2,
                       "fp_primes": "5,7", "format": "json"})");
  ExperimentConfig base;
  base.budget = 99;
  ExperimentConfig c = load_config(path, base);
  CHECK(c.scenario == "sl3");
  CHECK(c.k_values == std::vector<int>{3, 6});
  CHECK(c.samples == 7);
  CHECK(c.seed == 42);
  CHECK(c.thresholds.tv_max == 0.2);
  CHECK(c.fp_primes == std::vector<std::uint32_t>{5, 7});
  CHECK(c.format == "json");
  CHECK(c.budget == 99);  // untouched keys keep the base value

  write_file(path, R"({"scenario": "sl3", "bogus": 1})");
  CHECK_THROWS(load_config(path));
  write_file(path, R"([1, 2])");
  CHECK_THROWS(load_config(path));
  write_file(path, R"({"samples": "many"})");
  CHECK_THROWS(load_config(path));
  CHECK_THROWS(load_config(temp_path("missing.json")));
  std::remove(path.c_str());
}

TEST_CASE("metadata preamble order") {
  ExperimentConfig c;
  Metadata m = make_metadata(c, "run");
  std::vector<std::string> keys;
  for (const auto& [k, v] : m) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"verb", "scenario", "seed", "rng", "k", "samples", "primes_min", "primes_max",
                                         "budget", "tv_max", "coverage_min", "fp_primes", "artifact_version"});
  CHECK(m[3].second == kRngAlgorithm);
  CHECK(m.back().second == artifact_version());
}

TEST_CASE("csv and json emission") {
  Table t;
  t.columns = {"a", "b", "c", "d", "e"};
  t.add({std::int64_t{1}, 0.5, std::string("x,y"), true, std::monostate{}});
  t.add({std::int64_t{-3}, 1e-20, std::string("q\"t"), false, 2.0});
  CHECK_THROWS(t.add({std::int64_t{1}}));
  Metadata meta{{"scenario", "sl2"}, {"seed", "1"}};
  CHECK(to_csv(t, meta) ==
        "# scenario: sl2\n# seed: 1\na,b,c,d,e\n1,0.5,\"x,y\",true,\n-3,1e-20,\"q\"\"t\",false,2\n");
  auto [back, back_meta] = from_json(to_json(t, meta));
  CHECK(back_meta == meta);
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0 / 3) == "0.3333333333333333");

  const std::string path = temp_path("out.csv");
  emit(t, meta, path, "csv");
  CHECK(read_file(path) == to_csv(t, meta));
  CHECK_THROWS(emit(t, meta, path, "xml"));
  CHECK_THROWS(emit(t, meta, "/nonexistent-dir/x.csv", "csv"));
  std::remove(path.c_str());
}

TEST_CASE("convergence output is byte-identical across thread counts") {
  ExperimentConfig c;
  c.scenario = "sl_tau2";
  c.k_values = {4, 8};
  c.samples = 12;
  c.budget = 100;
  c.primes_min = 1000;
  c.primes_max = 20000;
  const Metadata meta = make_metadata(c, "run");
  const std::string one = to_json(convergence_table(run_convergence(c)), meta);
  c.threads = 3;
  const std::string three = to_json(convergence_table(run_convergence(c)), meta);
  CHECK(one == three);
  c.seed = 2;
  CHECK(to_json(convergence_table(run_convergence(c)), meta) != one);
}

TEST_CASE("convergence cells add up") {
  ExperimentConfig c;
  c.scenario = "sl3";
  c.k_values = {3, 12};
  c.samples = 20;
  c.budget = 150;
  for (const auto& cell : run_convergence(c)) {
    CHECK(cell.n_certified + cell.n_consistent + cell.n_rejected + cell.n_inconclusive == cell.n_rs);
    CHECK(cell.n_rs <= cell.samples);
    CHECK(cell.samples == 20);
    double expected = double(cell.samples - cell.n_certified - cell.n_consistent) / double(cell.samples);
    CHECK(cell.mismatch_fraction() == doctest::Approx(expected));
  }
}

TEST_CASE("log-linear fit recovers an exact exponential") {
  std::vector<ConvergenceCell> cells;
  for (int k : {5, 10, 20}) {
    ConvergenceCell cell;
    cell.k = k;
    cell.has_prediction = true;
    cell.samples = 1 << 20;
    cell.n_certified = cell.samples - static_cast<std::size_t>(cell.samples * 0.8 * std::exp(-0.1 * k));
    cells.push_back(cell);
  }
  LogLinearFit fit = fit_mismatch(cells, 0);
  CHECK(fit.points == 3);
  CHECK(fit.beta == doctest::Approx(0.1).epsilon(0.01));
  CHECK(fit.c == doctest::Approx(0.8).epsilon(0.01));
  CHECK(fit_mismatch(cells, 1).points == 0);
}

TEST_CASE("counterexample oracle matches direct products and the closed form") {
  for (int k = 1; k <= 6; ++k) {
    CounterexampleOracle o = exhaustive_counterexample(k);
    auto [off, trivial] = brute_counterexample(k);
    INFO("k = " << k);
    CHECK(o.words == std::uint64_t{1} << (2 * k));
    CHECK(o.off_coset == off);
    CHECK(o.off_coset_trivial == trivial);
    CHECK(o.parity_violations == 0);
    CHECK(o.trivial_fraction() == counterexample_closed_form(k));
  }
  for (int k = 7; k <= 9; ++k) CHECK(exhaustive_counterexample(k).trivial_fraction() == counterexample_closed_form(k));
  CHECK_THROWS(exhaustive_counterexample(13));
  CHECK(counterexample_closed_form(2) == Rational(1, 3));
  CHECK(counterexample_closed_form(1) == 1);
}

TEST_CASE("Monte Carlo estimate is reproducible and close to exact") {
  CounterexampleEstimate a = estimate_counterexample(8, 3000, 5);
  CounterexampleEstimate b = estimate_counterexample(8, 3000, 5);
  CHECK(a.trivial == b.trivial);
  CHECK(a.off_coset == 3000);
  CHECK(a.drawn >= a.off_coset);
  CHECK(std::abs(a.fraction() - counterexample_closed_form(8).get_d()) < 0.04);
}

TEST_CASE("catalog and scenario tables") {
  Table s = scenarios_table();
  CHECK(s.rows.size() == scenario_names().size());
  ExperimentConfig c;
  c.scenario = "all";
  Table cat = run_catalog(c);
  CHECK(!cat.rows.empty());
  c.scenario = "sl2";
  for (const auto& row : run_catalog(c).rows) CHECK(std::get<std::string>(row[0]) == "sl2");
}

TEST_CASE("finite-field table reports bad primes") {
  ExperimentConfig c;
  c.scenario = "nonsemisimple_counterexample";
  c.fp_primes = {3, 5};
  Table t = run_finite_field(c);
  bool bad3 = false, good5 = false;
  for (const auto& row : t.rows) {
    auto p = std::get<std::int64_t>(row[0]);
    auto status = std::get<std::string>(row[2]);
    bad3 |= p == 3 && status == "bad_prime";
    good5 |= p == 5 && status != "bad_prime";
  }
  CHECK(bad3);
  CHECK(good5);
  c.scenario = "sl_power_cyclic2x3";
  CHECK_THROWS(run_finite_field(c));
}
