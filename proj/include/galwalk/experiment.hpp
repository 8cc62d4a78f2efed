#pragma once

// Experiment configuration and the runs behind the CLI verbs.

#include <cstdint>
#include <string>
#include <vector>

#include "galwalk/emit.hpp"
#include "galwalk/galois_id.hpp"
#include "galwalk/scenarios.hpp"

namespace galwalk {

/// Version string recorded in every output preamble.
const char* artifact_version();

struct ExperimentConfig {
  std::string scenario = "sl2";
  std::vector<int> k_values{5, 10, 20, 30};
  std::size_t samples = 200;
  std::uint32_t primes_min = 1000;
  std::uint32_t primes_max = 100000;
  std::size_t budget = 300;
  std::uint64_t seed = 1;
  Thresholds thresholds;
  std::string out = "-";
  std::string format = "csv";
  /// Primes for the finite-field census.
  std::vector<std::uint32_t> fp_primes{5, 7, 11, 13, 17};
  /// Worker threads; never changes the output.
  unsigned threads = 1;

  /// Throws std::invalid_argument describing the first invalid field.
  void validate() const;
};

/// Reads a flat JSON object; unknown keys are an error. Keys: scenario, k,
/// samples, primes_min, primes_max, budget, seed, out, format, tv_max,
/// coverage_min, fp_primes, threads. `k` and `fp_primes` accept an array or
/// a comma-separated string.
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});
/// Same as load_config on JSON text.
ExperimentConfig parse_config(const std::string& json_text, ExperimentConfig base = {});

/// Parses "5,10,20" into integers; throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

/// Scenario, seed, RNG, prime window, thresholds and version, in that order.
Metadata make_metadata(const ExperimentConfig& config, const std::string& verb);

/// Outcome counts for one (k, coset) cell of a convergence run.
struct ConvergenceCell {
  int k = 0;
  int coset = 0;
  bool has_prediction = false;
  std::size_t samples = 0;
  std::size_t n_rs = 0;
  std::size_t n_certified = 0;
  std::size_t n_consistent = 0;
  std::size_t n_rejected = 0;
  std::size_t n_inconclusive = 0;
  /// Degree-2 squarefree parts only (cosets without a prediction).
  std::size_t n_quadratic_trivial = 0;
  std::size_t n_quadratic_order2 = 0;

  /// Fraction of samples that are not regular semisimple or are not
  /// certified or consistent. Zero samples give 0.
  double mismatch_fraction() const;
};

std::vector<ConvergenceCell> run_convergence(const ExperimentConfig& config);
Table convergence_table(const std::vector<ConvergenceCell>& cells);

/// Least-squares fit of log(mismatch_fraction) = log c - beta·k over cells
/// of one coset with a nonzero fraction; descriptive only.
struct LogLinearFit {
  double c = 0.0;
  double beta = 0.0;
  std::size_t points = 0;
};
LogLinearFit fit_mismatch(const std::vector<ConvergenceCell>& cells, int coset);

/// One row per (p, coset, cycle type), plus a bad_prime row for primes the
/// scenario cannot be reduced at.
Table run_finite_field(const ExperimentConfig& config);

/// Exhaustive enumeration of all 4^k words of the nonsemisimple
/// counterexample walk.
struct CounterexampleOracle {
  int k = 0;
  std::uint64_t words = 0;
  std::uint64_t off_coset = 0;
  std::uint64_t off_coset_trivial = 0;
  /// Off-coset words where "ab is a square" differs from the parity rule
  /// (N_I odd for even k, N_I even for odd k).
  std::uint64_t parity_violations = 0;

  Rational trivial_fraction() const;
};

/// Throws std::invalid_argument unless 0 <= k <= 12.
CounterexampleOracle exhaustive_counterexample(int k);

/// (1 - 2^{1-k}) / (2 (1 - 2^{-k})) for even k, 1 / (2 (1 - 2^{-k})) for odd
/// k >= 1: the probability that an off-coset word gives a trivial Galois group.
Rational counterexample_closed_form(int k);

/// Monte Carlo estimate: among the first `off_coset_samples` off-coset
/// samples (by index), the fraction with trivial quadratic Galois group.
struct CounterexampleEstimate {
  int k = 0;
  std::size_t drawn = 0;
  std::size_t off_coset = 0;
  std::size_t trivial = 0;
  double fraction() const { return off_coset ? static_cast<double>(trivial) / static_cast<double>(off_coset) : 0.0; }
};
CounterexampleEstimate estimate_counterexample(int k, std::size_t off_coset_samples, std::uint64_t seed);

/// Oracle rows for every k <= 10 in config.k_values, next to the Monte
/// Carlo estimate from config.samples off-coset samples.
Table run_oracle(const ExperimentConfig& config);

/// Type distributions of every coset's predicted and alternate groups.
Table run_catalog(const ExperimentConfig& config);

/// Scenario list.
Table scenarios_table();

/// Defaults for a CLI verb: `oracle` targets the counterexample with
/// k = 1..10 and 20000 samples, `catalog` covers every scenario.
ExperimentConfig verb_defaults(const std::string& verb);

/// Runs one verb (scenarios, run, finfield, oracle, catalog) and returns
/// the table with its metadata preamble. Throws std::invalid_argument on an
/// unknown verb.
std::pair<Table, Metadata> run_verb(const std::string& verb, const ExperimentConfig& config);

}  // namespace galwalk
