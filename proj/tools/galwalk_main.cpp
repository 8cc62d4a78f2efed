// galwalk: random-walk Galois experiments from the command line.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "galwalk/experiment.hpp"

using namespace galwalk;

namespace {

struct Flags {
  std::string config;
  std::string scenario, k, fp_primes, out, format;
  std::size_t samples = 0, budget = 0;
  std::uint32_t primes_min = 0, primes_max = 0;
  std::uint64_t seed = 0;
  double tv_max = 0, coverage_min = 0;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Flat JSON config file; flags override its values");
  cmd->add_option("--scenario", f.scenario, "Scenario name (see `galwalk scenarios`)");
  cmd->add_option("--k", f.k, "Comma-separated ascending walk lengths");
  cmd->add_option("--samples", f.samples, "Samples per walk length");
  cmd->add_option("--primes-min", f.primes_min, "Lower end of the Frobenius prime window");
  cmd->add_option("--primes-max", f.primes_max, "Upper end of the Frobenius prime window");
  cmd->add_option("--budget", f.budget, "Good primes per identification");
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--out", f.out, "Output path, - for standard output");
  cmd->add_option("--format", f.format, "csv or json");
  cmd->add_option("--tv-max", f.tv_max, "Total variation threshold");
  cmd->add_option("--coverage-min", f.coverage_min, "Minimum fraction of target types observed");
  cmd->add_option("--fp-primes", f.fp_primes, "Comma-separated primes for the finite-field census");
  cmd->add_option("--threads", f.threads, "Worker threads (output does not depend on it)");
}

ExperimentConfig resolve(const CLI::App* cmd, const Flags& f, ExperimentConfig base) {
  ExperimentConfig c = f.config.empty() ? base : load_config(f.config, base);
  auto given = [cmd](const char* name) { return cmd->count(name) > 0; };
  if (given("--scenario")) c.scenario = f.scenario;
  if (given("--k")) c.k_values = parse_int_list(f.k);
  if (given("--samples")) c.samples = f.samples;
  if (given("--primes-min")) c.primes_min = f.primes_min;
  if (given("--primes-max")) c.primes_max = f.primes_max;
  if (given("--budget")) c.budget = f.budget;
  if (given("--seed")) c.seed = f.seed;
  if (given("--out")) c.out = f.out;
  if (given("--format")) c.format = f.format;
  if (given("--tv-max")) c.thresholds.tv_max = f.tv_max;
  if (given("--coverage-min")) c.thresholds.coverage_min = f.coverage_min;
  if (given("--threads")) c.threads = f.threads;
  if (given("--fp-primes")) {
    c.fp_primes.clear();
    for (int p : parse_int_list(f.fp_primes)) {
      if (p < 2) throw std::invalid_argument("--fp-primes entries must be primes");
      c.fp_primes.push_back(static_cast<std::uint32_t>(p));
    }
  }
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois groups of random walks on linear groups"};
  app.require_subcommand(1);
  Flags f;
  auto* scen = app.add_subcommand("scenarios", "List built-in scenarios");
  auto* run = app.add_subcommand("run", "Convergence of identification verdicts with walk length");
  auto* fin = app.add_subcommand("finfield", "Cycle-type census of the scenario group over small prime fields");
  auto* orc = app.add_subcommand("oracle", "Exhaustive word enumeration for the nonsemisimple counterexample");
  auto* cat = app.add_subcommand("catalog", "Predicted groups and their cycle-type distributions");
  for (auto* cmd : {scen, run, fin, orc, cat}) add_common(cmd, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, std::cerr, std::cerr);
  }

  try {
    for (auto* cmd : {scen, run, fin, orc, cat}) {
      if (!cmd->parsed()) continue;
      const std::string verb = cmd->get_name();
      ExperimentConfig c = resolve(cmd, f, verb_defaults(verb));
      auto [table, meta] = run_verb(verb, c);
      if (verb == "finfield")
        for (const auto& row : table.rows)
          if (std::get<std::string>(row[2]) == "bad_prime")
            std::cerr << "galwalk: skipped bad prime p=" << std::get<std::int64_t>(row[0]) << "\n";
      emit(table, meta, c.out, c.format);
    }
  } catch (const std::exception& e) {
    std::cerr << "galwalk: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
