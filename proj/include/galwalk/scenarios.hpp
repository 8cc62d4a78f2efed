#pragma once

// Built-in walk scenarios: generating sets with coset labels.

#include <string>
#include <vector>

#include "galwalk/walker.hpp"

namespace galwalk {

struct Scenario {
  std::string name;
  std::string description;
  GeneratorSet generators;
  /// Human-readable name of each coset label.
  std::vector<std::string> coset_names;

  int dimension() const { return static_cast<int>(generators.dim()); }
  int coset_count() const { return generators.component_group().order(); }
};

/// Names of all built-in scenarios, in registry order.
std::vector<std::string> scenario_names();

/// Throws std::invalid_argument for an unknown name.
Scenario make_scenario(const std::string& name);

std::vector<Scenario> builtin_scenarios();

}  // namespace galwalk
