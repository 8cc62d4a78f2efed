#pragma once

// Admissible generating sets and seeded random walks with coset labels.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "galwalk/exactmat.hpp"

namespace galwalk {

/// Finite group H/H° given by its multiplication table; element 0 is the
/// identity.
class ComponentGroup {
public:
  ComponentGroup();  // trivial group
  explicit ComponentGroup(std::vector<std::vector<int>> table);

  static ComponentGroup cyclic(int m);

  int order() const { return static_cast<int>(table_.size()); }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

struct Generator {
  RationalMatrix matrix;
  int label = 0;
};

/// Symmetric generating set containing the identity. Uniform choice over
/// the (multi)set of entries defines one walk step.
class GeneratorSet {
public:
  GeneratorSet(std::vector<Generator> gens, ComponentGroup group);

  const std::vector<Generator>& generators() const { return gens_; }
  const ComponentGroup& component_group() const { return group_; }
  std::size_t dim() const { return gens_.front().matrix.dim(); }
  std::size_t size() const { return gens_.size(); }

private:
  std::vector<Generator> gens_;
  ComponentGroup group_;
};

/// Adds missing inverses and the identity pair. Throws
/// std::invalid_argument on an empty set, singular or mis-sized generators,
/// or labels outside the component group; SingularMatrix on singular input.
GeneratorSet make_admissible(const std::vector<Generator>& raw, const ComponentGroup& group);

struct WalkSample {
  RationalMatrix element;
  int label = 0;
  int length = 0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  /// Indices into GeneratorSet::generators(), in multiplication order.
  std::vector<std::uint16_t> word;
};

/// Name of the per-sample stream construction, recorded in output metadata.
extern const char* const kRngAlgorithm;

/// Per-sample random stream derived from (seed, index) only.
class SampleStream {
public:
  SampleStream(std::uint64_t seed, std::uint64_t index);
  /// Uniform integer in [0, bound), bound >= 1, by rejection sampling.
  std::uint64_t below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

WalkSample sample_walk(const GeneratorSet& gens, int k, std::uint64_t seed, std::uint64_t index);

/// Samples at indices 0..count-1; the result does not depend on `threads`.
std::vector<WalkSample> batch_sample(const GeneratorSet& gens, int k, std::size_t count, std::uint64_t seed,
                                     unsigned threads = 1);

}  // namespace galwalk
