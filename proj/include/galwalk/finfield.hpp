#pragma once

// Brute-force enumeration of a scenario group over F_p and per-coset
// censuses of Frobenius cycle types.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "galwalk/exactmat.hpp"
#include "galwalk/modpoly.hpp"
#include "galwalk/permkit.hpp"
#include "galwalk/walker.hpp"

namespace galwalk {

class BadPrime : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultFiniteFieldBound = 10'000'000;

/// The group generated by the reduced generators, split by coset label.
struct FiniteGroupModP {
  std::uint32_t p = 0;
  std::size_t dim = 0;
  /// cosets[label] holds every element with that label, in discovery order.
  std::vector<std::vector<PrimeFieldMatrix>> cosets;

  std::size_t order() const;
};

/// Closure of gens mod p. Throws BadPrime if p = 2, a generator does not
/// reduce, or a reduced generator is singular; GroupTooLarge past `bound`;
/// std::invalid_argument unless p < 256 and dim <= 4; std::logic_error if
/// one matrix is reached with two different labels.
FiniteGroupModP enumerate_mod_p(const GeneratorSet& gens, std::uint32_t p,
                                std::size_t bound = kDefaultFiniteFieldBound);

struct CosetCensus {
  std::uint32_t p = 0;
  int coset = 0;
  std::size_t total = 0;
  std::size_t rs_count = 0;
  std::map<CycleType, std::size_t> type_counts;

  double rs_fraction() const { return total ? static_cast<double>(rs_count) / static_cast<double>(total) : 0.0; }
};

/// Frobenius cycle type of one element mod p: the pattern of r where the
/// characteristic polynomial is r^multiplicity with r squarefree, each part
/// repeated; std::nullopt when the element is not regular semisimple.
std::optional<CycleType> element_cycle_type(const PrimeFieldMatrix& g, int multiplicity = 1);

CosetCensus census(const std::vector<PrimeFieldMatrix>& elements, std::uint32_t p, int coset,
                   int multiplicity = 1);

struct DensityRow {
  std::uint32_t p = 0;
  int coset = 0;
  CycleType type;
  std::size_t count = 0;
  /// count / rs_count and count / total.
  double rs_density = 0.0;
  double coset_density = 0.0;
  /// Frequency of the type in the predicted group (0 if foreign).
  double predicted = 0.0;
  bool in_target = false;
  /// Target type with zero count at this prime.
  bool flagged = false;
};

struct DensityReport {
  std::vector<DensityRow> rows;
  /// Smallest coset density over target types (over all primes).
  double min_density = 1.0;
  std::size_t violations = 0;
};

/// One row per (census, type) for the union of observed and target types.
/// `targets` gives the predicted type distribution for each census, in order.
DensityReport density_report(const std::vector<CosetCensus>& censuses,
                             const std::vector<std::map<CycleType, Rational>>& targets);

}  // namespace galwalk
