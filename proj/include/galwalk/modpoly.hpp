#pragma once

// Polynomials over prime fields: squarefreeness, distinct-degree
// factorization and Frobenius cycle types.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galwalk/exactmat.hpp"

namespace galwalk {

/// Partition of N in weakly decreasing order.
class CycleType {
public:
  CycleType() = default;
  /// Sorts the parts; throws std::invalid_argument on a nonpositive part.
  explicit CycleType(std::vector<int> parts);

  /// Parses "(2,1,1)" or "2,1,1".
  static CycleType parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const;
  bool contains_part(int part) const;
  /// Each part repeated `multiplicity` times: the type of the same
  /// permutation acting on roots counted with multiplicity.
  CycleType repeated(int multiplicity) const;
  std::string to_string() const;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
  friend bool operator==(const CycleType&, const CycleType&) = default;

private:
  std::vector<int> parts_;
};

/// All partitions of n, in descending lexicographic order.
std::vector<CycleType> partitions(int n);

// F_p polynomial arithmetic. Inputs and outputs are trimmed (no leading
// zeros).
PrimeFieldPolynomial fp_trim(PrimeFieldPolynomial f);
PrimeFieldPolynomial fp_monic(const PrimeFieldPolynomial& f);
PrimeFieldPolynomial fp_sub(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b);
PrimeFieldPolynomial fp_mul(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b);
PrimeFieldPolynomial fp_rem(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& m);
PrimeFieldPolynomial fp_div(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& m);
PrimeFieldPolynomial fp_derivative(const PrimeFieldPolynomial& f);
/// Monic gcd.
PrimeFieldPolynomial fp_gcd(PrimeFieldPolynomial a, PrimeFieldPolynomial b);
/// base^e mod m.
PrimeFieldPolynomial fp_powmod(const PrimeFieldPolynomial& base, std::uint64_t e, const PrimeFieldPolynomial& m);

bool squarefree_over_q(const RationalPolynomial& f);

/// If f = c·r^m with r squarefree, returns r (monic).
std::optional<RationalPolynomial> squarefree_root(const RationalPolynomial& f, int multiplicity);

/// Same as above over F_p. Multiplicity above 1 needs deg f < p.
std::optional<PrimeFieldPolynomial> squarefree_root_mod_p(const PrimeFieldPolynomial& f, int multiplicity);

/// Degrees of the irreducible factors of g; std::nullopt when g is not
/// squarefree. g need not be monic.
std::optional<CycleType> distinct_degree_pattern(const PrimeFieldPolynomial& g);

enum class FrobeniusStatus { good, bad_prime, not_squarefree };

struct FrobeniusSample {
  std::uint32_t p = 0;
  FrobeniusStatus status = FrobeniusStatus::bad_prime;
  std::optional<CycleType> cycle_type;  // present iff status == good
};

/// Reduction mod p followed by distinct-degree factorization. With
/// multiplicity m > 1, f is expected to be r^m for squarefree r: the
/// pattern of r mod p is computed and each part repeated m times.
FrobeniusSample frobenius_cycle_type(const RationalPolynomial& f, std::uint32_t p, int multiplicity = 1);

/// Primes in [lo, hi] by a sieve of Eratosthenes.
std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi);

}  // namespace galwalk
