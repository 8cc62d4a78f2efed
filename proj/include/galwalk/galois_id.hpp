#pragma once

// Galois group identification from Frobenius cycle types, with exact
// oracles in degrees 2 and 4.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "galwalk/exactmat.hpp"
#include "galwalk/modpoly.hpp"
#include "galwalk/picatalog.hpp"

namespace galwalk {

class NotSquarefreeInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct PrimeWindow {
  std::uint32_t min = 1000;
  std::uint32_t max = 100000;
};

struct SampleSummary {
  int degree = 0;
  std::size_t good_count = 0;
  std::size_t bad_count = 0;
  std::map<CycleType, std::size_t> counts;

  std::map<CycleType, Rational> empirical() const;
};

/// Frobenius cycle types of f at ascending primes from `primes` until
/// `budget` good samples are collected. f must be c·r^multiplicity with r
/// squarefree, else NotSquarefreeInput.
SampleSummary collect_samples(const RationalPolynomial& f, const std::vector<std::uint32_t>& primes,
                              std::size_t budget, int multiplicity = 1);
SampleSummary collect_samples(const RationalPolynomial& f, PrimeWindow window, std::size_t budget,
                              int multiplicity = 1);

/// Splitting-field Galois groups reachable by the exact oracles.
enum class SmallGroup { C1, C2, C3, S3, V4, C4, D4, A4, S4 };
std::string to_string(SmallGroup g);

/// Galois group of a squarefree quadratic: C1 iff the discriminant is a
/// rational square, else C2.
SmallGroup quadratic_galois(const RationalPolynomial& f);

struct QuarticGalois {
  SmallGroup group = SmallGroup::C1;
  bool irreducible = false;
};

/// Exact Galois group of a squarefree quartic over Q, by rational-root
/// search, quadratic splitting and the resolvent cubic.
QuarticGalois quartic_galois_exact(const RationalPolynomial& f);

/// Rational roots of a nonzero polynomial, ascending, without repetition.
std::vector<Rational> rational_roots(const RationalPolynomial& f);

bool is_rational_square(const Rational& x);

/// Jordan-criterion certificate that the Galois group on n roots is Sym(n):
/// types (n), (2,1^{n-2}) and one containing a q-cycle, q prime > n/2.
bool certify_sn(const SampleSummary& summary, int n);

struct Thresholds {
  double tv_max = 0.1;
  double coverage_min = 1.0;
};

enum class VerdictKind { CertifiedSn, CertifiedExact, Consistent, Rejected, Inconclusive };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string target;
  /// Group named by an exact oracle, for CertifiedExact.
  std::string exact_group;
  double tv_distance = 0.0;
  /// Fraction of the target's cycle types that were observed.
  double coverage = 0.0;
  /// Observed types with zero frequency in the target.
  std::vector<CycleType> foreign_types;
};

/// Total variation distance between the empirical and target type
/// frequencies.
double tv_distance(const SampleSummary& summary, const EnumeratedGroup& target);

/// Rejected if an observed type is absent from the target, or if every
/// target type was seen and the TV distance exceeds tv_max. CertifiedSn
/// for natural symmetric targets passing certify_sn; Consistent when
/// coverage >= coverage_min and tv <= tv_max; Inconclusive otherwise.
/// Throws DimensionMismatch if the degrees differ.
Verdict match_verdict(const SampleSummary& summary, const PredictedGroup& target, const Thresholds& thresholds);

struct Identification {
  bool regular_semisimple = false;
  SampleSummary summary;
  Verdict verdict;
};

/// Full pipeline for one characteristic polynomial: regular-semisimplicity
/// proxy, Frobenius sampling, statistical verdict, and an exact-oracle
/// upgrade to CertifiedExact when the squarefree part has degree 2 or 4.
Identification identify(const RationalPolynomial& f, const PredictedGroup& target,
                        const std::vector<std::uint32_t>& primes, std::size_t budget, const Thresholds& thresholds);

}  // namespace galwalk
