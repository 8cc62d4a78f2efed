#pragma once

// Permutation groups by full enumeration, cycle-type distributions and
// product constructions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "galwalk/exactmat.hpp"
#include "galwalk/modpoly.hpp"

namespace galwalk {

class GroupTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationBound = 2'000'000;

/// Bijection of {0..N-1}. Composition `a * b` applies b first, then a.
class Permutation {
public:
  Permutation() = default;
  /// Identity on n points.
  explicit Permutation(std::size_t n);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);
  /// From disjoint cycles, e.g. {{0,1},{2,3}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<std::uint8_t>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  /// The permutation relabelled by `relabel`: relabel * this * relabel^-1.
  Permutation conjugated_by(const Permutation& relabel) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

private:
  std::vector<std::uint8_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

CycleType cycle_type(const Permutation& g);

/// Fully enumerated permutation group with exact cycle-type frequencies.
class EnumeratedGroup {
public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::map<CycleType, Rational>& type_distribution() const { return distribution_; }
  /// Frequency of a cycle type; zero if absent.
  Rational frequency(const CycleType& t) const;
  bool contains(const Permutation& g) const;
  bool is_transitive() const;

  friend EnumeratedGroup enumerate(const std::vector<Permutation>& generators, std::size_t degree,
                                   std::size_t bound);

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;  // sorted
  std::vector<Permutation> generators_;
  std::map<CycleType, Rational> distribution_;
};

/// Closure of the generators under composition by breadth-first search.
/// Throws GroupTooLarge once more than `bound` elements are found.
EnumeratedGroup enumerate(const std::vector<Permutation>& generators, std::size_t degree,
                          std::size_t bound = kDefaultEnumerationBound);

EnumeratedGroup symmetric_group(std::size_t n);
EnumeratedGroup alternating_group(std::size_t n);
EnumeratedGroup cyclic_group(std::size_t n);
EnumeratedGroup trivial_group(std::size_t n);

/// base wr top on base.degree()·top.degree() points: block j holds points
/// j·d .. j·d+d-1, each block carries an independent copy of base, and top
/// permutes the blocks rigidly.
EnumeratedGroup wreath_product(const EnumeratedGroup& base, const EnumeratedGroup& top,
                               std::size_t bound = kDefaultEnumerationBound);
/// Cyclic base of order d: the base factor at block j is the d-cycle on it.
EnumeratedGroup wreath_product(std::size_t d, const EnumeratedGroup& top,
                               std::size_t bound = kDefaultEnumerationBound);

/// Intransitive direct product on the disjoint union of the point sets.
EnumeratedGroup direct_product(const std::vector<EnumeratedGroup>& factors,
                               std::size_t bound = kDefaultEnumerationBound);

/// `copies` simultaneous copies of g on copies·N points (g acts the same
/// way on every block).
EnumeratedGroup diagonal_action(const EnumeratedGroup& g, std::size_t copies);

/// Subgroup generated by `normal` and `acting` inside Sym(N), both given on
/// the same N points with the action by conjugation. Throws
/// std::invalid_argument if `acting` does not normalize `normal`, if the
/// factors intersect nontrivially, or if the order differs from
/// |normal|·|acting|.
EnumeratedGroup semidirect_by_action(const EnumeratedGroup& normal, const EnumeratedGroup& acting,
                                     std::size_t bound = kDefaultEnumerationBound);

}  // namespace galwalk
