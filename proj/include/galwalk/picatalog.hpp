#pragma once

// Predicted Galois groups of the walk scenarios as permutation groups on
// eigenvalues, and coset Weyl group structure from character lattices.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galwalk/permkit.hpp"
#include "galwalk/smith.hpp"

namespace galwalk {

/// The group predicted for one coset, acting on the N eigenvalues of the
/// scenario's representation (counted with multiplicity).
struct PredictedGroup {
  std::string name;
  std::shared_ptr<const EnumeratedGroup> group;
  /// Characteristic-polynomial degree.
  int degree = 0;
  /// Generic multiplicity of every eigenvalue; a regular semisimple element
  /// has characteristic polynomial r^multiplicity with r squarefree.
  int multiplicity = 1;
  /// Abstract group name checked by an exact oracle on the squarefree part
  /// ("C2" for degree 2; "V4", "C4", "D4", "A4", "S4" for degree 4), or empty.
  std::string exact_name;
  /// The group is Sym(N) in its natural action, so the Jordan certificate
  /// applies.
  bool natural_symmetric = false;

  /// Cycle types that occur in the group.
  std::vector<CycleType> types() const;
};

/// Sym(n) on the n eigenvalues of SL_n.
PredictedGroup pi_sl_n(int n);

/// (Z/2) wr_Ω W_r on 4r points, n = 2r, with points 4j + 2s + e for pair
/// j, side s ∈ {a, b} and sign e: the base flips the sign of each point of
/// Ω independently, W_r swaps a_j ↔ b_j and permutes the pairs. Throws
/// std::invalid_argument for odd n.
PredictedGroup pi_sl_n_tau(int n);

/// Sign character on the paired-sign group: each pair j contributes -1 when
/// its point 4j lands on a point with exactly one of (side b, sign -). It
/// is the action on δ = ∏_j (√μ_j − 1/√μ_j).
int tau_coset_character(const Permutation& g);

/// Coset Weyl group of the τ-coset acting on the eigenvalues ±√μ_j, ±1/√μ_j:
/// the kernel of tau_coset_character inside the paired-sign group (one sign
/// flip per pair together with W_r). Order 2^{2r-1}·r!. Same point labels as
/// pi_sl_n_tau.
PredictedGroup sl_n_tau_coset_weyl_action(int n);

/// Generic Galois action for the τ-coset. δ² is (−1)^r times a rational
/// square, so for even r the group is the coset Weyl group above; for odd r
/// Gal(Q(i)/Q) adds the elements with character −1, giving the full
/// paired-sign group of order 2^{2r}·r!.
PredictedGroup sl_n_tau_eigenvalue_action(int n);

/// Identity coset of the same scenario: Sym(n) acting simultaneously on the
/// eigenvalues of A and of (Aᵗ)⁻¹. For n = 2 each eigenvalue appears twice.
PredictedGroup sl_n_tau_identity_action(int n);

/// τ-coset of SL_n^d ⋊ ⟨cyclic shift⟩: n blocks of d points λ_i·ζ_d^j
/// (point i·d + j). Rotations with zero total, Sym(n) on blocks and the
/// multiplicative action of (Z/d)^× inside every block.
PredictedGroup pi_sl_power_cyclic(int n, int d);

/// The same action without the cyclotomic factor: the coset Weyl group
/// (Z/d)^{n-1} ⋊ Sym(n).
PredictedGroup sl_power_cyclic_weyl_action(int n, int d);

/// Identity coset of SL_n^d ⋊ ⟨cyclic shift⟩: Sym(n)^d on d blocks.
PredictedGroup sl_power_identity_action(int n, int d);

/// Sym(n) wr gal in the imprimitive action on n·gal.degree() points.
/// Throws std::invalid_argument unless gal is transitive.
PredictedGroup pi_restriction_of_scalars(int n, const EnumeratedGroup& gal);

struct CosetWeylReport {
  /// |W_C|, W_C = centralizer of τ in W(A_{n-1}) = Sym(n).
  std::size_t fixed_weyl_order = 0;
  /// Invariant factors of the finite group (T/C°)^τ.
  std::vector<Integer> torsion_invariants;
  Integer torsion_order = 1;
  Integer total_order = 0;
};

/// Lattice automorphism of X(T) for the diagonal torus of SL_n, in the
/// basis of the images of e_1..e_{n-1} in Z^n / Z·(1,..,1).
IntegerMatrix sl_n_weyl_lattice_action(const Permutation& w);
/// χ ↦ −w₀χ, the action induced by A ↦ (Aᵗ)⁻¹ (pinned form).
IntegerMatrix sl_n_transpose_inverse_lattice_action(int n);

/// Fixed Weyl group and torsion of the coset Weyl group for a finite-order
/// automorphism tau of X(T) (rank n−1). Throws std::invalid_argument if
/// tau has the wrong shape or infinite order.
CosetWeylReport coset_weyl_structure(int n, const IntegerMatrix& tau);

/// Catalog entry for a scenario coset; std::nullopt for cosets without a
/// prediction. Throws std::invalid_argument for unknown scenarios.
std::optional<PredictedGroup> catalog_lookup(const std::string& scenario, int coset);

/// Geometric coset Weyl group of a scenario coset on the same points: the
/// target of finite-field censuses at split primes. Equals catalog_lookup
/// except where the prediction contains a Galois factor from constants
/// (Q(i) for the tau cosets, Q(zeta_d), Q(sqrt2)).
std::optional<PredictedGroup> catalog_weyl_lookup(const std::string& scenario, int coset);

/// Additional groups reported alongside the primary prediction (for
/// example the stated group where it differs from the eigenvalue action).
std::vector<PredictedGroup> catalog_alternates(const std::string& scenario, int coset);

}  // namespace galwalk
