#ifndef PCDL_CONGRUENCE_HPP
#define PCDL_CONGRUENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcdl/pcdl.hpp"

namespace pcdl {

// Congruences of D(Y) are carried dually as subsets T of Y with
// down(T & Max Y) contained in T; two up-sets are related iff they agree
// outside T. The empty set is the diagonal and Y itself the full relation.

inline constexpr int kDefaultCongruenceBound = 12;

/// A validated dual congruence.
struct DualCongruence {
  Poset base;
  PointSet theta = 0;

  /// Throws ValidationError if `theta` violates the down-closure condition.
  static DualCongruence make(Poset base, PointSet theta);
};

bool is_dual_congruence(const Poset& p, PointSet theta);

/// All dual congruences of P, sorted by (size, mask). Throws SizeError when
/// |P| exceeds `bound`.
std::vector<PointSet> enumerate_congruences(const Poset& p, int bound = kDefaultCongruenceBound);

/// U1 and U2 are related iff U1 \ theta == U2 \ theta.
bool congruence_relates(const Poset& p, PointSet theta, PointSet u1, PointSet u2);

/// A/theta realised on P \ theta. `projection[a]` is the class of element a.
struct Quotient {
  PcdLattice algebra;
  std::vector<int> projection;
};

/// Builds the quotient and verifies that U |-> U \ theta is a surjective
/// *-homomorphism whose kernel is exactly the relation of theta.
Quotient quotient(const PcdLattice& a, PointSet theta);

/// An equivalence on the elements of an algebra, as class ids.
struct Relation {
  std::vector<int> class_of;

  bool relates(int a, int b) const { return class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)]; }
  bool is_diagonal() const;
  bool is_full() const;
  int class_count() const;
  bool is_transitive() const;
  friend bool operator==(const Relation& a, const Relation& b);
};

/// The relation of a dual congruence on D(P).
Relation congruence_relation(const PcdLattice& a, PointSet theta);

/// Psi restricted to A, where A embeds in B through the surjective
/// p-morphism h: P(B) -> P(A): a1 ~ a2 iff h^{-1}(a1) ~ h^{-1}(a2) mod psi.
/// Throws ValidationError if h is not a surjective p-morphism.
Relation restrict_congruence(const PcdLattice& b, PointSet psi, const PcdLattice& a, const Assignment& h);

/// Every non-diagonal congruence of B restricts non-diagonally to A.
bool is_essential_extension(const PcdLattice& b, const PcdLattice& a, const Assignment& h,
                            int bound = kDefaultCongruenceBound);

struct Pullback {
  PointSet psi = 0;
  bool is_congruence = false;  // down-closure held for h^{-1}(theta)
  bool transfer_law = false;   // h^{-1} preserves and reflects the relation
  std::string failure;         // set when either check fails
};

/// h^{-1}(theta) for a surjective p-morphism h: X -> Y, with both the
/// down-closure condition and the transfer law checked.
Pullback pullback_congruence(const Poset& x, const Poset& y, const Assignment& h, PointSet theta);

/// Unique minimal non-diagonal congruence.
bool is_subdirectly_irreducible(const Poset& p, int bound = kDefaultCongruenceBound);

/// Given A -> B (dual h) and a congruence theta of B, a congruence psi of B
/// with the same restriction to A, maximal with that property, so that B/psi
/// is an essential extension of the image of A.
PointSet essential_reduction(const PcdLattice& b, const PcdLattice& a, const Assignment& h, PointSet theta,
                             int bound = kDefaultCongruenceBound);

enum class ExtensileOutcome { yes, no_with_witness, inconclusive };

const char* to_string(ExtensileOutcome o);

struct ExtensileResult {
  ExtensileOutcome outcome = ExtensileOutcome::yes;
  int bound = 0;
  std::size_t extensions_checked = 0;  // (C, embedding) pairs
  // witness when outcome == no_with_witness
  std::optional<Poset> extension;      // P(C)
  Assignment embedding_dual;           // P(C) -> P(B)
  PointSet theta = 0;                  // congruence of B that does not extend
};

/// Searches every C in B_n with |P(C)| <= bound containing B (through every
/// surjective p-morphism P(C) -> P(B)) and every congruence of B for one that
/// does not extend. `max_extensions` caps the work; hitting it yields
/// inconclusive.
ExtensileResult is_congruence_extensile_bounded(const PcdLattice& b, int n, int bound,
                                                std::size_t max_extensions = 5'000'000);

}  // namespace pcdl

#endif  // PCDL_CONGRUENCE_HPP
