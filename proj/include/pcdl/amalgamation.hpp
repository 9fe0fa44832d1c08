#ifndef PCDL_AMALGAMATION_HPP
#define PCDL_AMALGAMATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pcdl/pcdl.hpp"

namespace pcdl {

/// Every i with 1 < i < n for which A has a *-homomorphism onto B_i^+.
/// Throws ValidationError when A is not in B_n.
std::vector<int> forbidden_images(const PcdLattice& a, int n);

/// Amalgamation-base membership for a finite A in B_n by the forbidden-image
/// criterion.
struct AmalgamationVerdict {
  bool is_base = true;
  std::vector<int> forbidden_is;
  std::vector<Assignment> witnesses;  // per forbidden i: dual embedding V_i -> P(A)
};

AmalgamationVerdict is_amalgamation_base_finite(const PcdLattice& a, int n);

/// A p-morphism beta: source -> y with gamma o beta = alpha, or nothing.
/// No validation; tries maximal points of y first at every step.
std::optional<Assignment> find_lift(const Poset& y, const Assignment& gamma, const Poset& source,
                                    const Assignment& alpha);

/// Validated lift through a surjective p-morphism gamma: y -> p of a
/// p-morphism alpha: source -> p. Any lift returned has been re-checked.
std::optional<Assignment> lift_through(const Poset& y, const Poset& p, const Assignment& gamma,
                                       const Poset& source, const Assignment& alpha);

enum class ExtensionOutcome { holds, fails_with_witness, inconclusive };

const char* to_string(ExtensionOutcome o);

struct ExtensionFailure {
  Poset y;
  Assignment gamma;  // y -> P(A), surjective p-morphism
  Assignment alpha;  // V_n -> P(A), p-morphism with no lift
};

struct ExtensionResult {
  ExtensionOutcome outcome = ExtensionOutcome::holds;
  int bound = 0;
  std::size_t extensions_checked = 0;  // (Y, gamma) pairs
  std::size_t lifts_checked = 0;       // (Y, gamma, alpha) triples
  std::optional<ExtensionFailure> witness;
};

/// Dual form of "every *-hom A -> B_n^+ extends to every B containing A":
/// for every poset Y with |Y| <= bound and every |M(y)| <= n, every surjective
/// p-morphism gamma: Y -> P(A) and every p-morphism alpha: V_n -> P(A), a lift
/// exists. `holds` means no failure up to the bound. `max_extensions` caps the
/// number of (Y, gamma) pairs; reaching it without a failure is inconclusive.
ExtensionResult extension_property_bounded(const PcdLattice& a, int n, int bound, int jobs = 1,
                                           std::size_t max_extensions = 20'000'000);

/// Surjective p-morphisms P(B) -> P(A): the duals of the embeddings A -> B.
std::vector<Assignment> embeddings(const PcdLattice& a, const PcdLattice& b);

struct SeparationFailure {
  int side = 0;  // which B_i holds the inseparable pair
  int a = 0;     // element indices in B_side
  int b = 0;
};

struct SeparationResult {
  bool amalgamable = true;
  std::optional<SeparationFailure> failure;
  std::size_t pairs_checked = 0;
};

/// Pairwise separation test for the amalgam of alpha_0: A -> B_0 and
/// alpha_1: A -> B_1 in B_n, with B_n^+ as the separating target. The
/// embeddings are given dually as surjective p-morphisms h_i: P(B_i) -> P(A).
SeparationResult amalgamate_or_separate(const PcdLattice& a, const PcdLattice& b0, const PcdLattice& b1,
                                        const Assignment& h0, const Assignment& h1, int n);

}  // namespace pcdl

#endif  // PCDL_AMALGAMATION_HPP
