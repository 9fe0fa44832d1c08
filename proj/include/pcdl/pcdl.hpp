#ifndef PCDL_PCDL_HPP
#define PCDL_PCDL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcdl/duality.hpp"

namespace pcdl {

/// U* = P \ down(U): the largest up-set disjoint from U. Throws
/// ValidationError if U is not an up-set of P.
PointSet pseudocomplement(const Poset& p, PointSet up_set);

/// A finite pseudocomplemented distributive lattice, held as D(P) for its
/// dual space P together with the pseudocomplement table.
class PcdLattice {
 public:
  PcdLattice() = default;
  explicit PcdLattice(Poset space);

  const Poset& space() const { return lattice_.base(); }
  const UpSetLattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  PointSet element(int a) const { return lattice_.element(a); }
  int index_of(PointSet s) const { return lattice_.index_of(s); }

  int bottom() const { return lattice_.bottom(); }
  int top() const { return lattice_.top(); }
  int join(int a, int b) const { return lattice_.join(a, b); }
  int meet(int a, int b) const { return lattice_.meet(a, b); }
  bool leq(int a, int b) const { return lattice_.leq(a, b); }
  int star(int a) const { return star_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& star_table() const { return star_; }

  std::string element_name(int a) const { return lattice_.element_name(a); }

 private:
  UpSetLattice lattice_;
  std::vector<int> star_;
};

/// D(P) with its pseudocomplement; checks the star axiom exhaustively.
PcdLattice make_pcdl(Poset p);

/// The PCDL of a finite distributive lattice (every one is pseudocomplemented),
/// realised on its dual space.
PcdLattice pcdl_from_lattice(const AbstractLattice& l);

/// B_n^+ = 2^n (+) 1, realised as D(V_n).
PcdLattice b_plus(int n);

/// The k-element chain as a PCDL (k >= 1).
PcdLattice chain_algebra(int k);

/// Exhaustive check of x <= y* <=> x meet y = 0 over all pairs.
bool star_axiom_holds(const PcdLattice& a);

/// Where a map fails to be a p-morphism.
struct PMorphismViolation {
  int point = -1;             // source point
  bool order_violation = false;
  PointSet image_of_max = 0;  // f[M(point)] in the target
  PointSet max_of_image = 0;  // M(f(point)) in the target

  std::string describe(const Poset& source, const Poset& target) const;
};

std::optional<PMorphismViolation> p_morphism_violation(const Poset& source, const Poset& target,
                                                       const Assignment& f);
bool is_p_morphism(const Poset& source, const Poset& target, const Assignment& f);
bool is_p_morphism(const OrderMap& f);

/// |M(x)| for each point.
std::vector<int> max_above_sizes(const Poset& p);

/// The least n with A in B_n: the largest |M(x)|. The one-element algebra
/// (empty dual) gets -1.
struct VarietyIndex {
  int n = -1;
  bool within(int bound) const { return n <= bound; }
};

VarietyIndex variety_index(const Poset& space);
VarietyIndex variety_index(const PcdLattice& a);

struct PMorphismSearch {
  bool surjective = false;
  bool embedding = false;
  // Per source point, the target points it may map to (empty: no restriction).
  std::vector<PointSet> allowed = {};
};

/// Calls `visit` for every p-morphism source -> target satisfying `opts`;
/// stops early when `visit` returns false. Returns the number visited.
///
/// Points are assigned maximal-first, so the M-condition at a point can be
/// checked the moment it is assigned. Maximal target points are tried before
/// the others.
std::size_t for_each_p_morphism(const Poset& source, const Poset& target, const PMorphismSearch& opts,
                                const std::function<bool(const Assignment&)>& visit);

std::vector<Assignment> p_morphisms(const Poset& source, const Poset& target,
                                    const PMorphismSearch& opts = {});

/// A *-homomorphism A -> B as an element table, with its dual p-morphism
/// P(B) -> P(A).
struct StarHom {
  std::vector<int> table;
  Assignment dual;
};

/// The table U |-> f^{-1}(U) of the algebra map dual to f: P(B) -> P(A).
std::vector<int> star_hom_from_dual(const PcdLattice& a, const PcdLattice& b, const Assignment& f);

/// Preserves 0, 1, join, meet and star (exhaustive).
bool is_star_hom(const PcdLattice& a, const PcdLattice& b, const std::vector<int>& table);

/// Every *-homomorphism A -> B, each re-verified on the algebra side.
std::vector<StarHom> star_homs(const PcdLattice& a, const PcdLattice& b, bool onto_only = false);

/// Dual witness of an onto *-homomorphism A -> B_i^+: a p-morphism that is an
/// order-embedding V_i -> P(A). Found from the point structure: for i >= 2 a
/// point with exactly i maximal points above it; for i = 1 a non-maximal point
/// with one; for i = 0 any maximal point.
std::optional<Assignment> onto_star_hom_witness(const Poset& space, int i);

bool onto_star_hom_exists(const PcdLattice& a, int i);

}  // namespace pcdl

#endif  // PCDL_PCDL_HPP
