#ifndef PCDL_DUALITY_HPP
#define PCDL_DUALITY_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "pcdl/poset.hpp"

namespace pcdl {

/// D(P): the up-sets of a finite poset ordered by inclusion.
///
/// Elements are indexed 0..size()-1 in (cardinality, mask) order, so 0 is the
/// empty up-set and size()-1 is the whole poset. Join and meet are union and
/// intersection of masks.
class UpSetLattice {
 public:
  UpSetLattice() = default;
  explicit UpSetLattice(Poset base);

  const Poset& base() const { return base_; }
  int size() const { return static_cast<int>(elements_.size()); }
  PointSet element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<PointSet>& elements() const { return elements_; }
  int index_of(PointSet up_set) const;
  bool contains_set(PointSet s) const { return index_.count(s) != 0; }

  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int join(int a, int b) const { return index_of(element(a) | element(b)); }
  int meet(int a, int b) const { return index_of(element(a) & element(b)); }
  bool leq(int a, int b) const { return subset_of(element(a), element(b)); }

  /// "{a,b}" style names for output.
  std::string element_name(int i) const;

 private:
  Poset base_;
  std::vector<PointSet> elements_;
  std::unordered_map<PointSet, int> index_;
};

/// A bounded lattice given by operation tables.
class AbstractLattice {
 public:
  /// Validates the lattice laws and distributivity (exhaustive; at most 64
  /// elements). Throws ValidationError naming the first failed law.
  static AbstractLattice from_tables(std::vector<std::string> labels,
                                     std::vector<std::vector<int>> joins,
                                     std::vector<std::vector<int>> meets);

  static AbstractLattice from_up_sets(const UpSetLattice& l);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int join(int a, int b) const { return joins_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int meet(int a, int b) const { return meets_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  bool leq(int a, int b) const { return join(a, b) == b; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<std::vector<int>>& joins() const { return joins_; }
  const std::vector<std::vector<int>>& meets() const { return meets_; }

  /// Join-irreducible elements in index order.
  std::vector<int> join_irreducibles() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> joins_;
  std::vector<std::vector<int>> meets_;
  int bottom_ = 0;
  int top_ = 0;
};

/// D(P).
UpSetLattice dual_lattice(const Poset& p);

/// P(L) in finite form: the join-irreducibles of L, ordered so that the
/// principal filters they generate are ordered by inclusion (j <= k in P(L)
/// iff k <= j in L). `embedding[a]` is the up-set of P(L) representing a.
struct DualSpace {
  Poset poset;
  std::vector<int> point_element;  // point -> join-irreducible of L
  std::vector<PointSet> embedding; // element of L -> up-set of `poset`
};

DualSpace dual_space_with_iso(const AbstractLattice& l);
Poset dual_space(const AbstractLattice& l);
Poset dual_space(const UpSetLattice& l);

/// A {0,1}-lattice homomorphism between up-set lattices, as an index table.
struct UpSetHom {
  UpSetLattice from;
  UpSetLattice to;
  std::vector<int> table;

  bool one_to_one() const;
  bool onto() const;
};

/// D(f): U |-> f^{-1}(U), from D(target) to D(source). Throws if f is not
/// order-preserving.
UpSetHom dual_of_order_map(const OrderMap& f);

/// True iff `table` preserves 0, 1, join and meet.
bool is_lattice_hom(const AbstractLattice& from, const AbstractLattice& to,
                    const std::vector<int>& table);

/// P(h): P(to) -> P(from), sending the filter generated by a point to its
/// preimage under h. Throws ValidationError if h is not a {0,1}-homomorphism.
OrderMap dual_of_lattice_hom(const AbstractLattice& from, const AbstractLattice& to,
                             const std::vector<int>& table);

/// 2^n (+) 1 as an abstract lattice: subsets of {1..n} plus a new top.
AbstractLattice boolean_plus_top(int n);

}  // namespace pcdl

#endif  // PCDL_DUALITY_HPP
