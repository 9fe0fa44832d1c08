#ifndef PCDL_POSET_HPP
#define PCDL_POSET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcdl/bits.hpp"

namespace pcdl {

/// A finite partially ordered set with opaque string labels.
///
/// Points are addressed by index 0..size()-1. The order is stored as the
/// reflexive-transitive closure, one up-set mask and one down-set mask per
/// point, computed once at construction. Posets are immutable afterwards.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `covers` (pairs lower, upper) on `labels`.
  /// The pairs need not be covers in the strict sense; any generating set of
  /// the order works. Throws ValidationError on a cycle or duplicate labels.
  static Poset from_covers(std::vector<std::string> labels,
                           std::span<const std::pair<int, int>> covers);

  /// Same, with pairs given by label.
  static Poset from_labeled_covers(
      std::vector<std::string> labels,
      std::span<const std::pair<std::string, std::string>> covers);

  /// Builds from a relation given as per-point up-set masks; the closure is
  /// taken, so any generating relation is accepted.
  static Poset from_up_sets(std::vector<std::string> labels, std::vector<PointSet> up);

  int size() const { return static_cast<int>(up_.size()); }
  bool empty() const { return up_.empty(); }
  PointSet all() const { return full_set(size()); }

  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(std::string_view label) const;

  bool leq(int a, int b) const { return contains(up_[static_cast<std::size_t>(a)], b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  PointSet up(int i) const { return up_[static_cast<std::size_t>(i)]; }
  PointSet down(int i) const { return down_[static_cast<std::size_t>(i)]; }
  PointSet strict_up(int i) const { return up(i) & ~bit(i); }
  PointSet strict_down(int i) const { return down(i) & ~bit(i); }

  PointSet maximal() const { return maximal_; }
  PointSet minimal() const;

  PointSet up_closure(PointSet s) const;
  PointSet down_closure(PointSet s) const;
  bool is_up_set(PointSet s) const { return up_closure(s) == s; }
  bool is_down_set(PointSet s) const { return down_closure(s) == s; }

  /// Points in an order where every point comes after all points strictly
  /// above it (maximal points first).
  const std::vector<int>& top_down_order() const { return top_down_; }

  /// Cover pairs (lower, upper) in index order.
  std::vector<std::pair<int, int>> covers() const;

  /// The induced subposet on `keep`, points renumbered in increasing index
  /// order. Labels are carried over.
  Poset restrict(PointSet keep) const;

  /// Same order, new labels (must be distinct and of the right count).
  Poset relabel(std::vector<std::string> labels) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  void finish();

  std::vector<std::string> labels_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
  PointSet maximal_ = 0;
  std::vector<int> top_down_;
  std::unordered_map<std::string, int> index_;
};

/// The k-element antichain.
Poset antichain(int n);

/// The k-element chain 0 < 1 < ... < k-1.
Poset chain(int n);

/// Every point of `lower` below every point of `upper`. Colliding labels are
/// made distinct by suffixing.
Poset ordinal_sum(const Poset& lower, const Poset& upper);

/// 1 (+) n-antichain: one bottom "0" under tops "1".."n".
Poset v_space(int n);

struct DisjointSum {
  Poset poset;
  std::vector<int> part_of;      // point -> index of the summand it came from
  std::vector<PointSet> parts;   // summand -> its points in `poset`
};

/// Points from different parts are incomparable. Colliding labels are made
/// distinct by suffixing ".<part>".
DisjointSum disjoint_sum(std::span<const Poset> parts);

/// Connected components of the comparability graph, in order of least index.
std::vector<PointSet> components(const Poset& p);

/// M_P(x): the maximal points above x.
PointSet max_above(const Poset& p, int x);
PointSet max_above(const Poset& p, std::string_view label);

/// A function between finite posets.
struct OrderMap {
  Poset source;
  Poset target;
  Assignment assignment;

  /// Checks that the assignment is total on the source and lands in the target.
  static OrderMap make(Poset source, Poset target, Assignment assignment);

  int operator()(int x) const { return assignment[static_cast<std::size_t>(x)]; }
};

enum class MapClass {
  not_order_preserving,
  order_preserving,
  order_embedding,
  both_embedding_and_onto,
};

const char* to_string(MapClass c);

struct MapProperties {
  bool order_preserving = false;
  bool embedding = false;  // x <= y iff f(x) <= f(y)
  bool onto = false;
};

MapProperties map_properties(const Poset& source, const Poset& target, const Assignment& f);
MapClass classify_map(const Poset& source, const Poset& target, const Assignment& f);
MapClass classify_map(const OrderMap& f);

bool is_order_preserving(const Poset& source, const Poset& target, const Assignment& f);

PointSet image(const Assignment& f, PointSet s);
PointSet preimage(const Assignment& f, PointSet s);

/// g after f.
Assignment compose(const Assignment& g, const Assignment& f);
OrderMap compose(const OrderMap& g, const OrderMap& f);

Assignment identity_assignment(int n);

/// Canonical labelling: `order[k]` is the point placed at position k and
/// `code` is the order relation read in that arrangement. Two posets are
/// isomorphic iff their codes are equal.
struct CanonicalForm {
  std::vector<int> order;
  std::vector<std::uint64_t> code;
};

CanonicalForm canonical_form(const Poset& p);

/// The poset relabelled by canonical position ("p0", "p1", ...).
Poset canonical_poset(const Poset& p);

bool is_isomorphic(const Poset& a, const Poset& b);

/// An isomorphism a -> b if one exists.
std::optional<Assignment> find_isomorphism(const Poset& a, const Poset& b);

/// Every up-set (resp. down-set) of `p`, sorted by (size, mask).
std::vector<PointSet> all_up_sets(const Poset& p);
std::vector<PointSet> all_down_sets(const Poset& p);

/// Hasse diagram in Graphviz DOT, edges lower -> upper.
std::string to_dot(const Poset& p, std::string_view name = "P");

}  // namespace pcdl

#endif  // PCDL_POSET_HPP
