#ifndef PCDL_POSET_ENUM_HPP
#define PCDL_POSET_ENUM_HPP

#include <functional>
#include <vector>

#include "pcdl/poset.hpp"

namespace pcdl {

/// One representative per isomorphism class of posets with exactly `n`
/// points, in canonical form, sorted by canonical code. Results are cached;
/// safe to call from several threads.
const std::vector<Poset>& posets_of_size(int n);

/// Representatives of every isomorphism class with at most `max_n` points
/// (including the empty poset), smallest first.
std::vector<Poset> posets_up_to(int max_n);

/// Isomorphism classes with at most `max_n` points that satisfy `keep`.
/// Classes are grown one minimal point at a time and a rejected poset is not
/// extended further, so `keep` must be inherited by the subposet obtained by
/// deleting a minimal point (e.g. "|D(P)| <= k" or "every |M(x)| <= n").
std::vector<Poset> grow_posets(int max_n, const std::function<bool(const Poset&)>& keep);

}  // namespace pcdl

#endif  // PCDL_POSET_ENUM_HPP
