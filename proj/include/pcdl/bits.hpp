#ifndef PCDL_BITS_HPP
#define PCDL_BITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcdl {

// A set of poset points, one bit per point index. Every structure in this
// library is small enough that 64 points is a hard ceiling.
using PointSet = std::uint64_t;

inline constexpr int kMaxPoints = 64;

constexpr PointSet bit(int i) { return PointSet{1} << i; }

constexpr bool contains(PointSet s, int i) { return (s >> i) & 1U; }

constexpr bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }

constexpr int popcount(PointSet s) { return std::popcount(s); }

constexpr PointSet full_set(int n) { return n >= 64 ? ~PointSet{0} : bit(n) - 1; }

template <class F>
void for_each_point(PointSet s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

inline std::vector<int> points_of(PointSet s) {
  std::vector<int> out;
  for_each_point(s, [&](int i) { out.push_back(i); });
  return out;
}

// A total map between point indices: assignment[i] is the image of point i.
using Assignment = std::vector<int>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a structural invariant (not a partial order, not an up-set,
// not a homomorphism, ...). The message names the invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unknown element label.
class LabelError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a configured enumeration bound.
class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcdl

#endif  // PCDL_BITS_HPP
