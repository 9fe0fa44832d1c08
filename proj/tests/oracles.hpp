// Brute-force reference implementations used only by the tests. They work
// from the order relation alone and share no search code with the library.
#ifndef PCDL_TESTS_ORACLES_HPP
#define PCDL_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "pcdl/pcdl.hpp"

namespace oracle {

using pcdl::Poset;

inline std::vector<int> maxima_above(const Poset& p, int x) {
  std::vector<int> out;
  for (int y = 0; y < p.size(); ++y) {
    if (!p.leq(x, y)) continue;
    bool top = true;
    for (int z = 0; z < p.size(); ++z) top = top && !(p.leq(y, z) && z != y);
    if (top) out.push_back(y);
  }
  return out;
}

// Every function from `n` points to `m` points, in lexicographic order.
inline void for_each_function(int n, int m, const std::function<void(const std::vector<int>&)>& visit) {
  if (m == 0 && n > 0) return;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(f);
    int k = n - 1;
    while (k >= 0 && f[static_cast<std::size_t>(k)] == m - 1) f[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return;
    ++f[static_cast<std::size_t>(k)];
  }
}

inline bool order_preserving(const Poset& s, const Poset& t, const std::vector<int>& f) {
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) {
      if (s.leq(x, y) && !t.leq(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) return false;
    }
  }
  return true;
}

inline bool p_morphism(const Poset& s, const Poset& t, const std::vector<int>& f) {
  if (!order_preserving(s, t, f)) return false;
  for (int x = 0; x < s.size(); ++x) {
    std::set<int> img;
    for (int y : maxima_above(s, x)) img.insert(f[static_cast<std::size_t>(y)]);
    const auto want = maxima_above(t, f[static_cast<std::size_t>(x)]);
    if (img != std::set<int>(want.begin(), want.end())) return false;
  }
  return true;
}

// Up-sets by testing every subset.
inline std::vector<std::uint64_t> up_sets(const Poset& p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << p.size()); ++s) {
    bool ok = true;
    for (int x = 0; x < p.size() && ok; ++x) {
      if (!((s >> x) & 1U)) continue;
      for (int y = 0; y < p.size(); ++y) ok = ok && (!p.leq(x, y) || ((s >> y) & 1U));
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// Algebra-side structure given only by tables.
struct Algebra {
  int size = 0;
  std::vector<std::vector<int>> join, meet;
  std::vector<int> star;
  int bottom = 0, top = 0;
};

// Builds the tables from up-sets, computing * as the largest element whose
// meet with x is the bottom (found by search, not by the complement formula).
inline Algebra algebra_of(const Poset& p) {
  const auto ups = up_sets(p);
  Algebra a;
  a.size = static_cast<int>(ups.size());
  auto idx = [&](std::uint64_t s) {
    return static_cast<int>(std::find(ups.begin(), ups.end(), s) - ups.begin());
  };
  a.join.assign(ups.size(), std::vector<int>(ups.size()));
  a.meet = a.join;
  for (std::size_t i = 0; i < ups.size(); ++i) {
    for (std::size_t j = 0; j < ups.size(); ++j) {
      a.join[i][j] = idx(ups[i] | ups[j]);
      a.meet[i][j] = idx(ups[i] & ups[j]);
    }
  }
  a.bottom = idx(0);
  std::uint64_t all = 0;
  for (std::uint64_t u : ups) all |= u;
  a.top = idx(all);
  for (std::size_t x = 0; x < ups.size(); ++x) {
    int best = -1;
    for (std::size_t y = 0; y < ups.size(); ++y) {
      if ((ups[x] & ups[y]) != 0) continue;
      if (best < 0 || (ups[static_cast<std::size_t>(best)] | ups[y]) == ups[y]) best = static_cast<int>(y);
    }
    a.star.push_back(best);
  }
  return a;
}

// Congruences of the algebra by enumerating set partitions of its elements
// (restricted growth strings) and keeping those compatible with join, meet
// and star.
inline std::size_t congruence_count(const Algebra& a) {
  const int n = a.size;
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  std::size_t count = 0;
  std::function<void(int, int)> rec = [&](int k, int used) {
    if (k == n) {
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (cls[static_cast<std::size_t>(x)] != cls[static_cast<std::size_t>(y)]) continue;
          if (cls[static_cast<std::size_t>(a.star[static_cast<std::size_t>(x)])] !=
              cls[static_cast<std::size_t>(a.star[static_cast<std::size_t>(y)])]) {
            return;
          }
          for (int z = 0; z < n; ++z) {
            const auto xs = static_cast<std::size_t>(x);
            const auto ys = static_cast<std::size_t>(y);
            const auto zs = static_cast<std::size_t>(z);
            if (cls[static_cast<std::size_t>(a.join[xs][zs])] != cls[static_cast<std::size_t>(a.join[ys][zs])]) return;
            if (cls[static_cast<std::size_t>(a.meet[xs][zs])] != cls[static_cast<std::size_t>(a.meet[ys][zs])]) return;
          }
        }
      }
      ++count;
      return;
    }
    for (int c = 0; c <= used; ++c) {
      cls[static_cast<std::size_t>(k)] = c;
      rec(k + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) return 0;
  cls[0] = 0;
  rec(1, 1);
  return count;
}

// Isomorphism by trying every bijection (small posets only).
inline bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (int x = 0; x < a.size() && ok; ++x) {
      for (int y = 0; y < a.size() && ok; ++y) {
        ok = a.leq(x, y) == b.leq(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle

#endif  // PCDL_TESTS_ORACLES_HPP
