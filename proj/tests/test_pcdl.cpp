#include <doctest.h>

#include "oracles.hpp"
#include "pcdl/pcdl.hpp"
#include "pcdl/poset_enum.hpp"

using namespace pcdl;

namespace {

std::vector<Poset> posets_between(int lo, int hi) {
  std::vector<Poset> out;
  for (int n = lo; n <= hi; ++n) {
    for (const Poset& p : posets_of_size(n)) out.push_back(p);
  }
  return out;
}

Poset sum_v3_v2() {
  const std::vector<Poset> parts = {v_space(3), v_space(2)};
  return disjoint_sum(parts).poset;
}

}  // namespace

TEST_CASE("pseudocomplement examples") {
  const Poset v2 = v_space(2);
  for (const Poset& p : posets_between(0, 4)) CHECK(pseudocomplement(p, 0) == p.all());
  CHECK(pseudocomplement(v2, bit(1)) == bit(2));
  CHECK(pseudocomplement(v2, v2.all()) == 0);
  CHECK_THROWS_AS(pseudocomplement(v2, bit(0)), ValidationError);
}

TEST_CASE("make_pcdl examples") {
  const PcdLattice b3 = make_pcdl(v_space(3));
  CHECK(b3.size() == 9);
  // star table of 2^3 (+) 1: complement on the cube part, top and bottom swap
  const Poset& v3 = b3.space();
  for (int a = 0; a < b3.size(); ++a) {
    const PointSet u = b3.element(a);
    PointSet want;
    if (u == 0) {
      want = v3.all();
    } else if (u == v3.all()) {
      want = 0;
    } else {
      want = v3.maximal() & ~u;
    }
    CHECK(b3.element(b3.star(a)) == want);
  }
  const PcdLattice two = make_pcdl(chain(1));
  CHECK(two.size() == 2);
  CHECK(two.star(two.bottom()) == two.top());
  CHECK(two.star(two.top()) == two.bottom());
  const PcdLattice three = chain_algebra(3);
  CHECK(three.size() == 3);
  const int e = 1;  // the middle element in (size, mask) order
  CHECK(three.star(e) == three.bottom());
  CHECK(b_plus(2).size() == 5);
  CHECK_THROWS_AS(chain_algebra(0), ValidationError);
}

TEST_CASE("star axiom and antitone laws up to 7 points") {
  for (const Poset& p : posets_between(0, 7)) {
    const PcdLattice a = make_pcdl(p);
    CHECK(star_axiom_holds(a));
    CHECK(a.star(a.bottom()) == a.top());
    if (a.size() > 1) CHECK(a.star(a.top()) == a.bottom());
    for (int x = 0; x < a.size(); ++x) {
      const int xs = a.star(x);
      CHECK(a.leq(x, a.star(xs)));
      CHECK(a.star(a.star(xs)) == xs);
    }
  }
  for (const Poset& p : posets_between(0, 5)) {
    const PcdLattice a = make_pcdl(p);
    for (int x = 0; x < a.size(); ++x) {
      for (int y = 0; y < a.size(); ++y) {
        if (a.leq(x, y)) CHECK(a.leq(a.star(y), a.star(x)));
      }
    }
  }
}

TEST_CASE("star table agrees with the search-based oracle") {
  for (const Poset& p : posets_between(0, 5)) {
    const PcdLattice a = make_pcdl(p);
    const oracle::Algebra o = oracle::algebra_of(p);
    REQUIRE(o.size == a.size());
    // both index up-sets differently; compare through masks
    const auto ups = oracle::up_sets(p);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      CHECK(a.element(a.star(a.index_of(ups[k]))) == ups[static_cast<std::size_t>(o.star[k])]);
    }
  }
}

TEST_CASE("is_p_morphism examples") {
  const Poset v3 = v_space(3);
  const Poset v2 = v_space(2);
  CHECK(is_p_morphism(v3, v3, identity_assignment(4)));
  CHECK(is_p_morphism(v3, v3, Assignment{2, 2, 2, 2}));
  CHECK_FALSE(is_p_morphism(v2, v3, Assignment{0, 1, 2}));
  const auto viol = p_morphism_violation(v2, v3, Assignment{0, 1, 2});
  REQUIRE(viol.has_value());
  CHECK(viol->point == 0);
  CHECK(popcount(viol->image_of_max) == 2);
  CHECK(popcount(viol->max_of_image) == 3);
  CHECK(viol->describe(v2, v3).find("M-condition") != std::string::npos);
}

TEST_CASE("p-morphism check and enumeration match brute force") {
  const auto small = posets_between(1, 4);
  for (const Poset& s : small) {
    for (const Poset& t : small) {
      if (s.size() > 3 && t.size() > 3) continue;
      std::size_t brute = 0;
      std::size_t brute_onto = 0;
      std::size_t brute_emb = 0;
      oracle::for_each_function(s.size(), t.size(), [&](const std::vector<int>& f) {
        const bool pm = oracle::p_morphism(s, t, f);
        CHECK(is_p_morphism(s, t, f) == pm);
        if (!pm) return;
        ++brute;
        const auto props = map_properties(s, t, f);
        brute_onto += props.onto ? 1 : 0;
        brute_emb += props.embedding ? 1 : 0;
      });
      CHECK(p_morphisms(s, t).size() == brute);
      CHECK(p_morphisms(s, t, {.surjective = true}).size() == brute_onto);
      CHECK(p_morphisms(s, t, {.embedding = true}).size() == brute_emb);
    }
  }
}

TEST_CASE("dictionary soundness: p-morphism iff the dual map preserves star") {
  const auto small = posets_between(1, 4);
  for (const Poset& s : small) {
    for (const Poset& t : small) {
      const PcdLattice ds = make_pcdl(s);
      const PcdLattice dt = make_pcdl(t);
      oracle::for_each_function(s.size(), t.size(), [&](const std::vector<int>& f) {
        if (!oracle::order_preserving(s, t, f)) return;
        const UpSetHom h = dual_of_order_map(OrderMap::make(s, t, f));
        bool preserves = true;
        for (int u = 0; u < dt.size(); ++u) {
          preserves = preserves && h.table[static_cast<std::size_t>(dt.star(u))] ==
                                       ds.star(h.table[static_cast<std::size_t>(u)]);
        }
        CHECK(preserves == is_p_morphism(s, t, f));
      });
    }
  }
}

TEST_CASE("variety index") {
  CHECK(variety_index(b_plus(3)).n == 3);
  CHECK(variety_index(make_pcdl(chain(1))).n == 1);
  CHECK(variety_index(make_pcdl(sum_v3_v2())).n == 3);
  CHECK(variety_index(make_pcdl(antichain(0))).n == -1);
  CHECK(variety_index(b_plus(3)).within(3));
  CHECK_FALSE(variety_index(b_plus(3)).within(2));
}

TEST_CASE("star_homs examples") {
  const PcdLattice two = make_pcdl(chain(1));
  CHECK(star_homs(two, two).size() == 1);
  CHECK(star_homs(b_plus(3), two).size() == 3);

  std::size_t brute = 0;
  oracle::for_each_function(4, 3, [&](const std::vector<int>& f) {
    brute += oracle::p_morphism(v_space(3), v_space(2), f) ? 1 : 0;
  });
  CHECK(star_homs(b_plus(2), b_plus(3)).size() == brute);
  for (const StarHom& h : star_homs(b_plus(2), b_plus(3))) CHECK(is_star_hom(b_plus(2), b_plus(3), h.table));
}

TEST_CASE("star_homs against an algebra-side brute force") {
  // every table A -> B preserving 0, 1, join, meet and star, for tiny algebras
  const auto small = posets_between(0, 3);
  for (const Poset& p : small) {
    for (const Poset& q : small) {
      const oracle::Algebra a = oracle::algebra_of(p);
      const oracle::Algebra b = oracle::algebra_of(q);
      if (a.size > 6 || b.size > 6) continue;
      std::size_t count = 0;
      oracle::for_each_function(a.size, b.size, [&](const std::vector<int>& h) {
        auto at = [&](int x) { return h[static_cast<std::size_t>(x)]; };
        if (at(a.bottom) != b.bottom || at(a.top) != b.top) return;
        for (int x = 0; x < a.size; ++x) {
          const auto xs = static_cast<std::size_t>(x);
          if (at(a.star[xs]) != b.star[static_cast<std::size_t>(at(x))]) return;
          for (int y = 0; y < a.size; ++y) {
            const auto ys = static_cast<std::size_t>(y);
            if (at(a.join[xs][ys]) != b.join[static_cast<std::size_t>(at(x))][static_cast<std::size_t>(at(y))]) return;
            if (at(a.meet[xs][ys]) != b.meet[static_cast<std::size_t>(at(x))][static_cast<std::size_t>(at(y))]) return;
          }
        }
        ++count;
      });
      CHECK(star_homs(make_pcdl(p), make_pcdl(q)).size() == count);
    }
  }
}

TEST_CASE("onto_star_hom_exists examples") {
  CHECK(onto_star_hom_exists(b_plus(2), 2));
  CHECK_FALSE(onto_star_hom_exists(b_plus(3), 2));
  CHECK(star_homs(b_plus(3), b_plus(2), true).empty());
  CHECK(onto_star_hom_exists(make_pcdl(sum_v3_v2()), 2));
  CHECK_THROWS_AS(onto_star_hom_exists(b_plus(2), 0), ValidationError);
}

TEST_CASE("onto-hom shortcut agrees with enumeration of onto homs") {
  for (const Poset& p : posets_between(1, 5)) {
    const PcdLattice a = make_pcdl(p);
    for (int i = 1; i <= 4; ++i) {
      // brute force over all maps V_i -> P(A): injective order-embedding p-morphisms
      bool brute = false;
      const Poset vi = v_space(i);
      oracle::for_each_function(vi.size(), p.size(), [&](const std::vector<int>& f) {
        if (brute || !oracle::p_morphism(vi, p, f)) return;
        brute = map_properties(vi, p, f).embedding;
      });
      CHECK(onto_star_hom_exists(a, i) == brute);
      if (p.size() <= 4) CHECK(!star_homs(a, b_plus(i), true).empty() == brute);
      if (i >= 2) {
        bool by_size = false;
        for (int x = 0; x < p.size(); ++x) by_size = by_size || popcount(max_above(p, x)) == i;
        CHECK(by_size == brute);
      }
      if (auto w = onto_star_hom_witness(p, i)) {
        CHECK(is_p_morphism(vi, p, *w));
        CHECK(map_properties(vi, p, *w).embedding);
      }
    }
  }
}
