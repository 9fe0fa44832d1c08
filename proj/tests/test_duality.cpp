#include <doctest.h>

#include "oracles.hpp"
#include "pcdl/duality.hpp"
#include "pcdl/poset_enum.hpp"

using namespace pcdl;

namespace {

// The order of an abstract lattice as a poset, for isomorphism checks.
Poset lattice_order(const AbstractLattice& l) {
  std::vector<PointSet> up(static_cast<std::size_t>(l.size()), 0);
  std::vector<std::string> labels;
  for (int a = 0; a < l.size(); ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < l.size(); ++b) {
      if (l.leq(a, b)) up[static_cast<std::size_t>(a)] |= bit(b);
    }
  }
  return Poset::from_up_sets(labels, up);
}

}  // namespace

TEST_CASE("dual_lattice sizes") {
  const UpSetLattice d2 = dual_lattice(v_space(2));
  CHECK(d2.size() == 5);
  CHECK(d2.element(d2.bottom()) == 0);
  CHECK(d2.element(d2.top()) == v_space(2).all());
  CHECK(is_isomorphic(lattice_order(AbstractLattice::from_up_sets(d2)), lattice_order(boolean_plus_top(2))));
  for (int n = 0; n <= 5; ++n) CHECK(dual_lattice(v_space(n)).size() == (1 << n) + 1);
  CHECK(dual_lattice(antichain(0)).size() == 1);
}

TEST_CASE("lattice operations are union and intersection") {
  const UpSetLattice d = dual_lattice(chain(3));
  for (int a = 0; a < d.size(); ++a) {
    for (int b = 0; b < d.size(); ++b) {
      CHECK(d.element(d.join(a, b)) == (d.element(a) | d.element(b)));
      CHECK(d.element(d.meet(a, b)) == (d.element(a) & d.element(b)));
    }
  }
  CHECK_THROWS_AS(d.index_of(bit(0)), ValidationError);
}

TEST_CASE("dual_space of small lattices") {
  CHECK(is_isomorphic(dual_space(boolean_plus_top(3)), v_space(3)));
  const AbstractLattice two = AbstractLattice::from_tables({"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
  CHECK(dual_space(two).size() == 1);
  for (int n = 0; n <= 5; ++n) CHECK(is_isomorphic(dual_space(boolean_plus_top(n)), v_space(n)));
}

TEST_CASE("non-distributive and malformed tables are rejected") {
  // M3: 0, a, b, c, 1
  std::vector<std::vector<int>> j(5, std::vector<int>(5));
  std::vector<std::vector<int>> m(5, std::vector<int>(5));
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      if (x == y) {
        j[x][y] = m[x][y] = x;
      } else if (x == 0 || y == 0) {
        j[x][y] = x + y;
        m[x][y] = 0;
      } else if (x == 4 || y == 4) {
        j[x][y] = 4;
        m[x][y] = x == 4 ? y : x;
      } else {
        j[x][y] = 4;
        m[x][y] = 0;
      }
    }
  }
  CHECK_THROWS_AS(AbstractLattice::from_tables({"0", "a", "b", "c", "1"}, j, m), ValidationError);
  CHECK_THROWS_AS(AbstractLattice::from_tables({"0", "1"}, {{0, 1}}, {{0, 0}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(AbstractLattice::from_tables({"0", "1"}, {{0, 1}, {0, 1}}, {{0, 0}, {0, 1}}), ValidationError);
}

TEST_CASE("round trip P -> D(P) -> P(D(P))") {
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : posets_of_size(n)) {
      const Poset back = dual_space(dual_lattice(p));
      CHECK(is_isomorphic(back, p));
      CHECK(oracle::isomorphic(back, p));
    }
  }
}

TEST_CASE("round trip L -> P(L) -> D(P(L))") {
  // every distributive lattice with at most 30 elements arises as some D(P)
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : posets_of_size(n)) {
      const UpSetLattice d = dual_lattice(p);
      if (d.size() > 30) continue;
      const AbstractLattice l = AbstractLattice::from_up_sets(d);
      const DualSpace ds = dual_space_with_iso(l);
      const AbstractLattice back = AbstractLattice::from_up_sets(dual_lattice(ds.poset));
      CHECK(is_isomorphic(lattice_order(back), lattice_order(l)));
      // the embedding is a lattice isomorphism onto D(P(L))
      const UpSetLattice dd = dual_lattice(ds.poset);
      for (int a = 0; a < l.size(); ++a) {
        CHECK(dd.contains_set(ds.embedding[static_cast<std::size_t>(a)]));
        for (int b = 0; b < l.size(); ++b) {
          CHECK(ds.embedding[static_cast<std::size_t>(l.join(a, b))] ==
                (ds.embedding[static_cast<std::size_t>(a)] | ds.embedding[static_cast<std::size_t>(b)]));
        }
      }
    }
  }
}

TEST_CASE("dual_of_order_map examples") {
  const Poset v3 = v_space(3);
  const Poset v2 = v_space(2);
  const UpSetHom id = dual_of_order_map(OrderMap::make(v3, v3, identity_assignment(4)));
  for (int a = 0; a < id.from.size(); ++a) CHECK(id.table[static_cast<std::size_t>(a)] == a);

  const UpSetHom c = dual_of_order_map(OrderMap::make(v3, chain(1), Assignment{0, 0, 0, 0}));
  CHECK(c.from.size() == 2);
  CHECK(c.to.element(c.table[0]) == 0);
  CHECK(c.to.element(c.table[1]) == v3.all());
  CHECK(c.one_to_one());

  const UpSetHom e = dual_of_order_map(OrderMap::make(v2, v3, Assignment{0, 1, 2}));
  CHECK(e.from.size() == 9);
  CHECK(e.onto());
  CHECK_FALSE(e.one_to_one());

  CHECK_THROWS_AS(dual_of_order_map(OrderMap::make(v3, v3, Assignment{1, 0, 2, 3})), ValidationError);
}

TEST_CASE("dictionary: onto <-> one-to-one, embedding <-> onto") {
  std::vector<Poset> small;
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : posets_of_size(n)) small.push_back(p);
  }
  for (const Poset& s : small) {
    for (const Poset& t : small) {
      oracle::for_each_function(s.size(), t.size(), [&](const std::vector<int>& f) {
        if (!oracle::order_preserving(s, t, f)) return;
        const MapProperties props = map_properties(s, t, f);
        const UpSetHom h = dual_of_order_map(OrderMap::make(s, t, f));
        CHECK(h.one_to_one() == props.onto);
        CHECK(h.onto() == props.embedding);
      });
    }
  }
}

TEST_CASE("functoriality of D") {
  std::vector<Poset> small;
  for (int n = 1; n <= 3; ++n) {
    for (const Poset& p : posets_of_size(n)) small.push_back(p);
  }
  for (const Poset& a : small) {
    for (const Poset& b : small) {
      for (const Poset& c : small) {
        oracle::for_each_function(a.size(), b.size(), [&](const std::vector<int>& f) {
          if (!oracle::order_preserving(a, b, f)) return;
          const UpSetHom df = dual_of_order_map(OrderMap::make(a, b, f));
          oracle::for_each_function(b.size(), c.size(), [&](const std::vector<int>& g) {
            if (!oracle::order_preserving(b, c, g)) return;
            const UpSetHom dg = dual_of_order_map(OrderMap::make(b, c, g));
            const UpSetHom dgf = dual_of_order_map(OrderMap::make(a, c, compose(g, f)));
            for (int u = 0; u < dg.from.size(); ++u) {
              CHECK(dgf.table[static_cast<std::size_t>(u)] ==
                    df.table[static_cast<std::size_t>(dg.table[static_cast<std::size_t>(u)])]);
            }
          });
        });
      }
    }
  }
}

TEST_CASE("dual_of_lattice_hom inverts dual_of_order_map") {
  for (int n = 1; n <= 3; ++n) {
    for (const Poset& s : posets_of_size(n)) {
      for (int k = 1; k <= 3; ++k) {
        for (const Poset& t : posets_of_size(k)) {
          const AbstractLattice ls = AbstractLattice::from_up_sets(dual_lattice(s));
          const AbstractLattice lt = AbstractLattice::from_up_sets(dual_lattice(t));
          const DualSpace ps = dual_space_with_iso(ls);
          const DualSpace pt = dual_space_with_iso(lt);
          oracle::for_each_function(n, k, [&](const std::vector<int>& f) {
            if (!oracle::order_preserving(s, t, f)) return;
            const UpSetHom h = dual_of_order_map(OrderMap::make(s, t, f));
            REQUIRE(is_lattice_hom(lt, ls, h.table));
            const OrderMap back = dual_of_lattice_hom(lt, ls, h.table);
            // point of P(D(s)) generated by up(x) maps to the point generated by up(f(x))
            CHECK(map_properties(back.source, back.target, back.assignment).order_preserving);
            CHECK(map_properties(back.source, back.target, back.assignment).onto == map_properties(s, t, f).onto);
            CHECK(map_properties(back.source, back.target, back.assignment).embedding ==
                  map_properties(s, t, f).embedding);
          });
        }
      }
    }
  }
  const AbstractLattice b2 = boolean_plus_top(2);
  std::vector<int> not_hom(static_cast<std::size_t>(b2.size()), 0);
  CHECK_FALSE(is_lattice_hom(b2, b2, not_hom));
  CHECK_THROWS_AS(dual_of_lattice_hom(b2, b2, not_hom), ValidationError);
}
