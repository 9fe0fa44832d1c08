#include "pcdl/congruence.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "pcdl/poset_enum.hpp"

namespace pcdl {

bool is_dual_congruence(const Poset& p, PointSet theta) {
  if (!subset_of(theta, p.all())) return false;
  return subset_of(p.down_closure(theta & p.maximal()), theta);
}

DualCongruence DualCongruence::make(Poset base, PointSet theta) {
  if (!is_dual_congruence(base, theta)) {
    throw ValidationError("dual congruence violates down(theta & Max) <= theta");
  }
  return DualCongruence{std::move(base), theta};
}

std::vector<PointSet> enumerate_congruences(const Poset& p, int bound) {
  if (p.size() > bound) {
    throw SizeError("congruence enumeration limited to " + std::to_string(bound) + " points, got " +
                    std::to_string(p.size()));
  }
  const std::vector<int> maxima = points_of(p.maximal());
  const PointSet non_max = p.all() & ~p.maximal();
  std::vector<PointSet> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << maxima.size()); ++pick) {
    PointSet s = 0;
    for (std::size_t k = 0; k < maxima.size(); ++k) {
      if ((pick >> k) & 1U) s |= bit(maxima[k]);
    }
    const PointSet forced = p.down_closure(s);
    const PointSet free = non_max & ~forced;
    // every subset of `free`
    PointSet sub = 0;
    do {
      out.push_back(forced | sub);
      sub = (sub - free) & free;
    } while (sub != 0);
  }
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

bool congruence_relates(const Poset& p, PointSet theta, PointSet u1, PointSet u2) {
  if (!p.is_up_set(u1) || !p.is_up_set(u2)) throw ValidationError("congruence_relates: arguments must be up-sets");
  return (u1 & ~theta) == (u2 & ~theta);
}

namespace {

// Renumbers the bits of `s` inside `keep` to consecutive positions.
PointSet compress(PointSet s, PointSet keep) {
  PointSet out = 0;
  int k = 0;
  for_each_point(keep, [&](int i) {
    if (contains(s, i)) out |= bit(k);
    ++k;
  });
  return out;
}

Relation relation_from_keys(const std::vector<PointSet>& keys) {
  Relation r;
  std::unordered_map<PointSet, int> ids;
  for (PointSet k : keys) {
    auto [it, inserted] = ids.emplace(k, static_cast<int>(ids.size()));
    r.class_of.push_back(it->second);
  }
  return r;
}

void require_surjective_p_morphism(const Poset& from, const Poset& to, const Assignment& h) {
  if (h.size() != static_cast<std::size_t>(from.size())) throw ValidationError("dual map is not total");
  for (int v : h) {
    if (v < 0 || v >= to.size()) throw ValidationError("dual map lands outside its target");
  }
  if (auto v = p_morphism_violation(from, to, h)) {
    throw ValidationError("dual map is not a p-morphism: " + v->describe(from, to));
  }
  if (image(h, from.all()) != to.all()) {
    throw ValidationError("dual map is not onto, so the algebra map is not one-to-one");
  }
}

}  // namespace

Quotient quotient(const PcdLattice& a, PointSet theta) {
  const Poset& p = a.space();
  if (!is_dual_congruence(p, theta)) throw ValidationError("quotient: theta is not a dual congruence");
  const PointSet keep = p.all() & ~theta;
  Quotient q{make_pcdl(p.restrict(keep)), {}};
  for (PointSet u : a.lattice().elements()) q.projection.push_back(q.algebra.index_of(compress(u, keep)));

  if (!is_star_hom(a, q.algebra, q.projection)) throw Error("internal: quotient map is not a *-homomorphism");
  std::vector<bool> hit(static_cast<std::size_t>(q.algebra.size()), false);
  for (int v : q.projection) hit[static_cast<std::size_t>(v)] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw Error("internal: quotient map is not onto");
  if (!(relation_from_keys(std::vector<PointSet>(q.projection.begin(), q.projection.end())) ==
        congruence_relation(a, theta))) {
    throw Error("internal: quotient kernel differs from theta");
  }
  return q;
}

bool Relation::is_diagonal() const { return class_count() == static_cast<int>(class_of.size()); }

bool Relation::is_full() const { return class_count() <= 1; }

int Relation::class_count() const {
  int m = 0;
  for (int c : class_of) m = std::max(m, c + 1);
  return m;
}

bool Relation::is_transitive() const {
  // Class ids make this automatic; kept as an explicit check for callers that
  // build relations by hand.
  const std::size_t n = class_of.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (class_of[a] != class_of[b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (class_of[b] == class_of[c] && class_of[a] != class_of[c]) return false;
      }
    }
  }
  return true;
}

bool operator==(const Relation& a, const Relation& b) { return a.class_of == b.class_of; }

Relation congruence_relation(const PcdLattice& a, PointSet theta) {
  std::vector<PointSet> keys;
  for (PointSet u : a.lattice().elements()) keys.push_back(u & ~theta);
  return relation_from_keys(keys);
}

Relation restrict_congruence(const PcdLattice& b, PointSet psi, const PcdLattice& a, const Assignment& h) {
  require_surjective_p_morphism(b.space(), a.space(), h);
  if (!is_dual_congruence(b.space(), psi)) throw ValidationError("restrict_congruence: psi is not a dual congruence");
  std::vector<PointSet> keys;
  for (PointSet u : a.lattice().elements()) keys.push_back(preimage(h, u) & ~psi);
  return relation_from_keys(keys);
}

bool is_essential_extension(const PcdLattice& b, const PcdLattice& a, const Assignment& h, int bound) {
  for (PointSet psi : enumerate_congruences(b.space(), bound)) {
    if (psi == 0) continue;
    if (restrict_congruence(b, psi, a, h).is_diagonal()) return false;
  }
  return true;
}

Pullback pullback_congruence(const Poset& x, const Poset& y, const Assignment& h, PointSet theta) {
  require_surjective_p_morphism(x, y, h);
  if (!is_dual_congruence(y, theta)) throw ValidationError("pullback_congruence: theta is not a dual congruence");
  Pullback out;
  out.psi = preimage(h, theta);
  out.is_congruence = is_dual_congruence(x, out.psi);
  if (!out.is_congruence) {
    const PointSet missing = x.down_closure(out.psi & x.maximal()) & ~out.psi;
    out.failure = "down-closure fails: '" + x.label(std::countr_zero(missing)) +
                  "' lies below a maximal point of the preimage but outside it";
  }
  out.transfer_law = true;
  const std::vector<PointSet> ups = all_up_sets(y);
  for (PointSet u1 : ups) {
    for (PointSet u2 : ups) {
      const bool below = (u1 & ~theta) == (u2 & ~theta);
      const bool above = (preimage(h, u1) & ~out.psi) == (preimage(h, u2) & ~out.psi);
      if (below != above) {
        out.transfer_law = false;
        if (out.failure.empty()) out.failure = "transfer law fails on a pair of up-sets";
      }
    }
  }
  return out;
}

bool is_subdirectly_irreducible(const Poset& p, int bound) {
  std::vector<PointSet> minimal;
  for (PointSet t : enumerate_congruences(p, bound)) {
    if (t == 0) continue;
    bool has_smaller = false;
    for (PointSet m : minimal) has_smaller = has_smaller || subset_of(m, t);
    if (!has_smaller) minimal.push_back(t);  // sorted by size, so t is minimal
  }
  return minimal.size() == 1;
}

PointSet essential_reduction(const PcdLattice& b, const PcdLattice& a, const Assignment& h, PointSet theta,
                             int bound) {
  const Relation target = restrict_congruence(b, theta, a, h);
  const std::vector<PointSet> all = enumerate_congruences(b.space(), bound);
  PointSet psi = theta;
  for (bool grew = true; grew;) {
    grew = false;
    for (PointSet cand : all) {
      if (cand != psi && subset_of(psi, cand) && restrict_congruence(b, cand, a, h) == target) {
        psi = cand;
        grew = true;
        break;
      }
    }
  }
  return psi;
}

const char* to_string(ExtensileOutcome o) {
  switch (o) {
    case ExtensileOutcome::yes: return "yes";
    case ExtensileOutcome::no_with_witness: return "no_with_witness";
    case ExtensileOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

ExtensileResult is_congruence_extensile_bounded(const PcdLattice& b, int n, int bound,
                                                std::size_t max_extensions) {
  if (!variety_index(b).within(n)) {
    throw ValidationError("is_congruence_extensile_bounded: algebra is not in B_" + std::to_string(n));
  }
  ExtensileResult res;
  res.bound = bound;
  const Poset& pb = b.space();
  std::vector<PointSet> thetas = enumerate_congruences(pb, kMaxPoints);
  std::vector<Relation> wanted;
  for (PointSet t : thetas) wanted.push_back(congruence_relation(b, t));

  for (int s = pb.size(); s <= bound; ++s) {
    for (const Poset& y : posets_of_size(s)) {
      if (!variety_index(y).within(n)) continue;
      const std::vector<PointSet> psis = enumerate_congruences(y, kMaxPoints);
      bool failed = false;
      for_each_p_morphism(y, pb, {.surjective = true}, [&](const Assignment& h) {
        if (++res.extensions_checked > max_extensions) {
          res.outcome = ExtensileOutcome::inconclusive;
          return false;
        }
        std::vector<Relation> reachable;
        for (PointSet psi : psis) {
          std::vector<PointSet> keys;
          for (PointSet u : b.lattice().elements()) keys.push_back(preimage(h, u) & ~psi);
          reachable.push_back(relation_from_keys(keys));
        }
        for (std::size_t k = 0; k < thetas.size(); ++k) {
          if (std::find(reachable.begin(), reachable.end(), wanted[k]) == reachable.end()) {
            res.outcome = ExtensileOutcome::no_with_witness;
            res.extension = y;
            res.embedding_dual = h;
            res.theta = thetas[k];
            failed = true;
            return false;
          }
        }
        return true;
      });
      if (failed || res.outcome == ExtensileOutcome::inconclusive) return res;
    }
  }
  return res;
}

}  // namespace pcdl
