#include "pcdl/pcdl.hpp"

#include <algorithm>

namespace pcdl {

PointSet pseudocomplement(const Poset& p, PointSet up_set) {
  if (!subset_of(up_set, p.all()) || !p.is_up_set(up_set)) {
    throw ValidationError("pseudocomplement: argument is not an up-set");
  }
  return p.all() & ~p.down_closure(up_set);
}

PcdLattice::PcdLattice(Poset space) : lattice_(std::move(space)) {
  star_.reserve(static_cast<std::size_t>(lattice_.size()));
  for (PointSet u : lattice_.elements()) star_.push_back(lattice_.index_of(pseudocomplement(lattice_.base(), u)));
}

bool star_axiom_holds(const PcdLattice& a) {
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      const bool below_star = a.leq(x, a.star(y));
      const bool disjoint = a.meet(x, y) == a.bottom();
      if (below_star != disjoint) return false;
    }
  }
  return true;
}

PcdLattice make_pcdl(Poset p) {
  PcdLattice a(std::move(p));
  if (!star_axiom_holds(a)) throw ValidationError("pseudocomplement axiom fails");
  return a;
}

PcdLattice pcdl_from_lattice(const AbstractLattice& l) { return make_pcdl(dual_space(l)); }

PcdLattice b_plus(int n) { return make_pcdl(v_space(n)); }

PcdLattice chain_algebra(int k) {
  if (k < 1) throw ValidationError("chain_algebra: need at least one element");
  return make_pcdl(chain(k - 1));
}

std::string PMorphismViolation::describe(const Poset& source, const Poset& target) const {
  auto names = [](const Poset& p, PointSet s) {
    std::string out = "{";
    bool first = true;
    for_each_point(s, [&](int i) {
      if (!first) out += ",";
      out += p.label(i);
      first = false;
    });
    return out + "}";
  };
  const std::string at = point >= 0 ? source.label(point) : "?";
  if (order_violation) return "not order-preserving at '" + at + "'";
  return "M-condition fails at '" + at + "': f[M(x)] = " + names(target, image_of_max) +
         " but M(f(x)) = " + names(target, max_of_image);
}

std::optional<PMorphismViolation> p_morphism_violation(const Poset& source, const Poset& target,
                                                       const Assignment& f) {
  for (int x = 0; x < source.size(); ++x) {
    const int fx = f[static_cast<std::size_t>(x)];
    bool ordered = true;
    for_each_point(source.strict_up(x), [&](int y) { ordered = ordered && target.leq(fx, f[static_cast<std::size_t>(y)]); });
    if (!ordered) {
      PMorphismViolation v;
      v.point = x;
      v.order_violation = true;
      return v;
    }
  }
  for (int x = 0; x < source.size(); ++x) {
    const PointSet img = image(f, max_above(source, x));
    const PointSet want = max_above(target, f[static_cast<std::size_t>(x)]);
    if (img != want) return PMorphismViolation{x, false, img, want};
  }
  return std::nullopt;
}

bool is_p_morphism(const Poset& source, const Poset& target, const Assignment& f) {
  return !p_morphism_violation(source, target, f).has_value();
}

bool is_p_morphism(const OrderMap& f) { return is_p_morphism(f.source, f.target, f.assignment); }

std::vector<int> max_above_sizes(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x) out.push_back(popcount(max_above(p, x)));
  return out;
}

VarietyIndex variety_index(const Poset& space) {
  VarietyIndex v;
  for (int s : max_above_sizes(space)) v.n = std::max(v.n, s);
  return v;
}

VarietyIndex variety_index(const PcdLattice& a) { return variety_index(a.space()); }

namespace {

struct PMorphismEnumerator {
  const Poset& source;
  const Poset& target;
  PMorphismSearch opts;
  const std::function<bool(const Assignment&)>& visit;
  std::vector<int> order;
  std::vector<PointSet> target_max;  // M(c) per target point
  Assignment f;
  PointSet hit = 0;
  std::vector<int> hit_count;
  std::size_t visited = 0;
  bool stop = false;

  bool compatible(int x, int c) const {
    // order with already-assigned points (all points above x are assigned)
    bool ok = true;
    for_each_point(source.strict_up(x), [&](int y) { ok = ok && target.leq(c, f[static_cast<std::size_t>(y)]); });
    if (!ok) return false;
    const PointSet want = contains(source.maximal(), x) ? bit(c) : image(f, max_above(source, x));
    if (target_max[static_cast<std::size_t>(c)] != want) return false;
    if (opts.embedding) {
      if (hit_count[static_cast<std::size_t>(c)] > 0) return false;
      for (std::size_t k = 0; k < order.size(); ++k) {
        const int y = order[k];
        if (f[static_cast<std::size_t>(y)] < 0) continue;
        const int fy = f[static_cast<std::size_t>(y)];
        if (source.leq(x, y) != target.leq(c, fy) || source.leq(y, x) != target.leq(fy, c)) return false;
      }
    }
    return true;
  }

  void run(std::size_t k) {
    if (stop) return;
    if (opts.surjective) {
      const int remaining = static_cast<int>(order.size() - k);
      if (popcount(target.all() & ~hit) > remaining) return;
    }
    if (k == order.size()) {
      ++visited;
      if (!visit(f)) stop = true;
      return;
    }
    const int x = order[k];
    const PointSet allowed = opts.allowed.empty() ? target.all() : opts.allowed[static_cast<std::size_t>(x)];
    for (int pass = 0; pass < 2 && !stop; ++pass) {
      const PointSet tier = allowed & (pass == 0 ? target.maximal() : ~target.maximal());
      for (int c : points_of(tier)) {
        if (stop) break;
        if (!compatible(x, c)) continue;
        f[static_cast<std::size_t>(x)] = c;
        const PointSet saved = hit;
        hit |= bit(c);
        ++hit_count[static_cast<std::size_t>(c)];
        run(k + 1);
        --hit_count[static_cast<std::size_t>(c)];
        hit = saved;
        f[static_cast<std::size_t>(x)] = -1;
      }
    }
  }
};

}  // namespace

std::size_t for_each_p_morphism(const Poset& source, const Poset& target, const PMorphismSearch& opts,
                                const std::function<bool(const Assignment&)>& visit) {
  PMorphismEnumerator e{source, target, opts, visit, source.top_down_order(), {}, {}, 0, {}, 0, false};
  for (int c = 0; c < target.size(); ++c) e.target_max.push_back(max_above(target, c));
  e.f.assign(static_cast<std::size_t>(source.size()), -1);
  e.hit_count.assign(static_cast<std::size_t>(target.size()), 0);
  if (source.size() > 0 && target.size() == 0) return 0;
  if (!opts.allowed.empty() && opts.allowed.size() != static_cast<std::size_t>(source.size())) {
    throw ValidationError("p-morphism search: one allowed set per source point required");
  }
  e.run(0);
  return e.visited;
}

std::vector<Assignment> p_morphisms(const Poset& source, const Poset& target, const PMorphismSearch& opts) {
  std::vector<Assignment> out;
  for_each_p_morphism(source, target, opts, [&](const Assignment& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<int> star_hom_from_dual(const PcdLattice& a, const PcdLattice& b, const Assignment& f) {
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(a.size()));
  for (PointSet u : a.lattice().elements()) table.push_back(b.index_of(preimage(f, u)));
  return table;
}

bool is_star_hom(const PcdLattice& a, const PcdLattice& b, const std::vector<int>& table) {
  if (static_cast<int>(table.size()) != a.size()) return false;
  auto h = [&](int x) { return table[static_cast<std::size_t>(x)]; };
  if (h(a.bottom()) != b.bottom() || h(a.top()) != b.top()) return false;
  for (int x = 0; x < a.size(); ++x) {
    if (h(a.star(x)) != b.star(h(x))) return false;
    for (int y = 0; y < a.size(); ++y) {
      if (h(a.join(x, y)) != b.join(h(x), h(y))) return false;
      if (h(a.meet(x, y)) != b.meet(h(x), h(y))) return false;
    }
  }
  return true;
}

std::vector<StarHom> star_homs(const PcdLattice& a, const PcdLattice& b, bool onto_only) {
  std::vector<StarHom> out;
  PMorphismSearch opts;
  opts.embedding = onto_only;  // onto homs are dual to order-embeddings
  for_each_p_morphism(b.space(), a.space(), opts, [&](const Assignment& f) {
    StarHom h{star_hom_from_dual(a, b, f), f};
    if (!is_star_hom(a, b, h.table)) {
      throw Error("internal: dual of a p-morphism failed to be a *-homomorphism");
    }
    out.push_back(std::move(h));
    return true;
  });
  return out;
}

std::optional<Assignment> onto_star_hom_witness(const Poset& space, int i) {
  if (i < 0) return std::nullopt;
  const std::vector<int> sizes = max_above_sizes(space);
  for (int x = 0; x < space.size(); ++x) {
    const bool maximal = contains(space.maximal(), x);
    if (i == 0) {
      if (maximal) return Assignment{x};
      continue;
    }
    if (maximal || sizes[static_cast<std::size_t>(x)] != i) continue;
    // V_i: point 0 is the bottom, 1..i the tops.
    Assignment f{x};
    for_each_point(max_above(space, x), [&](int m) { f.push_back(m); });
    return f;
  }
  return std::nullopt;
}

bool onto_star_hom_exists(const PcdLattice& a, int i) {
  if (i < 1) throw ValidationError("onto_star_hom_exists: i must be at least 1");
  return onto_star_hom_witness(a.space(), i).has_value();
}

}  // namespace pcdl
