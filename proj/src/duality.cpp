#include "pcdl/duality.hpp"

#include <algorithm>

namespace pcdl {

UpSetLattice::UpSetLattice(Poset base) : base_(std::move(base)) {
  elements_ = all_up_sets(base_);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));
}

int UpSetLattice::index_of(PointSet up_set) const {
  auto it = index_.find(up_set);
  if (it == index_.end()) throw ValidationError("set is not an up-set of the base poset");
  return it->second;
}

std::string UpSetLattice::element_name(int i) const {
  std::string out = "{";
  bool first = true;
  for_each_point(element(i), [&](int p) {
    if (!first) out += ",";
    out += base_.label(p);
    first = false;
  });
  return out + "}";
}

namespace {

std::string law_failure(const char* law, const std::vector<std::string>& labels,
                        std::initializer_list<int> witnesses) {
  std::string out = std::string("lattice law '") + law + "' fails at (";
  bool first = true;
  for (int w : witnesses) {
    if (!first) out += ", ";
    out += labels[static_cast<std::size_t>(w)];
    first = false;
  }
  return out + ")";
}

}  // namespace

AbstractLattice AbstractLattice::from_tables(std::vector<std::string> labels,
                                             std::vector<std::vector<int>> joins,
                                             std::vector<std::vector<int>> meets) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw ValidationError("a bounded lattice needs at least one element");
  if (n > kMaxPoints) {
    throw SizeError("lattice has " + std::to_string(n) + " elements; validation is limited to " +
                    std::to_string(kMaxPoints));
  }
  auto check_table = [&](const std::vector<std::vector<int>>& t, const char* name) {
    if (static_cast<int>(t.size()) != n) throw ValidationError(std::string(name) + " table has wrong row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n) throw ValidationError(std::string(name) + " table is not square");
      for (int v : row) {
        if (v < 0 || v >= n) throw ValidationError(std::string(name) + " table entry out of range");
      }
    }
  };
  check_table(joins, "join");
  check_table(meets, "meet");

  AbstractLattice l;
  l.labels_ = std::move(labels);
  l.joins_ = std::move(joins);
  l.meets_ = std::move(meets);
  const auto& lab = l.labels_;
  for (int a = 0; a < n; ++a) {
    if (l.join(a, a) != a) throw ValidationError(law_failure("join idempotent", lab, {a}));
    if (l.meet(a, a) != a) throw ValidationError(law_failure("meet idempotent", lab, {a}));
    for (int b = 0; b < n; ++b) {
      if (l.join(a, b) != l.join(b, a)) throw ValidationError(law_failure("join commutative", lab, {a, b}));
      if (l.meet(a, b) != l.meet(b, a)) throw ValidationError(law_failure("meet commutative", lab, {a, b}));
      if (l.join(a, l.meet(a, b)) != a) throw ValidationError(law_failure("absorption", lab, {a, b}));
      if (l.meet(a, l.join(a, b)) != a) throw ValidationError(law_failure("absorption", lab, {a, b}));
      for (int c = 0; c < n; ++c) {
        if (l.join(a, l.join(b, c)) != l.join(l.join(a, b), c)) {
          throw ValidationError(law_failure("join associative", lab, {a, b, c}));
        }
        if (l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c)) {
          throw ValidationError(law_failure("meet associative", lab, {a, b, c}));
        }
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          throw ValidationError(law_failure("distributive", lab, {a, b, c}));
        }
      }
    }
  }
  // In a finite lattice the bounds are the join and meet of everything.
  l.bottom_ = 0;
  l.top_ = 0;
  for (int a = 1; a < n; ++a) {
    l.bottom_ = l.meet(l.bottom_, a);
    l.top_ = l.join(l.top_, a);
  }
  return l;
}

AbstractLattice AbstractLattice::from_up_sets(const UpSetLattice& u) {
  const int n = u.size();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> joins(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::vector<int>> meets = joins;
  for (int a = 0; a < n; ++a) {
    labels.push_back(u.element_name(a));
    for (int b = 0; b < n; ++b) {
      joins[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = u.join(a, b);
      meets[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = u.meet(a, b);
    }
  }
  return from_tables(std::move(labels), std::move(joins), std::move(meets));
}

std::vector<int> AbstractLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (j == bottom_) continue;
    int below = bottom_;
    for (int x = 0; x < size(); ++x) {
      if (x != j && leq(x, j)) below = join(below, x);
    }
    if (below != j) out.push_back(j);
  }
  return out;
}

UpSetLattice dual_lattice(const Poset& p) { return UpSetLattice(p); }

DualSpace dual_space_with_iso(const AbstractLattice& l) {
  DualSpace out;
  out.point_element = l.join_irreducibles();
  const auto& ji = out.point_element;
  const int m = static_cast<int>(ji.size());
  std::vector<std::string> labels;
  std::vector<PointSet> up(static_cast<std::size_t>(m), 0);
  for (int p = 0; p < m; ++p) {
    labels.push_back(l.label(ji[static_cast<std::size_t>(p)]));
    for (int q = 0; q < m; ++q) {
      if (l.leq(ji[static_cast<std::size_t>(q)], ji[static_cast<std::size_t>(p)])) up[static_cast<std::size_t>(p)] |= bit(q);
    }
  }
  out.poset = Poset::from_up_sets(std::move(labels), std::move(up));
  out.embedding.resize(static_cast<std::size_t>(l.size()));
  for (int a = 0; a < l.size(); ++a) {
    PointSet s = 0;
    for (int p = 0; p < m; ++p) {
      if (l.leq(ji[static_cast<std::size_t>(p)], a)) s |= bit(p);
    }
    out.embedding[static_cast<std::size_t>(a)] = s;
  }
  return out;
}

Poset dual_space(const AbstractLattice& l) { return dual_space_with_iso(l).poset; }

Poset dual_space(const UpSetLattice& l) { return dual_space(AbstractLattice::from_up_sets(l)); }

bool UpSetHom::one_to_one() const {
  std::vector<int> sorted = table;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool UpSetHom::onto() const {
  std::vector<bool> hit(static_cast<std::size_t>(to.size()), false);
  for (int v : table) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

UpSetHom dual_of_order_map(const OrderMap& f) {
  if (!is_order_preserving(f.source, f.target, f.assignment)) {
    throw ValidationError("dual_of_order_map: map is not order-preserving");
  }
  UpSetHom h{UpSetLattice(f.target), UpSetLattice(f.source), {}};
  h.table.reserve(static_cast<std::size_t>(h.from.size()));
  for (PointSet u : h.from.elements()) h.table.push_back(h.to.index_of(preimage(f.assignment, u)));
  return h;
}

bool is_lattice_hom(const AbstractLattice& from, const AbstractLattice& to,
                    const std::vector<int>& table) {
  if (static_cast<int>(table.size()) != from.size()) return false;
  for (int v : table) {
    if (v < 0 || v >= to.size()) return false;
  }
  auto h = [&](int a) { return table[static_cast<std::size_t>(a)]; };
  if (h(from.bottom()) != to.bottom() || h(from.top()) != to.top()) return false;
  for (int a = 0; a < from.size(); ++a) {
    for (int b = 0; b < from.size(); ++b) {
      if (h(from.join(a, b)) != to.join(h(a), h(b))) return false;
      if (h(from.meet(a, b)) != to.meet(h(a), h(b))) return false;
    }
  }
  return true;
}

OrderMap dual_of_lattice_hom(const AbstractLattice& from, const AbstractLattice& to,
                             const std::vector<int>& table) {
  if (!is_lattice_hom(from, to, table)) {
    throw ValidationError("dual_of_lattice_hom: table is not a {0,1}-lattice homomorphism");
  }
  const DualSpace src = dual_space_with_iso(to);
  const DualSpace dst = dual_space_with_iso(from);
  Assignment f;
  for (int k : src.point_element) {
    // least element of the prime filter h^{-1}(up k)
    int least = from.top();
    for (int a = 0; a < from.size(); ++a) {
      if (to.leq(k, table[static_cast<std::size_t>(a)])) least = from.meet(least, a);
    }
    auto it = std::find(dst.point_element.begin(), dst.point_element.end(), least);
    if (it == dst.point_element.end()) {
      throw ValidationError("dual_of_lattice_hom: preimage filter is not prime");
    }
    f.push_back(static_cast<int>(it - dst.point_element.begin()));
  }
  return OrderMap::make(src.poset, dst.poset, std::move(f));
}

AbstractLattice boolean_plus_top(int n) {
  const int cube = 1 << n;
  const int size = cube + 1;
  std::vector<std::string> labels;
  for (int s = 0; s < cube; ++s) {
    std::string name = "{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1) {
        if (!first) name += ",";
        name += std::to_string(i + 1);
        first = false;
      }
    }
    labels.push_back(name + "}");
  }
  labels.push_back("1");
  std::vector<std::vector<int>> joins(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  std::vector<std::vector<int>> meets = joins;
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const bool a_top = a == cube;
      const bool b_top = b == cube;
      joins[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a_top || b_top) ? cube : (a | b);
      meets[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a_top ? b : b_top ? a : (a & b);
    }
  }
  return AbstractLattice::from_tables(std::move(labels), std::move(joins), std::move(meets));
}

}  // namespace pcdl
