#include "pcdl/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace pcdl {

namespace {

void check_size(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxPoints)) {
    throw SizeError("poset has " + std::to_string(n) + " points; at most " +
                    std::to_string(kMaxPoints) + " are supported");
  }
}

std::string unique_label(const std::string& base, const std::set<std::string>& taken) {
  std::string candidate = base;
  while (taken.count(candidate) != 0) candidate += "'";
  return candidate;
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels,
                         std::span<const std::pair<int, int>> covers) {
  check_size(labels.size());
  const int n = static_cast<int>(labels.size());
  std::vector<PointSet> up(labels.size());
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = bit(i);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n) {
      throw ValidationError("cover pair (" + std::to_string(lo) + ", " + std::to_string(hi) +
                            ") refers to a point outside the poset");
    }
    up[static_cast<std::size_t>(lo)] |= bit(hi);
  }
  return from_up_sets(std::move(labels), std::move(up));
}

Poset Poset::from_labeled_covers(std::vector<std::string> labels,
                                 std::span<const std::pair<std::string, std::string>> covers) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto l = index.find(lo);
    auto h = index.find(hi);
    if (l == index.end()) throw LabelError("unknown element '" + lo + "' in covers");
    if (h == index.end()) throw LabelError("unknown element '" + hi + "' in covers");
    pairs.emplace_back(l->second, h->second);
  }
  return from_covers(std::move(labels), pairs);
}

Poset Poset::from_up_sets(std::vector<std::string> labels, std::vector<PointSet> up) {
  check_size(labels.size());
  if (labels.size() != up.size()) {
    throw ValidationError("label count does not match relation size");
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    p.up_[static_cast<std::size_t>(i)] |= bit(i);
    if (!subset_of(p.up_[static_cast<std::size_t>(i)], full_set(n))) {
      throw ValidationError("relation refers to a point outside the poset");
    }
  }
  // Warshall closure on rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (contains(p.up_[static_cast<std::size_t>(i)], k)) {
        p.up_[static_cast<std::size_t>(i)] |= p.up_[static_cast<std::size_t>(k)];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p.leq(i, j) && p.leq(j, i)) {
        throw ValidationError("order is not antisymmetric: '" + p.labels_[static_cast<std::size_t>(i)] +
                              "' and '" + p.labels_[static_cast<std::size_t>(j)] +
                              "' lie on a cycle");
      }
    }
  }
  p.finish();
  return p;
}

void Poset::finish() {
  const int n = size();
  index_.clear();
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[static_cast<std::size_t>(i)], i).second) {
      throw ValidationError("duplicate element label '" + labels_[static_cast<std::size_t>(i)] + "'");
    }
  }
  down_.assign(static_cast<std::size_t>(n), 0);
  maximal_ = 0;
  for (int i = 0; i < n; ++i) {
    for_each_point(up_[static_cast<std::size_t>(i)], [&](int j) { down_[static_cast<std::size_t>(j)] |= bit(i); });
    if (up_[static_cast<std::size_t>(i)] == bit(i)) maximal_ |= bit(i);
  }
  top_down_.resize(static_cast<std::size_t>(n));
  std::iota(top_down_.begin(), top_down_.end(), 0);
  std::stable_sort(top_down_.begin(), top_down_.end(), [&](int a, int b) {
    return popcount(up(a)) < popcount(up(b));
  });
}

int Poset::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw LabelError("unknown element '" + std::string(label) + "'");
  return it->second;
}

PointSet Poset::minimal() const {
  PointSet out = 0;
  for (int i = 0; i < size(); ++i) {
    if (down(i) == bit(i)) out |= bit(i);
  }
  return out;
}

PointSet Poset::up_closure(PointSet s) const {
  PointSet out = 0;
  for_each_point(s, [&](int i) { out |= up(i); });
  return out;
}

PointSet Poset::down_closure(PointSet s) const {
  PointSet out = 0;
  for_each_point(s, [&](int i) { out |= down(i); });
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    const PointSet above = strict_up(i);
    for_each_point(above, [&](int j) {
      // j covers i iff nothing strictly between
      if ((above & strict_down(j)) == 0) out.emplace_back(i, j);
    });
  }
  return out;
}

Poset Poset::restrict(PointSet keep) const {
  keep &= all();
  std::vector<int> old_of_new = points_of(keep);
  std::vector<int> new_of_old(static_cast<std::size_t>(size()), -1);
  for (std::size_t k = 0; k < old_of_new.size(); ++k) {
    new_of_old[static_cast<std::size_t>(old_of_new[k])] = static_cast<int>(k);
  }
  std::vector<std::string> labels;
  std::vector<PointSet> up;
  for (int old : old_of_new) {
    labels.push_back(label(old));
    PointSet row = 0;
    for_each_point(this->up(old) & keep, [&](int j) { row |= bit(new_of_old[static_cast<std::size_t>(j)]); });
    up.push_back(row);
  }
  return from_up_sets(std::move(labels), std::move(up));
}

Poset Poset::relabel(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size()) throw ValidationError("relabel: wrong label count");
  Poset p = *this;
  p.labels_ = std::move(labels);
  p.finish();
  return p;
}

Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Poset::from_covers(std::move(labels), {});
}

Poset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset ordinal_sum(const Poset& lower, const Poset& upper) {
  const int nl = lower.size();
  const int nu = upper.size();
  check_size(static_cast<std::size_t>(nl + nu));
  std::set<std::string> taken(lower.labels().begin(), lower.labels().end());
  std::vector<std::string> labels = lower.labels();
  for (const auto& l : upper.labels()) {
    labels.push_back(unique_label(l, taken));
    taken.insert(labels.back());
  }
  const PointSet upper_block = full_set(nl + nu) & ~full_set(nl);
  std::vector<PointSet> up;
  for (int i = 0; i < nl; ++i) up.push_back(lower.up(i) | upper_block);
  for (int i = 0; i < nu; ++i) up.push_back(upper.up(i) << nl);
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

Poset v_space(int n) { return ordinal_sum(chain(1), antichain(n).relabel([&] {
  std::vector<std::string> l;
  for (int i = 1; i <= n; ++i) l.push_back(std::to_string(i));
  return l;
}())); }

DisjointSum disjoint_sum(std::span<const Poset> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += static_cast<std::size_t>(p.size());
  check_size(total);

  std::map<std::string, int> seen;
  for (const auto& p : parts) {
    for (const auto& l : p.labels()) ++seen[l];
  }

  DisjointSum out;
  std::vector<std::string> labels;
  std::vector<PointSet> up;
  int offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Poset& p = parts[k];
    for (int i = 0; i < p.size(); ++i) {
      const std::string& l = p.label(i);
      labels.push_back(seen[l] > 1 ? l + "." + std::to_string(k) : l);
      up.push_back(p.up(i) << offset);
      out.part_of.push_back(static_cast<int>(k));
    }
    out.parts.push_back(full_set(offset + p.size()) & ~full_set(offset));
    offset += p.size();
  }
  out.poset = Poset::from_up_sets(std::move(labels), std::move(up));
  return out;
}

std::vector<PointSet> components(const Poset& p) {
  std::vector<PointSet> out;
  PointSet left = p.all();
  while (left != 0) {
    PointSet comp = bit(std::countr_zero(left));
    for (;;) {
      PointSet grown = comp;
      for_each_point(comp, [&](int i) { grown |= p.up(i) | p.down(i); });
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

PointSet max_above(const Poset& p, int x) {
  if (x < 0 || x >= p.size()) throw LabelError("point index " + std::to_string(x) + " out of range");
  return p.up(x) & p.maximal();
}

PointSet max_above(const Poset& p, std::string_view label) {
  return max_above(p, p.index_of(label));
}

OrderMap OrderMap::make(Poset source, Poset target, Assignment assignment) {
  if (assignment.size() != static_cast<std::size_t>(source.size())) {
    throw ValidationError("map is not total: " + std::to_string(assignment.size()) +
                          " images for " + std::to_string(source.size()) + " source points");
  }
  for (int v : assignment) {
    if (v < 0 || v >= target.size()) throw ValidationError("map lands outside the target poset");
  }
  return OrderMap{std::move(source), std::move(target), std::move(assignment)};
}

const char* to_string(MapClass c) {
  switch (c) {
    case MapClass::not_order_preserving: return "not_order_preserving";
    case MapClass::order_preserving: return "order_preserving";
    case MapClass::order_embedding: return "order_embedding";
    case MapClass::both_embedding_and_onto: return "both_embedding_and_onto";
  }
  return "?";
}

bool is_order_preserving(const Poset& source, const Poset& target, const Assignment& f) {
  for (int x = 0; x < source.size(); ++x) {
    const int fx = f[static_cast<std::size_t>(x)];
    bool ok = true;
    for_each_point(source.strict_up(x), [&](int y) { ok = ok && target.leq(fx, f[static_cast<std::size_t>(y)]); });
    if (!ok) return false;
  }
  return true;
}

MapProperties map_properties(const Poset& source, const Poset& target, const Assignment& f) {
  MapProperties props;
  props.order_preserving = is_order_preserving(source, target, f);
  props.onto = image(f, source.all()) == target.all();
  if (props.order_preserving) {
    props.embedding = true;
    for (int x = 0; x < source.size() && props.embedding; ++x) {
      for (int y = 0; y < source.size(); ++y) {
        if (!source.leq(x, y) && target.leq(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) {
          props.embedding = false;
          break;
        }
      }
    }
  }
  return props;
}

MapClass classify_map(const Poset& source, const Poset& target, const Assignment& f) {
  const MapProperties props = map_properties(source, target, f);
  if (!props.order_preserving) return MapClass::not_order_preserving;
  if (!props.embedding) return MapClass::order_preserving;
  return props.onto ? MapClass::both_embedding_and_onto : MapClass::order_embedding;
}

MapClass classify_map(const OrderMap& f) { return classify_map(f.source, f.target, f.assignment); }

PointSet image(const Assignment& f, PointSet s) {
  PointSet out = 0;
  for_each_point(s, [&](int i) { out |= bit(f[static_cast<std::size_t>(i)]); });
  return out;
}

PointSet preimage(const Assignment& f, PointSet s) {
  PointSet out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (contains(s, f[i])) out |= bit(static_cast<int>(i));
  }
  return out;
}

Assignment compose(const Assignment& g, const Assignment& f) {
  Assignment out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
  return out;
}

OrderMap compose(const OrderMap& g, const OrderMap& f) {
  if (!(f.target == g.source)) throw ValidationError("compose: target of f is not the source of g");
  return OrderMap{f.source, g.target, compose(g.assignment, f.assignment)};
}

Assignment identity_assignment(int n) {
  Assignment out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

namespace {

// Colour refinement on (|up|, |down|, |M|) and neighbourhood multisets,
// iterated to a fixed point. Colours are ranks of label-independent tuples.
std::vector<int> refined_colours(const Poset& p) {
  const int n = p.size();
  using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
  std::vector<int> colour(static_cast<std::size_t>(n));
  {
    std::vector<std::tuple<int, int, int>> keys;
    for (int i = 0; i < n; ++i) {
      keys.emplace_back(popcount(p.strict_up(i)), popcount(p.strict_down(i)),
                        popcount(p.up(i) & p.maximal()));
    }
    std::vector<std::tuple<int, int, int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < n; ++i) {
      colour[static_cast<std::size_t>(i)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(i)]) - sorted.begin());
    }
  }
  int classes = 0;
  for (;;) {
    std::vector<Key> keys;
    for (int i = 0; i < n; ++i) {
      std::vector<int> above;
      std::vector<int> below;
      for_each_point(p.strict_up(i), [&](int j) { above.push_back(colour[static_cast<std::size_t>(j)]); });
      for_each_point(p.strict_down(i), [&](int j) { below.push_back(colour[static_cast<std::size_t>(j)]); });
      std::sort(above.begin(), above.end());
      std::sort(below.begin(), below.end());
      keys.emplace_back(colour[static_cast<std::size_t>(i)], std::move(above), std::move(below));
    }
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < n; ++i) {
      colour[static_cast<std::size_t>(i)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(i)]) - sorted.begin());
    }
    if (static_cast<int>(sorted.size()) == classes) break;
    classes = static_cast<int>(sorted.size());
  }
  return colour;
}

struct CanonSearch {
  const Poset& p;
  std::vector<int> colour;
  std::vector<int> slot_colour;  // colour required at each position
  std::vector<int> twin_rep;     // smallest point with identical strict relations
  std::vector<int> order;
  std::vector<std::uint64_t> code;
  std::vector<int> best_order;
  std::vector<std::uint64_t> best_code;
  PointSet used = 0;

  void run(int k, bool tied) {
    const int n = p.size();
    if (k == n) {
      if (best_order.empty() || code < best_code) {
        best_order = order;
        best_code = code;
      }
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (contains(used, c) || colour[static_cast<std::size_t>(c)] != slot_colour[static_cast<std::size_t>(k)]) continue;
      // Twins are interchangeable; place them in index order only.
      const int rep = twin_rep[static_cast<std::size_t>(c)];
      bool earlier_twin_free = false;
      for (int t = rep; t < c; ++t) {
        if (twin_rep[static_cast<std::size_t>(t)] == rep && !contains(used, t)) {
          earlier_twin_free = true;
          break;
        }
      }
      if (earlier_twin_free) continue;

      std::uint64_t below = 0;
      std::uint64_t above = 0;
      for (int j = 0; j < k; ++j) {
        const int q = order[static_cast<std::size_t>(j)];
        if (p.leq(q, c)) below |= std::uint64_t{1} << j;
        if (p.leq(c, q)) above |= std::uint64_t{1} << j;
      }
      const std::size_t at = 1 + 2 * static_cast<std::size_t>(k);
      bool next_tied = false;
      if (tied && !best_code.empty()) {
        const auto mine = std::make_pair(below, above);
        const auto theirs = std::make_pair(best_code[at], best_code[at + 1]);
        if (mine > theirs) continue;
        next_tied = mine == theirs;
      }
      order[static_cast<std::size_t>(k)] = c;
      code[at] = below;
      code[at + 1] = above;
      used |= bit(c);
      run(k + 1, next_tied || best_code.empty());
      used &= ~bit(c);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
  const int n = p.size();
  CanonSearch s{p, refined_colours(p), {}, {}, {}, {}, {}, {}, 0};
  s.slot_colour = s.colour;
  std::sort(s.slot_colour.begin(), s.slot_colour.end());
  s.twin_rep.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    s.twin_rep[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < i; ++j) {
      if (p.strict_up(i) == p.strict_up(j) && p.strict_down(i) == p.strict_down(j)) {
        s.twin_rep[static_cast<std::size_t>(i)] = s.twin_rep[static_cast<std::size_t>(j)];
        break;
      }
    }
  }
  s.order.assign(static_cast<std::size_t>(n), -1);
  s.code.assign(1 + 2 * static_cast<std::size_t>(n), 0);
  s.code[0] = static_cast<std::uint64_t>(n);
  // Colour counts are label-independent, so prefix them into the code too.
  s.run(0, true);
  CanonicalForm out;
  out.order = std::move(s.best_order);
  out.code = std::move(s.best_code);
  if (n == 0) out.code = {0};
  for (int c : s.slot_colour) out.code.push_back(static_cast<std::uint64_t>(c));
  return out;
}

Poset canonical_poset(const Poset& p) {
  const CanonicalForm cf = canonical_form(p);
  const int n = p.size();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(cf.order[static_cast<std::size_t>(k)])] = k;
  std::vector<std::string> labels;
  std::vector<PointSet> up(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    labels.push_back("p" + std::to_string(k));
    for_each_point(p.up(cf.order[static_cast<std::size_t>(k)]), [&](int j) { up[static_cast<std::size_t>(k)] |= bit(pos[static_cast<std::size_t>(j)]); });
  }
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

std::optional<Assignment> find_isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (ca.code != cb.code) return std::nullopt;
  Assignment f(static_cast<std::size_t>(a.size()));
  for (std::size_t k = 0; k < ca.order.size(); ++k) f[static_cast<std::size_t>(ca.order[k])] = cb.order[k];
  return f;
}

std::string to_dot(const Poset& p, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto [lo, hi] : p.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pcdl
