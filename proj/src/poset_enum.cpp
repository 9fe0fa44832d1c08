#include "pcdl/poset_enum.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace pcdl {

namespace {

void collect_closed_sets(const Poset& p, bool upward, std::vector<PointSet>& out) {
  // Walk points so that everything a point forces is decided before it.
  std::vector<int> order = p.top_down_order();
  if (!upward) std::reverse(order.begin(), order.end());
  const std::size_t n = order.size();
  std::vector<PointSet> stack{0};
  for (std::size_t k = 0; k < n; ++k) {
    const int x = order[k];
    const PointSet forced = upward ? p.strict_up(x) : p.strict_down(x);
    const std::size_t m = stack.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (subset_of(forced, stack[i])) stack.push_back(stack[i] | bit(x));
    }
  }
  out = std::move(stack);
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
}

// Adds a new minimal point whose strict up-set is `above`.
Poset extend_below(const Poset& p, PointSet above) {
  const int n = p.size();
  std::vector<std::string> labels = p.labels();
  labels.push_back("new");
  std::vector<PointSet> up;
  for (int i = 0; i < n; ++i) up.push_back(p.up(i));
  up.push_back(above | bit(n));
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

std::vector<Poset> next_layer(const std::vector<Poset>& layer,
                              const std::function<bool(const Poset&)>& keep) {
  std::map<std::vector<std::uint64_t>, Poset> found;
  for (const Poset& p : layer) {
    for (PointSet above : all_up_sets(p)) {
      Poset q = extend_below(p, above);
      if (keep && !keep(q)) continue;
      CanonicalForm cf = canonical_form(q);
      if (found.count(cf.code) == 0) found.emplace(std::move(cf.code), canonical_poset(q));
    }
  }
  std::vector<Poset> out;
  out.reserve(found.size());
  for (auto& [code, poset] : found) out.push_back(std::move(poset));
  return out;
}

}  // namespace

std::vector<PointSet> all_up_sets(const Poset& p) {
  std::vector<PointSet> out;
  collect_closed_sets(p, true, out);
  return out;
}

std::vector<PointSet> all_down_sets(const Poset& p) {
  std::vector<PointSet> out;
  collect_closed_sets(p, false, out);
  return out;
}

const std::vector<Poset>& posets_of_size(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Poset>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) cache.emplace(0, std::vector<Poset>{Poset::from_covers({}, {})});
  for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
    cache.emplace(k, next_layer(cache.at(k - 1), {}));
  }
  return cache.at(n);
}

std::vector<Poset> posets_up_to(int max_n) {
  std::vector<Poset> out;
  for (int k = 0; k <= max_n; ++k) {
    const auto& layer = posets_of_size(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Poset> grow_posets(int max_n, const std::function<bool(const Poset&)>& keep) {
  std::vector<Poset> out;
  std::vector<Poset> layer{Poset::from_covers({}, {})};
  if (!keep(layer.front())) return out;
  out.push_back(layer.front());
  for (int k = 1; k <= max_n && !layer.empty(); ++k) {
    layer = next_layer(layer, keep);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace pcdl
