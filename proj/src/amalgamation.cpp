#include "pcdl/amalgamation.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

#include "pcdl/parallel.hpp"
#include "pcdl/poset_enum.hpp"

namespace pcdl {

namespace {

void require_in_variety(const PcdLattice& a, int n, const char* who) {
  if (!variety_index(a).within(n)) {
    throw ValidationError(std::string(who) + ": algebra is not in B_" + std::to_string(n) + " (variety index " +
                          std::to_string(variety_index(a).n) + ")");
  }
}

void require_p_morphism(const Poset& s, const Poset& t, const Assignment& f, const char* what, bool onto) {
  if (f.size() != static_cast<std::size_t>(s.size())) throw ValidationError(std::string(what) + " is not total");
  for (int v : f) {
    if (v < 0 || v >= t.size()) throw ValidationError(std::string(what) + " lands outside its target");
  }
  if (auto v = p_morphism_violation(s, t, f)) {
    throw ValidationError(std::string(what) + " is not a p-morphism: " + v->describe(s, t));
  }
  if (onto && image(f, s.all()) != t.all()) throw ValidationError(std::string(what) + " is not onto");
}

}  // namespace

std::vector<int> forbidden_images(const PcdLattice& a, int n) {
  require_in_variety(a, n, "forbidden_images");
  std::vector<int> out;
  for (int i = 2; i < n; ++i) {
    if (onto_star_hom_exists(a, i)) out.push_back(i);
  }
  return out;
}

AmalgamationVerdict is_amalgamation_base_finite(const PcdLattice& a, int n) {
  AmalgamationVerdict v;
  v.forbidden_is = forbidden_images(a, n);
  v.is_base = v.forbidden_is.empty();
  for (int i : v.forbidden_is) v.witnesses.push_back(*onto_star_hom_witness(a.space(), i));
  return v;
}

std::optional<Assignment> find_lift(const Poset& y, const Assignment& gamma, const Poset& source,
                                    const Assignment& alpha) {
  PMorphismSearch opts;
  opts.allowed.reserve(static_cast<std::size_t>(source.size()));
  for (int s = 0; s < source.size(); ++s) {
    PointSet fibre = 0;
    for (int c = 0; c < y.size(); ++c) {
      if (gamma[static_cast<std::size_t>(c)] == alpha[static_cast<std::size_t>(s)]) fibre |= bit(c);
    }
    if (fibre == 0) return std::nullopt;
    opts.allowed.push_back(fibre);
  }
  std::optional<Assignment> found;
  for_each_p_morphism(source, y, opts, [&](const Assignment& beta) {
    found = beta;
    return false;
  });
  return found;
}

std::optional<Assignment> lift_through(const Poset& y, const Poset& p, const Assignment& gamma,
                                       const Poset& source, const Assignment& alpha) {
  require_p_morphism(y, p, gamma, "gamma", true);
  require_p_morphism(source, p, alpha, "alpha", false);
  auto beta = find_lift(y, gamma, source, alpha);
  if (beta) {
    if (!is_p_morphism(source, y, *beta) || compose(gamma, *beta) != alpha) {
      throw Error("internal: lift failed re-verification");
    }
  }
  return beta;
}

const char* to_string(ExtensionOutcome o) {
  switch (o) {
    case ExtensionOutcome::holds: return "holds";
    case ExtensionOutcome::fails_with_witness: return "fails_with_witness";
    case ExtensionOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

ExtensionResult extension_property_bounded(const PcdLattice& a, int n, int bound, int jobs,
                                           std::size_t max_extensions) {
  require_in_variety(a, n, "extension_property_bounded");
  const Poset& pa = a.space();
  const Poset vn = v_space(n);
  const std::vector<Assignment> alphas = p_morphisms(vn, pa);

  std::vector<const Poset*> targets;
  for (int s = std::max(pa.size(), 1); s <= bound; ++s) {
    for (const Poset& y : posets_of_size(s)) {
      if (variety_index(y).within(n)) targets.push_back(&y);
    }
  }

  struct TaskResult {
    std::optional<ExtensionFailure> failure;
    std::size_t extensions = 0;
    std::size_t lifts = 0;
  };
  std::vector<TaskResult> results(targets.size());
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> extensions{0};
  std::atomic<bool> over_budget{false};

  parallel_for(targets.size(), jobs, [&](std::size_t t) {
    if (t > first_failure.load() || over_budget.load()) return;
    const Poset& y = *targets[t];
    TaskResult& r = results[t];
    for_each_p_morphism(y, pa, {.surjective = true}, [&](const Assignment& gamma) {
      if (t > first_failure.load()) return false;
      if (extensions.fetch_add(1) >= max_extensions) {
        over_budget = true;
        return false;
      }
      ++r.extensions;
      for (const Assignment& alpha : alphas) {
        ++r.lifts;
        if (!find_lift(y, gamma, vn, alpha)) {
          r.failure = ExtensionFailure{y, gamma, alpha};
          std::size_t cur = first_failure.load();
          while (t < cur && !first_failure.compare_exchange_weak(cur, t)) {
          }
          return false;
        }
      }
      return true;
    });
  });

  ExtensionResult res;
  res.bound = bound;
  for (std::size_t t = 0; t < results.size(); ++t) {
    res.extensions_checked += results[t].extensions;
    res.lifts_checked += results[t].lifts;
    if (!res.witness && results[t].failure) res.witness = results[t].failure;
  }
  if (res.witness) {
    res.outcome = ExtensionOutcome::fails_with_witness;
  } else if (over_budget) {
    res.outcome = ExtensionOutcome::inconclusive;
  }
  return res;
}

std::vector<Assignment> embeddings(const PcdLattice& a, const PcdLattice& b) {
  return p_morphisms(b.space(), a.space(), {.surjective = true});
}

SeparationResult amalgamate_or_separate(const PcdLattice& a, const PcdLattice& b0, const PcdLattice& b1,
                                        const Assignment& h0, const Assignment& h1, int n) {
  require_in_variety(a, n, "amalgamate_or_separate");
  require_in_variety(b0, n, "amalgamate_or_separate");
  require_in_variety(b1, n, "amalgamate_or_separate");
  require_p_morphism(b0.space(), a.space(), h0, "embedding dual h0", true);
  require_p_morphism(b1.space(), a.space(), h1, "embedding dual h1", true);

  const Poset vn = v_space(n);
  const PcdLattice* sides[2] = {&b0, &b1};
  const Assignment* duals[2] = {&h0, &h1};
  std::vector<Assignment> homs[2] = {p_morphisms(vn, b0.space()), p_morphisms(vn, b1.space())};

  SeparationResult res;
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    std::vector<Assignment> reachable;
    for (const Assignment& g : homs[j]) reachable.push_back(compose(*duals[j], g));
    std::sort(reachable.begin(), reachable.end());
    // points of P(B_i) seen by some separating candidate that agrees on A
    PointSet seen = 0;
    for (const Assignment& beta : homs[i]) {
      if (std::binary_search(reachable.begin(), reachable.end(), compose(*duals[i], beta))) {
        seen |= image(beta, vn.all());
      }
    }
    const PcdLattice& b = *sides[i];
    for (int x = 0; x < b.size(); ++x) {
      for (int y = x + 1; y < b.size(); ++y) {
        ++res.pairs_checked;
        if (((b.element(x) ^ b.element(y)) & seen) == 0) {
          res.amalgamable = false;
          res.failure = SeparationFailure{i, x, y};
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace pcdl
