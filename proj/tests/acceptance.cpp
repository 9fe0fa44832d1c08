// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "pcdl/amalgamation.hpp"
#include "pcdl/congruence.hpp"
#include "pcdl/duality.hpp"
#include "pcdl/pcdl.hpp"
#include "pcdl/poset_enum.hpp"
#include "pcdl/qmodel.hpp"

using namespace pcdl;

namespace {

// Pinned tolerances and budgets.
constexpr double kMaxInconclusiveFraction = 0.10;
constexpr int kOracleSlack = 3;        // oracle bound = |P(A)| + 3
constexpr int kLiftBound = 6;          // local fibre bound for the q-model
constexpr int kMaxAlgebraSize = 9;     // congruence brute force
constexpr int kRoundTripPoints = 6;
constexpr int kSiPoints = 6;

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

Outcome round_trip() {
  std::size_t checked = 0;
  std::ostringstream bad;
  for (int n = 0; n <= kRoundTripPoints; ++n) {
    for (const Poset& p : posets_of_size(n)) {
      ++checked;
      const Poset back = dual_space(dual_lattice(p));
      if (!is_isomorphic(back, p) || (n <= 5 && !oracle::isomorphic(back, p))) bad << " " << p.size() << "pt";
    }
  }
  for (int n = 0; n <= 5; ++n) {
    if (!oracle::isomorphic(dual_space(boolean_plus_top(n)), v_space(n))) bad << " P(2^" << n << "+1)";
  }
  Outcome o;
  o.pass = bad.str().empty();
  o.detail = std::to_string(checked) + " posets, P(2^n+1) = V_n for n <= 5" + (o.pass ? "" : "; failed:" + bad.str());
  return o;
}

Outcome star_and_dictionary() {
  std::size_t algebras = 0;
  std::size_t bad_axiom = 0;
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : posets_of_size(n)) {
      ++algebras;
      const PcdLattice a = make_pcdl(p);
      // x <= y* iff x meet y = 0, on the up-set masks
      for (int x = 0; x < a.size(); ++x) {
        for (int y = 0; y < a.size(); ++y) {
          const PointSet ux = a.element(x);
          const bool below = (ux & ~a.element(a.star(y))) == 0;
          if (below != ((ux & a.element(y)) == 0)) ++bad_axiom;
        }
      }
    }
  }
  std::vector<Poset> small;
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : posets_of_size(n)) small.push_back(p);
  }
  std::size_t maps = 0;
  std::size_t bad_dict = 0;
  for (const Poset& s : small) {
    for (const Poset& t : small) {
      const PcdLattice ds = make_pcdl(s);
      const PcdLattice dt = make_pcdl(t);
      oracle::for_each_function(s.size(), t.size(), [&](const std::vector<int>& f) {
        if (!oracle::order_preserving(s, t, f)) return;
        ++maps;
        const UpSetHom h = dual_of_order_map(OrderMap::make(s, t, f));
        bool preserves = true;
        for (int u = 0; u < dt.size(); ++u) {
          preserves = preserves &&
                      h.table[static_cast<std::size_t>(dt.star(u))] == ds.star(h.table[static_cast<std::size_t>(u)]);
        }
        const bool pm = oracle::p_morphism(s, t, f);
        if (preserves != pm || is_p_morphism(s, t, f) != pm) ++bad_dict;
      });
    }
  }
  Outcome o;
  o.pass = bad_axiom == 0 && bad_dict == 0;
  o.detail = std::to_string(algebras) + " algebras (" + std::to_string(bad_axiom) + " axiom violations), " +
             std::to_string(maps) + " order maps (" + std::to_string(bad_dict) + " dictionary mismatches)";
  return o;
}

Outcome congruence_counts() {
  const std::vector<Poset> duals =
      grow_posets(kMaxAlgebraSize, [](const Poset& p) { return dual_lattice(p).size() <= kMaxAlgebraSize; });
  std::size_t bad = 0;
  for (const Poset& p : duals) {
    if (p.size() == 0) continue;  // the trivial algebra
    if (enumerate_congruences(p).size() != oracle::congruence_count(oracle::algebra_of(p))) ++bad;
  }
  const std::size_t three = enumerate_congruences(chain(2)).size();
  const std::size_t b2 = enumerate_congruences(v_space(2)).size();
  const std::size_t three_oracle = oracle::congruence_count(oracle::algebra_of(chain(2)));
  const std::size_t b2_oracle = oracle::congruence_count(oracle::algebra_of(v_space(2)));
  Outcome o;
  o.pass = bad == 0 && three == 3 && b2 == 5 && three_oracle == 3 && b2_oracle == 5;
  o.detail = std::to_string(duals.size() - 1) + " algebras, " + std::to_string(bad) + " mismatches; 3-chain " +
             std::to_string(three) + ", B_2+ " + std::to_string(b2);
  return o;
}

Outcome finite_vs_oracle() {
  std::size_t instances = 0;
  std::size_t inconclusive = 0;
  std::size_t disagree = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : posets_of_size(n)) {
      if (!variety_index(p).within(3)) continue;
      ++instances;
      const PcdLattice a = make_pcdl(p);
      const ExtensionResult r = extension_property_bounded(a, 3, p.size() + kOracleSlack, jobs());
      if (r.outcome == ExtensionOutcome::inconclusive) {
        ++inconclusive;
        continue;
      }
      if (is_amalgamation_base_finite(a, 3).is_base != (r.outcome == ExtensionOutcome::holds)) ++disagree;
    }
  }
  const double frac = instances ? static_cast<double>(inconclusive) / static_cast<double>(instances) : 0.0;
  Outcome o;
  o.pass = disagree == 0 && frac <= kMaxInconclusiveFraction;
  o.detail = std::to_string(instances) + " algebras, " + std::to_string(disagree) + " disagreements, " +
             std::to_string(inconclusive) + " inconclusive";
  return o;
}

Outcome q_models() {
  std::size_t models = 0;
  std::size_t check_failures = 0;
  std::size_t lift_failures = 0;
  std::size_t phi_failures = 0;
  std::size_t lifts = 0;
  std::size_t uncovered = 0;
  for (int total = 1; total <= 3; ++total) {
    for (int m = 0; m <= total; ++m) {
      const int big_n = total - m;
      const QModel q = build_q_model(big_n, m);
      ++models;
      check_failures += verify_phi(q).failures() + verify_separation_lemmas(q).failures();
      const LiftCheckReport r = lift_check(q, kLiftBound, jobs(), 0);
      lifts += r.lifts;
      lift_failures += r.count(LiftCase::limit_failed);
      phi_failures += r.phi_failures;
      if (big_n >= 1 && m >= 1 && !r.all_cases_covered()) ++uncovered;
    }
  }
  Outcome o;
  o.pass = check_failures == 0 && lift_failures == 0 && uncovered == 0;
  o.detail = std::to_string(models) + " models, " + std::to_string(check_failures) + " phi/separation failures, " +
             std::to_string(lift_failures) + " of " + std::to_string(lifts) + " lifts failed (" +
             std::to_string(phi_failures) + " through phi), " + std::to_string(uncovered) + " models missing a case";
  return o;
}

Outcome divergence() {
  const DivergenceReport d = divergence_report(build_q_model(2, 1), kLiftBound, jobs());
  std::string fi;
  for (int i : d.forbidden_is) fi += (fi.empty() ? "" : ",") + std::to_string(i);
  const std::size_t failed = d.lifts.count(LiftCase::limit_failed);
  Outcome o;
  o.pass = d.forbidden_is == std::vector<int>{2} && failed == 0;
  o.detail = "forbidden_is [" + fi + "], " + std::to_string(failed) + " of " + std::to_string(d.lifts.lifts) +
             " bounded lifts failed";
  return o;
}

// Minimal nonempty sets closed under "a maximal point brings everything below
// it", found by testing every subset.
std::size_t minimal_dual_congruences(const Poset& p) {
  const std::uint64_t n = std::uint64_t{1} << p.size();
  std::vector<std::uint64_t> closed;
  for (std::uint64_t s = 1; s < n; ++s) {
    bool ok = true;
    for (int t = 0; t < p.size() && ok; ++t) {
      if (!((s >> t) & 1U)) continue;
      const auto above = oracle::maxima_above(p, t);
      if (above.size() != 1 || above[0] != t) continue;  // t not maximal
      for (int x = 0; x < p.size(); ++x) ok = ok && (!p.leq(x, t) || ((s >> x) & 1U));
    }
    if (ok) closed.push_back(s);
  }
  std::size_t minimal = 0;
  for (std::uint64_t s : closed) {
    bool is_min = true;
    for (std::uint64_t t : closed) is_min = is_min && (t == s || (t & s) != t);
    minimal += is_min ? 1 : 0;
  }
  return minimal;
}

Outcome si_classification() {
  std::size_t si = 0;
  std::size_t bad = 0;
  std::vector<int> seen;
  for (int n = 1; n <= kSiPoints; ++n) {
    for (const Poset& p : posets_of_size(n)) {
      const bool lib = is_subdirectly_irreducible(p);
      if (lib != (minimal_dual_congruences(p) == 1)) ++bad;
      if (!lib) continue;
      ++si;
      bool matched = false;
      for (int i = 0; i <= kSiPoints && !matched; ++i) matched = is_isomorphic(p, v_space(i));
      if (!matched) ++bad;
      seen.push_back(p.size() - 1);
    }
  }
  std::string which;
  for (int i : seen) which += (which.empty() ? "" : ",") + std::to_string(i);
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(si) + " SI algebras, duals V_i for i in {" + which + "}; " + std::to_string(bad) +
             " mismatches";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "duality round trip", 10, round_trip},
      {2, "star axiom and dictionary", 60, star_and_dictionary},
      {3, "congruence counts", 30, congruence_counts},
      {4, "finite criterion vs oracle", 600, finite_vs_oracle},
      {5, "q-model verification", 600, q_models},
      {6, "divergence (2,1)", 300, divergence},
      {7, "SI classification", 60, si_classification},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s [%.2fs of %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
