#ifndef PCDL_QMODEL_HPP
#define PCDL_QMODEL_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "pcdl/pcdl.hpp"

namespace pcdl {

enum class Role { george, a, b, c };

const char* to_string(Role r);

/// Finite stage of the collapse construction: N "finite-index" components and
/// m "limit" components. Every component of q_tilde is a copy of V_3 with
/// bottom George under a, b, c. In q the finite-index components are copied
/// unchanged and each limit component loses c, which phi sends to a.
///
/// Components are numbered 0..N-1 (finite index) then N..N+m-1 (limit).
struct QModel {
  int N = 0;
  int m = 0;
  Poset q_tilde;
  Poset q;
  Assignment phi;  // q_tilde -> q
  std::vector<int> tilde_component;
  std::vector<Role> tilde_role;
  std::vector<int> q_component;
  std::vector<Role> q_role;

  int components() const { return N + m; }
  bool is_limit(int x) const { return x >= N; }
  /// Point of q with the given component and role (c resolves to a on a
  /// limit component).
  int q_point(int x, Role r) const;
  int tilde_point(int x, Role r) const;
  PointSet q_component_points(int x) const;
  PointSet tilde_component_points(int x) const;
};

/// Throws ValidationError when N + m == 0 or when a model invariant fails.
QModel build_q_model(int N, int m);

struct CheckEntry {
  std::string check;
  std::string subject;
  bool ok = true;
  std::string detail;
};

struct Report {
  std::vector<CheckEntry> entries;

  bool all_ok() const;
  std::size_t failures() const;
  void add(std::string check, std::string subject, bool ok, std::string detail = {});
};

/// Surjectivity, the M-condition at every point of q_tilde, order-embedding on
/// each finite-index component and the c -> a collapse on limit components.
Report verify_phi(const QModel& model);

/// Finite forms of the separation lemmas and of the down-set formula
/// down(R) = R + {George_x : Q_x meets R} for every up-set R of q.
Report verify_separation_lemmas(const QModel& model);

enum class LiftCase { maximal, finite_george, limit_two, limit_three, limit_failed };

const char* to_string(LiftCase c);

struct LiftFailure {
  int component = 0;
  std::string source;  // "phi" or "local"
  Poset y;             // the full Y
  Assignment gamma;    // Y -> q
  Assignment alpha;    // V_3 -> q
};

struct LiftCheckReport {
  int bound = 0;
  std::size_t extensions = 0;  // (Y, gamma) pairs, counting the phi check
  std::size_t lifts = 0;
  std::array<std::size_t, 5> case_counts{};  // indexed by LiftCase
  std::vector<LiftFailure> failures;
  std::size_t phi_lifts = 0;
  std::size_t phi_failures = 0;

  std::size_t count(LiftCase c) const { return case_counts[static_cast<std::size_t>(c)]; }
  bool all_cases_covered() const;
};

/// Lifts of every p-morphism alpha: V_3 -> q through surjective p-morphisms
/// gamma: Y -> q with D(Y) in B_3.
///
/// Since V_3 is connected, alpha lands in one component Q_x and a lift only
/// sees gamma^{-1}(Q_x). The search therefore runs over Y = Y_x + (q minus
/// Q_x), where Y_x ranges over posets with |Y_x| <= bound mapping onto Q_x and
/// the rest of q maps identically; the lift is computed on the whole Y. The
/// model's own phi: q_tilde -> q is checked as an additional gamma. Each lift
/// is classified by where alpha sends the bottom of V_3 and by |M(beta(bottom))|.
LiftCheckReport lift_check(const QModel& model, int bound, int jobs = 1,
                                    std::size_t max_failures_kept = 16);

struct DivergenceReport {
  std::vector<int> forbidden_is;  // of D(q) in B_3
  bool finite_criterion_base = true;
  LiftCheckReport lifts;
  bool divergence_shown = false;  // forbidden image present and no lift failed
  std::vector<std::string> lines;
};

DivergenceReport divergence_report(const QModel& model, int bound, int jobs = 1);

}  // namespace pcdl

#endif  // PCDL_QMODEL_HPP
