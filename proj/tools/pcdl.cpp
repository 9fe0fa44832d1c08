// pcdl: command-line workbench for finite pseudocomplemented distributive
// lattices and their dual p-spaces.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "pcdl/amalgamation.hpp"
#include "pcdl/congruence.hpp"
#include "pcdl/io.hpp"
#include "pcdl/parallel.hpp"
#include "pcdl/poset_enum.hpp"
#include "pcdl/qmodel.hpp"

using namespace pcdl;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

struct Globals {
  int jobs = 0;
  std::string format = "json";
  unsigned long long seed = 0;
};

Globals g;

int jobs() { return g.jobs > 0 ? g.jobs : default_jobs(); }

void print_text(const json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_structured() && !(it->is_array() && std::all_of(it->begin(), it->end(), [](const json& e) {
                                     return e.is_number() || e.is_boolean();
                                   }))) {
        out << pad << it.key() << ":\n";
        print_text(*it, indent + 2, out);
      } else {
        out << pad << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const json& e : j) {
      if (e.is_structured()) {
        out << pad << "-\n";
        print_text(e, indent + 2, out);
      } else {
        out << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

// Emits `j` in the chosen format; `dot` is used only for --format dot.
int emit(const json& j, const std::string& dot = {}) {
  if (g.format == "dot") {
    if (dot.empty()) {
      std::cerr << "pcdl: dot output is not available for this command\n";
      return kInputError;
    }
    std::cout << dot;
  } else if (g.format == "text") {
    print_text(j, 0, std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kOk;
}

json int_list(const std::vector<int>& v) { return json(v); }

std::string lattice_dot(const PcdLattice& a) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < a.size(); ++x) names.push_back(a.element_name(x));
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      if (x == y || !a.leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < a.size() && cover; ++z) {
        cover = !(z != x && z != y && a.leq(x, z) && a.leq(z, y));
      }
      if (cover) covers.emplace_back(x, y);
    }
  }
  return to_dot(Poset::from_covers(names, covers), "D");
}

int cmd_dual(const std::string& in) {
  const json doc = load_json_file(in);
  if (doc.contains("joins") || doc.contains("dual_of")) {
    const PcdLattice a = algebra_from_json(doc);
    json out;
    out["format"] = kFormatTag;
    out["kind"] = "dual_space";
    out["points"] = a.space().size();
    out["space"] = poset_to_json(a.space());
    return emit(out, to_dot(a.space(), "P"));
  }
  const PcdLattice a = make_pcdl(poset_from_json(doc));
  json out = algebra_to_json(a);
  out["size"] = a.size();
  return emit(out, lattice_dot(a));
}

int cmd_check_map(const std::string& in) {
  const OrderMap f = map_from_json(load_json_file(in));
  const MapProperties props = map_properties(f.source, f.target, f.assignment);
  json out;
  out["format"] = kFormatTag;
  out["class"] = to_string(classify_map(f));
  out["order_preserving"] = props.order_preserving;
  out["embedding"] = props.embedding;
  out["onto"] = props.onto;
  const auto v = props.order_preserving ? p_morphism_violation(f.source, f.target, f.assignment) : std::nullopt;
  const bool pm = props.order_preserving && !v;
  out["p_morphism"] = pm;
  if (v) out["violation"] = v->describe(f.source, f.target);
  if (pm) {
    // D(f): D(target) -> D(source) preserves *; onto duals give one-to-one homs
    out["dual_star_hom"] = {{"one_to_one", props.onto}, {"onto", props.embedding}};
  }
  emit(out);
  return pm ? kOk : kNegative;
}

int cmd_star_homs(const std::string& from, const std::string& to, bool onto) {
  const PcdLattice a = algebra_from_json(load_json_file(from));
  const PcdLattice b = algebra_from_json(load_json_file(to));
  const auto homs = star_homs(a, b, onto);
  json out;
  out["format"] = kFormatTag;
  out["count"] = homs.size();
  json list = json::array();
  for (const StarHom& h : homs) {
    json t = json::object();
    for (int x = 0; x < a.size(); ++x) t[a.element_name(x)] = b.element_name(h.table[static_cast<std::size_t>(x)]);
    list.push_back({{"table", t}, {"dual", assignment_to_json(b.space(), a.space(), h.dual)}});
  }
  out["homs"] = list;
  return emit(out);
}

int cmd_variety_index(const std::string& in) {
  const PcdLattice a = algebra_from_json(load_json_file(in));
  json out;
  out["format"] = kFormatTag;
  out["variety_index"] = variety_index(a).n;
  out["max_above_sizes"] = int_list(max_above_sizes(a.space()));
  return emit(out);
}

int cmd_congruences(const std::string& in) {
  const PcdLattice a = algebra_from_json(load_json_file(in));
  const Poset& p = a.space();
  json out;
  out["format"] = kFormatTag;
  const auto thetas = enumerate_congruences(p);
  out["count"] = thetas.size();
  json list = json::array();
  for (PointSet t : thetas) {
    list.push_back({{"dual", point_set_to_json(p, t)}, {"classes", congruence_relation(a, t).class_count()}});
  }
  out["congruences"] = list;
  out["subdirectly_irreducible"] = is_subdirectly_irreducible(p);
  return emit(out);
}

int cmd_quotient(const std::string& in, const std::string& theta) {
  const PcdLattice a = algebra_from_json(load_json_file(in));
  const PointSet t = point_set_from_json(a.space(), parse_json(theta, "--theta"));
  const Quotient q = quotient(a, t);
  json out = algebra_to_json(q.algebra);
  json proj = json::object();
  for (int x = 0; x < a.size(); ++x) {
    proj[a.element_name(x)] = q.algebra.element_name(q.projection[static_cast<std::size_t>(x)]);
  }
  out["projection"] = proj;
  return emit(out, lattice_dot(q.algebra));
}

int cmd_extensile(const std::string& in, int n, int bound) {
  const PcdLattice b = algebra_from_json(load_json_file(in));
  const ExtensileResult r = is_congruence_extensile_bounded(b, n, bound);
  json out;
  out["format"] = kFormatTag;
  out["outcome"] = to_string(r.outcome);
  out["bound"] = r.bound;
  out["extensions_checked"] = r.extensions_checked;
  if (r.extension) {
    out["witness"] = {{"extension_dual", poset_to_json(*r.extension)},
                      {"embedding_dual", assignment_to_json(*r.extension, b.space(), r.embedding_dual)},
                      {"theta", point_set_to_json(b.space(), r.theta)}};
  }
  emit(out);
  switch (r.outcome) {
    case ExtensileOutcome::yes: return kOk;
    case ExtensileOutcome::no_with_witness: return kNegative;
    case ExtensileOutcome::inconclusive: return kInconclusive;
  }
  return kOk;
}

json extension_json(const ExtensionResult& r, const Poset& pa, int n) {
  json o;
  o["outcome"] = to_string(r.outcome);
  o["bound"] = r.bound;
  o["extensions_checked"] = r.extensions_checked;
  o["lifts_checked"] = r.lifts_checked;
  if (r.witness) {
    const Poset vn = v_space(n);
    o["witness"] = {{"y", poset_to_json(r.witness->y)},
                    {"gamma", assignment_to_json(r.witness->y, pa, r.witness->gamma)},
                    {"alpha", assignment_to_json(vn, pa, r.witness->alpha)}};
  }
  return o;
}

int cmd_amalgam(const std::string& in, int n, bool oracle, int bound) {
  const PcdLattice a = algebra_from_json(load_json_file(in));
  const AmalgamationVerdict v = is_amalgamation_base_finite(a, n);
  json out;
  out["format"] = kFormatTag;
  out["is_base"] = v.is_base;
  out["forbidden_is"] = int_list(v.forbidden_is);
  json w = json::array();
  for (std::size_t k = 0; k < v.witnesses.size(); ++k) {
    w.push_back({{"i", v.forbidden_is[k]},
                 {"dual_embedding", assignment_to_json(v_space(v.forbidden_is[k]), a.space(), v.witnesses[k])}});
  }
  out["witnesses"] = w;
  int code = v.is_base ? kOk : kNegative;
  if (oracle) {
    if (bound < 1) bound = a.space().size() + 3;
    const ExtensionResult r = extension_property_bounded(a, n, bound, jobs());
    out["oracle"] = extension_json(r, a.space(), n);
    if (r.outcome == ExtensionOutcome::inconclusive) code = kInconclusive;
  }
  emit(out);
  return code;
}

int cmd_lift(const std::string& gamma_path, const std::string& alpha_path) {
  const OrderMap gamma = map_from_json(load_json_file(gamma_path));
  const OrderMap alpha = map_from_json(load_json_file(alpha_path));
  if (!(gamma.target == alpha.target)) throw ValidationError("gamma and alpha must share their target");
  const auto beta = lift_through(gamma.source, gamma.target, gamma.assignment, alpha.source, alpha.assignment);
  json out;
  out["format"] = kFormatTag;
  out["lift_exists"] = beta.has_value();
  if (beta) out["beta"] = assignment_to_json(alpha.source, gamma.source, *beta);
  emit(out);
  return beta ? kOk : kNegative;
}

json report_json(const Report& r) {
  json j;
  j["passed"] = r.all_ok();
  j["failures"] = r.failures();
  json list = json::array();
  for (const CheckEntry& e : r.entries) {
    json x = {{"check", e.check}, {"subject", e.subject}, {"ok", e.ok}};
    if (!e.detail.empty()) x["detail"] = e.detail;
    list.push_back(x);
  }
  j["checks"] = list;
  return j;
}

json lift_json(const QModel& m, const LiftCheckReport& r) {
  json j;
  j["bound"] = r.bound;
  j["extensions"] = r.extensions;
  j["lifts"] = r.lifts;
  json cases = json::object();
  for (LiftCase c : {LiftCase::maximal, LiftCase::finite_george, LiftCase::limit_two, LiftCase::limit_three,
                     LiftCase::limit_failed}) {
    cases[to_string(c)] = r.count(c);
  }
  j["cases"] = cases;
  j["all_cases_covered"] = r.all_cases_covered();
  j["phi_lifts"] = r.phi_lifts;
  j["phi_failures"] = r.phi_failures;
  json fails = json::array();
  const Poset v3 = v_space(3);
  for (const LiftFailure& f : r.failures) {
    fails.push_back({{"source", f.source},
                     {"component", f.component},
                     {"y_points", f.y.size()},
                     {"alpha", assignment_to_json(v3, m.q, f.alpha)},
                     {"gamma", assignment_to_json(f.y, m.q, f.gamma)}});
  }
  j["failures"] = fails;
  return j;
}

std::string q_model_dot(const QModel& m) {
  std::ostringstream o;
  o << "digraph QModel {\n  rankdir=BT;\n";
  auto cluster = [&](const Poset& p, const char* name, const char* prefix) {
    o << "  subgraph cluster_" << name << " {\n    label=\"" << name << "\";\n";
    for (int i = 0; i < p.size(); ++i) o << "    " << prefix << i << " [label=\"" << p.label(i) << "\"];\n";
    for (auto [lo, hi] : p.covers()) o << "    " << prefix << lo << " -> " << prefix << hi << ";\n";
    o << "  }\n";
  };
  cluster(m.q_tilde, "q_tilde", "t");
  cluster(m.q, "q", "q");
  for (int t = 0; t < m.q_tilde.size(); ++t) {
    o << "  t" << t << " -> q" << m.phi[static_cast<std::size_t>(t)] << " [style=dashed, constraint=false];\n";
  }
  o << "}\n";
  return o.str();
}

int cmd_q_model(int N, int m, const std::string& verify, int bound, bool dot) {
  const QModel model = build_q_model(N, m);
  json out;
  out["format"] = kFormatTag;
  out["N"] = N;
  out["m"] = m;
  out["q_tilde_points"] = model.q_tilde.size();
  out["q_points"] = model.q.size();
  out["variety_index"] = variety_index(model.q).n;
  bool ok = true;
  const bool all = verify == "all";
  if (all || verify == "phi") {
    const Report r = verify_phi(model);
    ok = ok && r.all_ok();
    out["phi"] = report_json(r);
  }
  if (all || verify == "separation") {
    const Report r = verify_separation_lemmas(model);
    ok = ok && r.all_ok();
    out["separation"] = report_json(r);
  }
  if (all || verify == "lift") {
    const LiftCheckReport r = lift_check(model, bound, jobs());
    ok = ok && r.failures.empty();
    out["lift"] = lift_json(model, r);
  }
  if (all || verify == "divergence") {
    const DivergenceReport d = divergence_report(model, bound, jobs());
    out["divergence"] = {{"forbidden_is", int_list(d.forbidden_is)},
                         {"finite_criterion_base", d.finite_criterion_base},
                         {"divergence_shown", d.divergence_shown},
                         {"summary", d.lines}};
    if (m >= 1) ok = ok && d.divergence_shown;
  }
  if (dot) {
    std::cout << q_model_dot(model);
  } else {
    emit(out, q_model_dot(model));
  }
  return ok ? kOk : kNegative;
}

int cmd_catalog(int max_points, int n, bool oracle, int bound) {
  if (max_points < 0 || max_points > 6) throw ValidationError("catalog: --max-points must be between 0 and 6");
  json rows = json::array();
  std::ostringstream text;
  text << "size  index  M-sizes       finite  oracle\n";
  for (const Poset& p : posets_of_size(max_points)) {
    const PcdLattice a = make_pcdl(p);
    json row;
    std::vector<int> ms = max_above_sizes(p);
    std::sort(ms.begin(), ms.end());
    const int idx = variety_index(p).n;
    row["dual"] = poset_to_json(p);
    row["algebra_size"] = a.size();
    row["variety_index"] = idx;
    row["m_sizes"] = int_list(ms);
    std::string finite = "-";
    std::string orc = "-";
    if (variety_index(p).within(n)) {
      const AmalgamationVerdict v = is_amalgamation_base_finite(a, n);
      row["is_base"] = v.is_base;
      row["forbidden_is"] = int_list(v.forbidden_is);
      finite = v.is_base ? "base" : "no";
      if (oracle) {
        const ExtensionResult r = extension_property_bounded(a, n, bound > 0 ? bound : p.size() + 3, jobs());
        row["oracle"] = to_string(r.outcome);
        orc = to_string(r.outcome);
      }
    } else {
      row["is_base"] = nullptr;
      finite = "not in B_" + std::to_string(n);
    }
    rows.push_back(row);
    std::string msz;
    for (int k : ms) msz += std::to_string(k);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%4d  %5d  %-12s  %-6s  %s\n", a.size(), idx, msz.c_str(), finite.c_str(),
                  orc.c_str());
    text << buf;
  }
  json out;
  out["format"] = kFormatTag;
  out["points"] = max_points;
  out["n"] = n;
  out["rows"] = rows;
  out["count"] = rows.size();
  if (g.format == "text") {
    std::cout << text.str();
    return kOk;
  }
  return emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite pseudocomplemented distributive lattices and their dual spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", g.jobs, "worker threads (default: PCDL_JOBS or 1)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--seed", g.seed, "seed for sampled runs; recorded, never drawn from the clock");

  std::string in;
  std::string from;
  std::string to;
  std::string theta;
  std::string gamma_path;
  std::string alpha_path;
  std::string verify = "all";
  bool onto = false;
  bool oracle = false;
  bool dot = false;
  int n = 3;
  int bound = 0;
  int N = 0;
  int m = 0;
  int max_points = 4;

  auto* dual = app.add_subcommand("dual", "D(P) of a poset, or P(L) of a lattice");
  dual->add_option("--in", in, "poset or lattice JSON")->required();
  auto* chk = app.add_subcommand("check-pspace-map", "classify a map and test the p-morphism condition");
  chk->add_option("--in", in, "map JSON")->required();
  auto* sh = app.add_subcommand("star-homs", "enumerate *-homomorphisms");
  sh->add_option("--from", from)->required();
  sh->add_option("--to", to)->required();
  sh->add_flag("--onto", onto);
  auto* vi = app.add_subcommand("variety-index", "least n with A in B_n");
  vi->add_option("--in", in)->required();
  auto* cg = app.add_subcommand("congruences", "dual congruences");
  cg->add_option("--in", in)->required();
  auto* qt = app.add_subcommand("quotient", "quotient by a dual congruence");
  qt->add_option("--in", in)->required();
  qt->add_option("--theta", theta, "JSON list of point labels")->required();
  auto* ex = app.add_subcommand("extensile", "bounded congruence-extension search");
  ex->add_option("--in", in)->required();
  ex->add_option("--n", n)->check(CLI::PositiveNumber);
  ex->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);
  auto* am = app.add_subcommand("amalgam", "amalgamation-base verdict");
  am->add_option("--in", in)->required();
  am->add_option("--n", n)->check(CLI::PositiveNumber);
  am->add_flag("--oracle", oracle, "also run the bounded extension search");
  am->add_option("--bound", bound, "oracle bound (default |P(A)| + 3)")->check(CLI::PositiveNumber);
  auto* lf = app.add_subcommand("lift", "lift alpha through a surjective gamma");
  lf->add_option("--gamma", gamma_path, "map JSON Y -> P")->required();
  lf->add_option("--alpha", alpha_path, "map JSON S -> P")->required();
  auto* qm = app.add_subcommand("q-model", "finite collapse models");
  qm->add_option("--N", N)->check(CLI::NonNegativeNumber);
  qm->add_option("--m", m)->check(CLI::NonNegativeNumber);
  qm->add_option("--verify", verify)->check(CLI::IsMember({"phi", "separation", "lift", "divergence", "all"}));
  qm->add_option("--bound", bound)->check(CLI::PositiveNumber);
  qm->add_flag("--dot", dot, "Hasse diagrams of both posets and the phi arrows");
  auto* cat = app.add_subcommand("catalog", "one row per poset of the given size");
  cat->add_option("--max-points", max_points)->check(CLI::Range(0, 6));
  cat->add_option("--n", n)->check(CLI::PositiveNumber);
  cat->add_flag("--oracle", oracle);
  cat->add_option("--bound", bound)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*dual) return cmd_dual(in);
    if (*chk) return cmd_check_map(in);
    if (*sh) return cmd_star_homs(from, to, onto);
    if (*vi) return cmd_variety_index(in);
    if (*cg) return cmd_congruences(in);
    if (*qt) return cmd_quotient(in, theta);
    if (*ex) return cmd_extensile(in, n, bound);
    if (*am) return cmd_amalgam(in, n, oracle, bound);
    if (*lf) return cmd_lift(gamma_path, alpha_path);
    if (*qm) return cmd_q_model(N, m, verify, bound > 0 ? bound : 6, dot);
    if (*cat) return cmd_catalog(max_points, n, oracle, bound);
  } catch (const Error& e) {
    std::cerr << "pcdl: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "pcdl: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
