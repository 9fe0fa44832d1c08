#include "pcdl/io.hpp"

#include <fstream>
#include <sstream>

namespace pcdl {

namespace {

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

void check_format(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find("format");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != kFormatTag)) {
    bad(where + ".format", std::string("unsupported format tag, expected \"") + kFormatTag + "\"");
  }
}

int point_ref(const std::vector<std::string>& labels, const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    const auto i = v.get<long long>();
    if (i < 0 || i >= static_cast<long long>(labels.size())) bad(where, "index out of range");
    return static_cast<int>(i);
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == s) return static_cast<int>(i);
    }
    bad(where, "unknown label \"" + s + "\"");
  }
  bad(where, "expected a label or an index");
}

std::vector<std::string> label_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string()) {
      out.push_back(j[i].get<std::string>());
    } else if (j[i].is_number_integer()) {
      out.push_back(std::to_string(j[i].get<long long>()));
    } else {
      bad(where + "[" + std::to_string(i) + "]", "expected a string label");
    }
  }
  return out;
}

std::vector<std::vector<int>> table(const json& j, const std::vector<std::string>& labels, const std::string& where) {
  if (!j.is_array() || j.size() != labels.size()) bad(where, "expected a square table over the elements");
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != labels.size()) bad(rw, "row has the wrong length");
    std::vector<int> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) row.push_back(point_ref(labels, j[r][c], rw + "[" + std::to_string(c) + "]"));
    out.push_back(std::move(row));
  }
  return out;
}

Poset poset_at(const json& j, const std::string& where) {
  check_format(j, where);
  std::vector<std::string> labels = label_list(field(j, "elements", where), where + ".elements");
  if (labels.size() > static_cast<std::size_t>(kMaxPoints)) {
    throw SizeError(where + ": more than " + std::to_string(kMaxPoints) + " points");
  }
  std::vector<std::pair<int, int>> covers;
  if (auto it = j.find("covers"); it != j.end()) {
    if (!it->is_array()) bad(where + ".covers", "expected an array of pairs");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string cw = where + ".covers[" + std::to_string(i) + "]";
      const json& pr = (*it)[i];
      if (!pr.is_array() || pr.size() != 2) bad(cw, "expected [lower, upper]");
      covers.emplace_back(point_ref(labels, pr[0], cw + "[0]"), point_ref(labels, pr[1], cw + "[1]"));
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

}  // namespace

json parse_json(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto k = msg.find("parse error"); k != std::string::npos) msg = msg.substr(k);
    throw ParseError(origin + ":" + location(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON (" + msg + ")");
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Poset poset_from_json(const json& j) { return poset_at(j, "$"); }

json poset_to_json(const Poset& p) {
  json j;
  j["format"] = kFormatTag;
  j["elements"] = p.labels();
  json covers = json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({p.label(lo), p.label(hi)});
  j["covers"] = covers;
  return j;
}

PcdLattice algebra_from_json(const json& j) {
  check_format(j, "$");
  if (j.contains("dual_of")) return make_pcdl(poset_at(j["dual_of"], "$.dual_of"));
  if (j.contains("joins") || j.contains("meets")) {
    std::vector<std::string> labels = label_list(field(j, "elements", "$"), "$.elements");
    if (labels.size() > static_cast<std::size_t>(kMaxPoints)) throw SizeError("$: lattice tables limited to 64 elements");
    auto joins = table(field(j, "joins", "$"), labels, "$.joins");
    auto meets = table(field(j, "meets", "$"), labels, "$.meets");
    return pcdl_from_lattice(AbstractLattice::from_tables(std::move(labels), std::move(joins), std::move(meets)));
  }
  return make_pcdl(poset_at(j, "$"));
}

json algebra_to_json(const PcdLattice& a) {
  json j;
  j["format"] = kFormatTag;
  std::vector<std::string> names;
  for (int i = 0; i < a.size(); ++i) names.push_back(a.element_name(i));
  j["elements"] = names;
  json joins = json::array();
  json meets = json::array();
  for (int x = 0; x < a.size(); ++x) {
    json jr = json::array();
    json mr = json::array();
    for (int y = 0; y < a.size(); ++y) {
      jr.push_back(a.join(x, y));
      mr.push_back(a.meet(x, y));
    }
    joins.push_back(jr);
    meets.push_back(mr);
  }
  j["joins"] = joins;
  j["meets"] = meets;
  j["star"] = a.star_table();
  j["dual_of"] = poset_to_json(a.space());
  return j;
}

OrderMap map_from_json(const json& j) {
  check_format(j, "$");
  Poset source = poset_at(field(j, "source", "$"), "$.source");
  Poset target = poset_at(field(j, "target", "$"), "$.target");
  const json& a = field(j, "assignment", "$");
  Assignment f(static_cast<std::size_t>(source.size()), -1);
  if (a.is_array()) {
    if (a.size() != f.size()) bad("$.assignment", "expected one entry per source point");
    for (std::size_t i = 0; i < a.size(); ++i) {
      f[i] = point_ref(target.labels(), a[i], "$.assignment[" + std::to_string(i) + "]");
    }
  } else if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      const int s = point_ref(source.labels(), json(it.key()), "$.assignment");
      f[static_cast<std::size_t>(s)] = point_ref(target.labels(), it.value(), "$.assignment." + it.key());
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0) bad("$.assignment", "no image for \"" + source.label(static_cast<int>(i)) + "\"");
    }
  } else {
    bad("$.assignment", "expected an array or an object");
  }
  return OrderMap::make(std::move(source), std::move(target), std::move(f));
}

json assignment_to_json(const Poset& source, const Poset& target, const Assignment& f) {
  json j = json::object();
  for (int i = 0; i < source.size(); ++i) j[source.label(i)] = target.label(f[static_cast<std::size_t>(i)]);
  return j;
}

json map_to_json(const OrderMap& f) {
  json j;
  j["format"] = kFormatTag;
  j["source"] = poset_to_json(f.source);
  j["target"] = poset_to_json(f.target);
  j["assignment"] = assignment_to_json(f.source, f.target, f.assignment);
  return j;
}

json point_set_to_json(const Poset& p, PointSet s) {
  json j = json::array();
  for_each_point(s, [&](int i) { j.push_back(p.label(i)); });
  return j;
}

PointSet point_set_from_json(const Poset& p, const json& j) {
  if (!j.is_array()) bad("set", "expected an array of labels");
  PointSet s = 0;
  for (std::size_t i = 0; i < j.size(); ++i) s |= bit(point_ref(p.labels(), j[i], "set[" + std::to_string(i) + "]"));
  return s;
}

}  // namespace pcdl
