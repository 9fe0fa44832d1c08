#ifndef PCDL_IO_HPP
#define PCDL_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "pcdl/pcdl.hpp"

namespace pcdl {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "pcdl/1";

// Malformed JSON or a document of the wrong shape. The message carries the
// file name and line:column when known, or the JSON path of the bad field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reads and parses a JSON file.
json load_json_file(const std::string& path);
json parse_json(std::string_view text, const std::string& origin = "<input>");

/// { "format", "elements": [labels], "covers": [[lo, hi], ...] }. Covers may
/// name points by label or by index. A missing "format" is accepted; any
/// other tag is rejected.
Poset poset_from_json(const json& j);
json poset_to_json(const Poset& p);

/// Accepts { "elements", "joins", "meets" } (tables by index or label),
/// { "dual_of": poset } or a bare poset, read as the dual space.
PcdLattice algebra_from_json(const json& j);
json algebra_to_json(const PcdLattice& a);

/// { "source": poset, "target": poset, "assignment": [...] }, where the
/// assignment is a list in source order or an object from source labels.
OrderMap map_from_json(const json& j);
json map_to_json(const OrderMap& f);

json assignment_to_json(const Poset& source, const Poset& target, const Assignment& f);
json point_set_to_json(const Poset& p, PointSet s);

/// A list of labels or indices into a point set of `p`.
PointSet point_set_from_json(const Poset& p, const json& j);

}  // namespace pcdl

#endif  // PCDL_IO_HPP
