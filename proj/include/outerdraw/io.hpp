#pragma once

// JSON documents read and written by the command-line tool.
//
//   {"kind": "type_table", "alphabet": "ABN" | "K32" | "uniform", "n": 4,
//    "k": 2, "table": {"1,2": "A", ...}}           one table (k = 2, K32, uniform)
//   {"kind": "type_table", "k": 3, "n": 4,
//    "tables": {"1,2": {...}, "1,3": {...}, ...}}  one table per outer pair
//   {"kind": "at_graph", "k": 2, "n": 3,
//    "crossings": [[[1, 1], [2, 2]], ...]}         edges as [outer, inner]
//   {"kind": "rotations", "perms": [[1,2,3], [3,1,2], ...]}
//   {"kind": "wiring", "n": 3,
//    "events": [{"op": "vertex", "curve": 1}, {"op": "swap", "pos": 0}, ...]}
//
// Uniform tables use the integers 1..k as symbols. Malformed documents raise
// SchemaError naming the offending field.

#include <string>

#include <json.hpp>

#include "outerdraw/construct.hpp"
#include "outerdraw/core.hpp"
#include "outerdraw/oracle.hpp"
#include "outerdraw/uniform.hpp"

namespace outerdraw {

using Json = nlohmann::json;

class SchemaError : public InputError {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct TypeTableDoc {
  enum class Alphabet { ABN, K32, Uniform };
  Alphabet alphabet = Alphabet::ABN;
  int k = 2;
  int n = 0;
  TableMap tables;                      // ABN: single table stored as (1,2)
  std::optional<K32Table> k32;          // K32
  std::optional<UniformTable> uniform;  // uniform
};

/// Parses text; JSON syntax errors become SchemaError at "$".
Json parse_json(const std::string& text);
std::string document_kind(const Json& doc);

TypeTableDoc parse_type_table(const Json& doc);
ATGraph parse_at_graph(const Json& doc);
RotationSystem parse_rotations(const Json& doc);
WiringDiagram parse_wiring(const Json& doc);

Json table_to_json(const Table2& t);
Json table_to_json(const K32Table& t);
Json table_to_json(const UniformTable& t);
Json type_table_document(const Table2& t);
Json type_table_document(int k, const TableMap& tables);
Json type_table_document(const K32Table& t);
Json type_table_document(int k, const UniformTable& t);
Json at_graph_document(const ATGraph& g);
Json rotations_document(const RotationSystem& rs);
Json wiring_document(const WiringDiagram& d);
Json verdict_to_json(const Verdict& v);
Json violation_to_json(const Violation& v);
/// "p/q" in lowest terms ("p" for integers).
std::string rational_to_string(const Rational& q);
Json points_to_json(const std::vector<Point>& pts);

}  // namespace outerdraw
