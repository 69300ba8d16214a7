#include "outerdraw/io.hpp"

#include <algorithm>

namespace outerdraw {

namespace {

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

int int_field(const Json& obj, const std::string& key, const std::string& path, int lo) {
  const Json& v = field(obj, key, path);
  if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > 1'000'000) throw SchemaError(path + "." + key, "value " + std::to_string(x) + " out of range");
  return static_cast<int>(x);
}

std::pair<int, int> parse_key(const std::string& key, int n, const std::string& path) {
  const auto comma = key.find(',');
  int u = 0, v = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used = 0;
    u = std::stoi(key.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("junk");
    const std::string rest = key.substr(comma + 1);
    v = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    throw SchemaError(path + ".\"" + key + "\"", "key must look like \"u,v\"");
  }
  if (!(1 <= u && u < v && v <= n))
    throw SchemaError(path + ".\"" + key + "\"", "need 1 <= u < v <= " + std::to_string(n));
  return {u, v};
}

// Fills a table from {"u,v": symbol}; every pair must be present exactly once.
template <class T, class Parse>
TypeTable<T> parse_entries(const Json& obj, int n, const std::string& path, T fill, Parse parse) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object of \"u,v\" entries");
  TypeTable<T> t(n, fill);
  std::vector<bool> seen(t.pair_count(), false);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto [u, v] = parse_key(it.key(), n, path);
    const std::string here = path + ".\"" + it.key() + "\"";
    const std::size_t idx = pair_index(n, u, v);
    if (seen[idx]) throw SchemaError(here, "duplicate pair");
    seen[idx] = true;
    try {
      t.at(u, v) = parse(it.value());
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError(here, e.what());
    }
  }
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!seen[pair_index(n, u, v)])
        throw SchemaError(path + ".\"" + std::to_string(u) + "," + std::to_string(v) + "\"", "missing pair");
  return t;
}

PairType2 parse_abn(const Json& v) {
  if (!v.is_string() || v.get<std::string>().size() != 1) throw InputError("expected \"A\", \"B\" or \"N\"");
  return pair_type2_from_char(v.get<std::string>()[0]);
}

K32Type parse_k32(const Json& v) {
  if (!v.is_string()) throw InputError("expected one of B1,B2,B3,W1,W2,W3");
  return k32_type_from_string(v.get<std::string>());
}

Permutation parse_perm(const Json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of labels");
  std::vector<int> w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected an integer");
    w.push_back(v[i].get<int>());
  }
  try {
    return Permutation(std::move(w));
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
}

void expect_kind(const Json& doc, const std::string& kind) {
  const std::string k = document_kind(doc);
  if (k != kind) throw SchemaError("$.kind", "expected \"" + kind + "\", got \"" + k + "\"");
}

std::string key_of(int u, int v) { return std::to_string(u) + "," + std::to_string(v); }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
}

std::string document_kind(const Json& doc) {
  const Json& k = field(doc, "kind", "$");
  if (!k.is_string()) throw SchemaError("$.kind", "expected a string");
  const std::string s = k.get<std::string>();
  if (s != "type_table" && s != "at_graph" && s != "rotations" && s != "wiring")
    throw SchemaError("$.kind", "unknown kind \"" + s + "\"");
  return s;
}

TypeTableDoc parse_type_table(const Json& doc) {
  expect_kind(doc, "type_table");
  TypeTableDoc out;
  if (doc.contains("alphabet")) {
    const Json& a = doc["alphabet"];
    const std::string s = a.is_string() ? a.get<std::string>() : "";
    if (s == "ABN")
      out.alphabet = TypeTableDoc::Alphabet::ABN;
    else if (s == "K32")
      out.alphabet = TypeTableDoc::Alphabet::K32;
    else if (s == "uniform")
      out.alphabet = TypeTableDoc::Alphabet::Uniform;
    else
      throw SchemaError("$.alphabet", "expected \"ABN\", \"K32\" or \"uniform\"");
  }
  out.n = int_field(doc, "n", "$", 1);
  if (doc.contains("k")) out.k = int_field(doc, "k", "$", 1);
  const bool single = doc.contains("table"), multi = doc.contains("tables");
  if (single == multi) throw SchemaError("$", "exactly one of \"table\" and \"tables\" is required");

  switch (out.alphabet) {
    case TypeTableDoc::Alphabet::K32:
      if (!single) throw SchemaError("$.tables", "K32 documents carry a single \"table\"");
      out.k = 3;
      out.k32 = parse_entries<K32Type>(doc["table"], out.n, "$.table", K32Type::B1, parse_k32);
      return out;
    case TypeTableDoc::Alphabet::Uniform: {
      if (!single) throw SchemaError("$.tables", "uniform documents carry a single \"table\"");
      const int k = out.k;
      out.uniform = parse_entries<int>(doc["table"], out.n, "$.table", 1, [k](const Json& v) {
        if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > k)
          throw InputError("expected an integer in 1.." + std::to_string(k));
        return v.get<int>();
      });
      return out;
    }
    case TypeTableDoc::Alphabet::ABN:
      break;
  }
  if (single) {
    if (out.k != 2) throw SchemaError("$.table", "a single ABN table needs k = 2");
    out.tables.emplace(OuterPair{1, 2}, parse_entries<PairType2>(doc["table"], out.n, "$.table", PairType2::N, parse_abn));
    return out;
  }
  const Json& tabs = doc["tables"];
  if (!tabs.is_object()) throw SchemaError("$.tables", "expected an object keyed \"i,j\"");
  if (out.k < 2) throw SchemaError("$.k", "need k >= 2");
  for (auto it = tabs.begin(); it != tabs.end(); ++it) {
    const auto [i, j] = parse_key(it.key(), out.k, "$.tables");
    out.tables.emplace(OuterPair{i, j}, parse_entries<PairType2>(it.value(), out.n, "$.tables.\"" + it.key() + "\"",
                                                                PairType2::N, parse_abn));
  }
  for (int i = 1; i <= out.k; ++i)
    for (int j = i + 1; j <= out.k; ++j)
      if (!out.tables.count({i, j})) throw SchemaError("$.tables.\"" + key_of(i, j) + "\"", "missing table");
  return out;
}

ATGraph parse_at_graph(const Json& doc) {
  expect_kind(doc, "at_graph");
  ATGraph g;
  g.k = int_field(doc, "k", "$", 2);
  g.n = int_field(doc, "n", "$", 1);
  const Json& cs = field(doc, "crossings", "$");
  if (!cs.is_array()) throw SchemaError("$.crossings", "expected an array");
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const std::string path = "$.crossings[" + std::to_string(c) + "]";
    const Json& pair = cs[c];
    if (!pair.is_array() || pair.size() != 2) throw SchemaError(path, "expected two edges");
    EdgeRef e[2];
    for (int s = 0; s < 2; ++s) {
      const Json& edge = pair[s];
      const std::string ep = path + "[" + std::to_string(s) + "]";
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_integer() || !edge[1].is_number_integer())
        throw SchemaError(ep, "expected [outer, inner]");
      e[s] = {edge[0].get<int>(), edge[1].get<int>()};
    }
    g.crossings.insert(Crossing::make(e[0], e[1]));
    try {
      ATGraph one{g.k, g.n, {Crossing::make(e[0], e[1])}};
      one.validate();
    } catch (const InputError& err) {
      throw SchemaError(path, err.what());
    }
  }
  return g;
}

RotationSystem parse_rotations(const Json& doc) {
  expect_kind(doc, "rotations");
  const Json& ps = field(doc, "perms", "$");
  if (!ps.is_array()) throw SchemaError("$.perms", "expected an array of permutations");
  RotationSystem rs;
  for (std::size_t i = 0; i < ps.size(); ++i) rs.perms.push_back(parse_perm(ps[i], "$.perms[" + std::to_string(i) + "]"));
  try {
    rs.validate();
  } catch (const InputError& e) {
    throw SchemaError("$.perms", e.what());
  }
  return rs;
}

WiringDiagram parse_wiring(const Json& doc) {
  expect_kind(doc, "wiring");
  WiringDiagram d;
  d.n = int_field(doc, "n", "$", 1);
  const Json& evs = field(doc, "events", "$");
  if (!evs.is_array()) throw SchemaError("$.events", "expected an array");
  for (std::size_t e = 0; e < evs.size(); ++e) {
    const std::string path = "$.events[" + std::to_string(e) + "]";
    const Json& op = field(evs[e], "op", path);
    const std::string s = op.is_string() ? op.get<std::string>() : "";
    if (s == "swap")
      d.events.push_back(WiringEvent::swap(int_field(evs[e], "pos", path, 0)));
    else if (s == "vertex")
      d.events.push_back(WiringEvent::vertex(int_field(evs[e], "curve", path, 1)));
    else
      throw SchemaError(path + ".op", "expected \"swap\" or \"vertex\"");
  }
  try {
    d.validate();
  } catch (const InputError& err) {
    throw SchemaError("$.events", err.what());
  }
  return d;
}

// ---------------------------------------------------------------------------

Json table_to_json(const Table2& t) {
  Json j = Json::object();
  for (int u = 1; u <= t.size(); ++u)
    for (int v = u + 1; v <= t.size(); ++v) j[key_of(u, v)] = std::string(1, to_char(t.at(u, v)));
  return j;
}

Json table_to_json(const K32Table& t) {
  Json j = Json::object();
  for (int u = 1; u <= t.size(); ++u)
    for (int v = u + 1; v <= t.size(); ++v) j[key_of(u, v)] = to_string(t.at(u, v));
  return j;
}

Json table_to_json(const UniformTable& t) {
  Json j = Json::object();
  for (int u = 1; u <= t.size(); ++u)
    for (int v = u + 1; v <= t.size(); ++v) j[key_of(u, v)] = t.at(u, v);
  return j;
}

Json type_table_document(const Table2& t) {
  return {{"kind", "type_table"}, {"alphabet", "ABN"}, {"k", 2}, {"n", t.size()}, {"table", table_to_json(t)}};
}

Json type_table_document(int k, const TableMap& tables) {
  Json tabs = Json::object();
  int n = 0;
  for (const auto& [key, t] : tables) {
    if (key.first >= key.second) continue;
    tabs[key_of(key.first, key.second)] = table_to_json(t);
    n = t.size();
  }
  return {{"kind", "type_table"}, {"alphabet", "ABN"}, {"k", k}, {"n", n}, {"tables", tabs}};
}

Json type_table_document(const K32Table& t) {
  return {{"kind", "type_table"}, {"alphabet", "K32"}, {"k", 3}, {"n", t.size()}, {"table", table_to_json(t)}};
}

Json type_table_document(int k, const UniformTable& t) {
  return {{"kind", "type_table"}, {"alphabet", "uniform"}, {"k", k}, {"n", t.size()}, {"table", table_to_json(t)}};
}

Json at_graph_document(const ATGraph& g) {
  Json cs = Json::array();
  for (const auto& c : g.crossings)
    cs.push_back(Json::array({Json::array({c.first.outer, c.first.inner}), Json::array({c.second.outer, c.second.inner})}));
  return {{"kind", "at_graph"}, {"k", g.k}, {"n", g.n}, {"crossings", cs}};
}

Json rotations_document(const RotationSystem& rs) {
  Json ps = Json::array();
  for (const auto& p : rs.perms) ps.push_back(p.word());
  return {{"kind", "rotations"}, {"perms", ps}};
}

Json wiring_document(const WiringDiagram& d) {
  Json evs = Json::array();
  for (const auto& e : d.events) {
    if (e.kind == WiringEvent::Kind::Swap)
      evs.push_back({{"op", "swap"}, {"pos", e.value}});
    else
      evs.push_back({{"op", "vertex"}, {"curve", e.value}});
  }
  return {{"kind", "wiring"}, {"n", d.n}, {"events", evs}};
}

Json violation_to_json(const Violation& v) {
  Json j = {{"rule", v.rule}, {"inner", v.inner}, {"description", v.describe()}};
  if (!v.outer.empty()) j["outer"] = v.outer;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j = {{"consistent", v.consistent}};
  if (v.witness) j["witness"] = violation_to_json(*v.witness);
  return j;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Json points_to_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(Json::array({rational_to_string(p.x), rational_to_string(p.y)}));
  return arr;
}

}  // namespace outerdraw
