#pragma once

// JSON input schema and output serialisation. Rationals travel as strings
// "p/q" (or "p"); integers may be JSON numbers or decimal strings.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "plumbtau/floer_complex.hpp"
#include "plumbtau/obstructions.hpp"
#include "plumbtau/surgery_calculus.hpp"
#include "plumbtau/tau_lattice.hpp"

namespace plumbtau::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Field readers
// ---------------------------------------------------------------------------

[[noreturn]] inline void schema_fail(const std::string& path, const std::string& why) {
  throw SchemaError(path + ": " + why);
}

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing");
  return *it;
}

inline Integer read_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    Integer v;
    if (parse_integer(j.get<std::string>(), v)) return v;
  }
  schema_fail(path, "expected an integer");
}

inline int read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<int>();
}

inline Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  schema_fail(path, "expected a rational (integer or \"p/q\" string)");
}

inline IntVector read_int_vector(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_integer(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::string read_id(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  schema_fail(path, "expected a vertex id (string or integer)");
}

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

inline PlumbingTree read_plumbing(const json& j, const std::string& path = "plumbing") {
  PlumbingTree t;
  const json& verts = field(j, "vertices", path);
  if (!verts.is_array() || verts.empty()) schema_fail(path + ".vertices", "expected a non-empty array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string vp = path + ".vertices[" + std::to_string(i) + "]";
    PlumbingVertex v{read_id(field(verts[i], "id", vp), vp + ".id"), read_integer(field(verts[i], "weight", vp), vp + ".weight"),
                     std::nullopt};
    if (verts[i].contains("marking")) {
      const json& m = verts[i]["marking"];
      std::string s = m.is_string() ? m.get<std::string>() : "";
      if (s == "marked") v.marking = Marking::marked;
      else if (s == "unmarked_leaf") v.marking = Marking::unmarked_leaf;
      else if (s == "internal") v.marking = Marking::internal;
      else schema_fail(vp + ".marking", "expected marked, unmarked_leaf or internal");
    }
    t.vertices.push_back(v);
  }
  if (j.contains("edges")) {
    const json& edges = j["edges"];
    if (!edges.is_array()) schema_fail(path + ".edges", "expected an array of id pairs");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string ep = path + ".edges[" + std::to_string(i) + "]";
      if (!edges[i].is_array() || edges[i].size() != 2) schema_fail(ep, "expected a pair of vertex ids");
      t.edges.emplace_back(read_id(edges[i][0], ep + "[0]"), read_id(edges[i][1], ep + "[1]"));
    }
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    for (const auto& id : {t.edges[i].first, t.edges[i].second}) {
      bool known = false;
      for (const auto& v : t.vertices) known = known || v.id == id;
      if (!known) schema_fail(path + ".edges[" + std::to_string(i) + "]", "unknown vertex id '" + id + "'");
    }
  }
  return t;
}

inline LeafLink read_leaf_link(const json& j, const PlumbingTree& tree, const std::string& path = "leaf_link") {
  if (!j.is_object()) schema_fail(path, "expected an object mapping vertex id to strand count");
  std::map<std::string, Integer> strands;
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const auto& v : tree.vertices) known = known || v.id == it.key();
    if (!known) schema_fail(path + "." + it.key(), "unknown vertex id");
    strands[it.key()] = read_integer(it.value(), path + "." + it.key());
  }
  return make_leaf_link(tree, strands);
}

/// "all", "d0", or an array of characteristic vectors.
using Selector = std::variant<std::string, std::vector<CharVector>>;

inline Selector read_selector(const json& j, const std::string& path = "spinc") {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s != "all" && s != "d0") schema_fail(path, "expected \"all\", \"d0\" or a list of vectors");
    return s;
  }
  if (!j.is_array()) schema_fail(path, "expected \"all\", \"d0\" or a list of vectors");
  std::vector<CharVector> reps;
  for (std::size_t i = 0; i < j.size(); ++i) reps.push_back(read_int_vector(j[i], path + "[" + std::to_string(i) + "]"));
  return reps;
}

/// Parses a selector given on the command line: all, d0, or "k1,k2;k1,k2".
inline Selector parse_selector_text(const std::string& text) {
  if (text == "all" || text == "d0") return text;
  std::vector<CharVector> reps;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    CharVector k;
    std::size_t s = 0;
    while (s <= item.size()) {
      std::size_t e = item.find(',', s);
      Integer v;
      if (!parse_integer(item.substr(s, e == std::string::npos ? std::string::npos : e - s), v))
        throw SchemaError("--spinc: cannot parse '" + text + "'");
      k.push_back(v);
      if (e == std::string::npos) break;
      s = e + 1;
    }
    reps.push_back(k);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return reps;
}

inline std::vector<SpincClass> resolve(const PlumbingLattice& lat, const Selector& sel) {
  if (auto s = std::get_if<std::string>(&sel)) return select_classes(lat, *s);
  const auto& reps = std::get<std::vector<CharVector>>(sel);
  for (const auto& k : reps)
    if (k.size() != lat.rank()) throw SchemaError("spinc: vector " + format_vector(k) + " has the wrong length");
  return select_classes(lat, reps);
}

inline SurgeryPresentation read_surgery(const json& j, const std::string& path = "surgery") {
  SurgeryPresentation p;
  const json& comps = field(j, "components", path);
  if (!comps.is_array()) schema_fail(path + ".components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string cp = path + ".components[" + std::to_string(i) + "]";
    SurgeryComponent c;
    std::string kind = comps[i].value("kind", std::string("contact_minus_one"));
    if (kind == "contact_minus_one") {
      c.kind = ComponentKind::contact_minus_one;
      c.tb = read_integer(field(comps[i], "tb", cp), cp + ".tb");
    } else if (kind == "stein_handle") {
      c.kind = ComponentKind::stein_handle;
    } else {
      schema_fail(cp + ".kind", "expected contact_minus_one or stein_handle");
    }
    c.rot = comps[i].contains("rot") ? read_integer(comps[i]["rot"], cp + ".rot") : Integer(0);
    if (comps[i].contains("coefficient")) {
      Rational coeff = read_rational(comps[i]["coefficient"], cp + ".coefficient");
      if (!is_integer(coeff)) schema_fail(cp + ".coefficient", "rational surgery coefficients are not supported");
      if (boost::multiprecision::numerator(coeff) != c.coefficient())
        schema_fail(cp + ".coefficient", "must equal " + c.coefficient().str() + " for this kind of component");
    }
    p.components.push_back(c);
  }
  const std::size_t t = p.components.size();
  p.linking = IntMatrix(t, t);
  if (j.contains("linking")) {
    const json& lk = j["linking"];
    if (!lk.is_array() || lk.size() != t) schema_fail(path + ".linking", "expected a " + std::to_string(t) + "x" + std::to_string(t) + " matrix");
    for (std::size_t r = 0; r < t; ++r) {
      IntVector row = read_int_vector(lk[r], path + ".linking[" + std::to_string(r) + "]");
      if (row.size() != t) schema_fail(path + ".linking[" + std::to_string(r) + "]", "wrong row length");
      for (std::size_t c = 0; c < t; ++c) p.linking(r, c) = row[c];
    }
    if (!p.linking.is_symmetric()) schema_fail(path + ".linking", "matrix is not symmetric");
  }
  if (j.contains("link_components")) {
    const json& lc = j["link_components"];
    if (!lc.is_array()) schema_fail(path + ".link_components", "expected an array of linking vectors");
    for (std::size_t k = 0; k < lc.size(); ++k) {
      const std::string kp = path + ".link_components[" + std::to_string(k) + "]";
      IntVector v = read_int_vector(lc[k], kp);
      if (v.size() != t) schema_fail(kp, "expected " + std::to_string(t) + " linking numbers");
      p.link_components.push_back(v);
    }
  }
  return p;
}

inline BraidDatum read_braid(const json& j, const std::string& path = "braid") {
  if (j.contains("word")) {
    int strands = read_int(field(j, "strands", path), path + ".strands");
    std::vector<int> word;
    for (std::size_t i = 0; i < j["word"].size(); ++i) word.push_back(read_int(j["word"][i], path + ".word[" + std::to_string(i) + "]"));
    return braid_from_word(strands, word);
  }
  return {read_integer(field(j, "strands", path), path + ".strands"), read_integer(field(j, "writhe", path), path + ".writhe"),
          read_integer(field(j, "components", path), path + ".components")};
}

/// Curve data: either "euler" or "genus" (connected surface), plus "boundary";
/// "chern" and "self_intersection" default to 0.
inline CurveDatum read_curve(const json& j, const std::string& path = "curve") {
  CurveDatum c;
  c.boundary = read_integer(field(j, "boundary", path), path + ".boundary");
  if (j.contains("euler")) c.euler = read_integer(j["euler"], path + ".euler");
  else c.euler = euler_characteristic(read_integer(field(j, "genus", path), path + ".genus"), c.boundary);
  c.chern = j.contains("chern") ? read_rational(j["chern"], path + ".chern") : Rational(0);
  c.self_intersection = j.contains("self_intersection") ? read_rational(j["self_intersection"], path + ".self_intersection") : Rational(0);
  return c;
}

inline std::pair<FloerComplex, AlexanderFiltration> read_floer(const json& j, const std::string& path = "floer_complex") {
  if (!j.is_array()) schema_fail(path, "expected an array of lines");
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema_fail(path + "[" + std::to_string(i) + "]", "expected a string");
    lines.push_back(j[i].get<std::string>());
  }
  return parse_floer(lines);
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

inline json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      out.push_back(x.convert_to<long long>());
    else
      out.push_back(x.str());
  }
  return out;
}

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Verdict& v) {
  json out{{"check", v.check}, {"verdict", to_string(v.outcome)}, {"witness", v.witness}};
  out["slack"] = v.slack ? json(to_string(*v.slack)) : json(nullptr);
  return out;
}

inline json tau_table_json(const PlumbingLattice& lat, const LeafLink& link, const std::vector<SpincClass>& subset) {
  json rows = json::array();
  for (const auto& s : subset) {
    auto t = tau(lat, link, s);
    rows.push_back({{"class", to_json(s.representative)},
                    {"d", to_json(lat.d_invariant(s))},
                    {"tau", to_json(t.value)},
                    {"minimizer", to_json(t.minimizer)}});
  }
  json out{{"h1_order", lat.h1_order().str()}, {"components", link.components().str()}, {"classes", rows}};
  if (!subset.empty()) {
    auto ext = tau_extrema(lat, link, subset);
    out["tau_max"] = to_json(ext.max);
    out["tau_min"] = to_json(ext.min);
  }
  return out;
}

inline json dinv_table_json(const PlumbingLattice& lat) {
  json rows = json::array();
  for (const auto& s : lat.classes()) rows.push_back({{"class", to_json(s.representative)}, {"d", to_json(lat.d_invariant(s))}});
  return {{"h1_order", lat.h1_order().str()}, {"classes", rows}};
}

inline json spinc_table_json(const PlumbingLattice& lat) {
  json rows = json::array();
  for (const auto& s : lat.classes()) {
    json shorts = json::array();
    for (const auto& k : lat.short_char_vectors())
      if (lat.same_class(k, s.representative)) shorts.push_back(to_json(k));
    rows.push_back({{"class", to_json(s.representative)},
                    {"conjugate", to_json(lat.conjugate(s).representative)},
                    {"short_representatives", shorts}});
  }
  return {{"h1_order", lat.h1_order().str()}, {"determinant", lat.determinant().str()}, {"classes", rows}};
}

/// Aligned text rendering of a flat JSON table: {"...": [...rows...]} or a
/// single object.
inline std::string render_table(const json& rows) {
  std::vector<std::string> headers;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) headers.push_back(it.key());
  auto cell = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::vector<std::size_t> width;
  for (const auto& h : headers) width.push_back(h.size());
  for (const auto& r : rows)
    for (std::size_t i = 0; i < headers.size(); ++i) width[i] = std::max(width[i], cell(r[headers[i]]).size());
  std::string out;
  auto line = [&](auto get) {
    for (std::size_t i = 0; i < headers.size(); ++i) {
      std::string s = get(i);
      out += s + std::string(width[i] - s.size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  };
  line([&](std::size_t i) { return headers[i]; });
  for (const auto& r : rows) line([&](std::size_t i) { return cell(r[headers[i]]); });
  return out;
}

}  // namespace plumbtau::io
