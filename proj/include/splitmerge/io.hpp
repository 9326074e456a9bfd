#pragma once

// JSON envelopes, DOT emission and plain-text renderings for every structure kind.

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "splitmerge/correspond.hpp"
#include "splitmerge/lattice.hpp"

namespace splitmerge {

using Json = nlohmann::json;

using Structure = std::variant<MatLabeledGraph, RegularVine, PreferenceDomain, SubsetLattice, BinaryMatrix>;

inline std::string kind_of(const Structure& s) {
  static constexpr const char* names[] = {"matgraph", "vine", "domain", "lattice", "matrix"};
  return names[s.index()];
}

inline const GroundSet& ground_of(const Structure& s) {
  return std::visit(
      [](const auto& x) -> const GroundSet& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BinaryMatrix>) return x.rows();
        else return x.ground();
      },
      s);
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline Json label_array(const GroundSet& g, Mask m) { return Json(g.subset_labels(m)); }

inline Json ordering_array(const GroundSet& g, const Ordering& o) {
  Json a = Json::array();
  for (int x : o) a.push_back(g.label(static_cast<std::size_t>(x)));
  return a;
}

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw InputError("at " + where + ": " + what);
}

inline const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, "missing key \"" + key + "\"");
  return *it;
}

inline std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema_error(where + "/" + std::to_string(i), "expected a string label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

inline GroundSet ground_from(const Json& j, const std::string& where) {
  try {
    return GroundSet(string_list(j, where));
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind("at ", 0) == 0) throw;
    schema_error(where, e.what());
  }
}

inline Mask subset_from(const GroundSet& g, const Json& j, const std::string& where) {
  const auto labels = string_list(j, where);
  Mask m = 0;
  for (const auto& l : labels) {
    const auto i = g.find(l);
    if (!i) schema_error(where, "unknown label '" + l + "'");
    if (m & bit(*i)) schema_error(where, "label '" + l + "' repeated");
    m |= bit(*i);
  }
  return m;
}

template <class F>
auto rethrow_at(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind("at ", 0) == 0) throw;
    schema_error(where, e.what());
  }
}

}  // namespace detail

inline Json to_json(const MatLabeledGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
  return {{"kind", "matgraph"}, {"vertices", g.vertices().labels()}, {"edges", edges}};
}

inline Json to_json(const RegularVine& v) {
  Json nodes = Json::array();
  for (Mask m : v.nodes()) nodes.push_back(detail::label_array(v.ground(), m));
  return {{"kind", "vine"}, {"ground", v.ground().labels()}, {"nodes", nodes}};
}

inline Json to_json(const PreferenceDomain& d) {
  Json prefs = Json::array();
  for (const auto& p : d.preferences()) prefs.push_back(detail::ordering_array(d.alternatives(), p));
  return {{"kind", "domain"}, {"alternatives", d.alternatives().labels()}, {"preferences", prefs}};
}

inline Json to_json(const SubsetLattice& l) {
  Json els = Json::array();
  for (Mask m : l.elements()) els.push_back(detail::label_array(l.ground(), m));
  return {{"kind", "lattice"}, {"ground", l.ground().labels()}, {"elements", els}};
}

inline std::vector<std::string> matrix_rows(const BinaryMatrix& m) {
  std::vector<std::string> rows;
  for (int r = 0; r < m.row_count(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < m.column_count(); ++c) line += m.entry(r, c) ? '1' : '0';
    rows.push_back(std::move(line));
  }
  return rows;
}

inline Json to_json(const BinaryMatrix& m) {
  return {{"kind", "matrix"}, {"rows", m.rows().labels()}, {"entries", matrix_rows(m)}};
}

inline Json to_json(const Structure& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

inline Structure structure_from_json(const Json& j) {
  const auto& kind_j = detail::member(j, "kind", "/");
  if (!kind_j.is_string()) detail::schema_error("/kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();

  if (kind == "matgraph") {
    const GroundSet vs = detail::ground_from(detail::member(j, "vertices", "/"), "/vertices");
    const auto& ej = detail::member(j, "edges", "/");
    if (!ej.is_array()) detail::schema_error("/edges", "expected an array");
    std::vector<LabeledEdge> edges;
    for (std::size_t i = 0; i < ej.size(); ++i) {
      const std::string at = "/edges/" + std::to_string(i);
      const auto& u = detail::member(ej[i], "u", at);
      const auto& v = detail::member(ej[i], "v", at);
      const auto& l = detail::member(ej[i], "label", at);
      if (!u.is_string() || !v.is_string()) detail::schema_error(at, "endpoints must be strings");
      if (!l.is_number_integer()) detail::schema_error(at + "/label", "expected an integer");
      edges.push_back({u.get<std::string>(), v.get<std::string>(), l.get<int>()});
    }
    return detail::rethrow_at("/edges", [&] { return MatLabeledGraph(vs, edges); });
  }
  if (kind == "vine") {
    const GroundSet g = detail::ground_from(detail::member(j, "ground", "/"), "/ground");
    const auto& nj = detail::member(j, "nodes", "/");
    if (!nj.is_array()) detail::schema_error("/nodes", "expected an array");
    std::vector<Mask> nodes;
    for (std::size_t i = 0; i < nj.size(); ++i) nodes.push_back(detail::subset_from(g, nj[i], "/nodes/" + std::to_string(i)));
    return detail::rethrow_at("/nodes", [&] { return RegularVine(g, nodes); });
  }
  if (kind == "domain") {
    const GroundSet g = detail::ground_from(detail::member(j, "alternatives", "/"), "/alternatives");
    const auto& pj = detail::member(j, "preferences", "/");
    if (!pj.is_array()) detail::schema_error("/preferences", "expected an array");
    std::vector<Ordering> prefs;
    for (std::size_t i = 0; i < pj.size(); ++i) {
      const std::string at = "/preferences/" + std::to_string(i);
      Ordering o;
      for (const auto& l : detail::string_list(pj[i], at)) {
        const auto x = g.find(l);
        if (!x) detail::schema_error(at, "unknown alternative '" + l + "'");
        o.push_back(*x);
      }
      prefs.push_back(std::move(o));
    }
    return detail::rethrow_at("/preferences", [&] { return PreferenceDomain(g, prefs); });
  }
  if (kind == "lattice") {
    const GroundSet g = detail::ground_from(detail::member(j, "ground", "/"), "/ground");
    const auto& ej = detail::member(j, "elements", "/");
    if (!ej.is_array()) detail::schema_error("/elements", "expected an array");
    std::vector<Mask> els;
    for (std::size_t i = 0; i < ej.size(); ++i) els.push_back(detail::subset_from(g, ej[i], "/elements/" + std::to_string(i)));
    return detail::rethrow_at("/elements", [&] { return SubsetLattice(g, els); });
  }
  if (kind == "matrix") {
    const GroundSet rows_in_order = detail::ground_from(detail::member(j, "rows", "/"), "/rows");
    const auto labels = detail::string_list(detail::member(j, "rows", "/"), "/rows");
    const auto entries = detail::string_list(detail::member(j, "entries", "/"), "/entries");
    if (entries.size() != labels.size()) detail::schema_error("/entries", "need one entry string per row");
    const std::size_t cols = entries.empty() ? 0 : entries.front().size();
    std::vector<Mask> columns(cols, 0);
    for (std::size_t r = 0; r < entries.size(); ++r) {
      if (entries[r].size() != cols) detail::schema_error("/entries/" + std::to_string(r), "ragged row");
      for (std::size_t c = 0; c < cols; ++c) {
        const char ch = entries[r][c];
        if (ch != '0' && ch != '1') detail::schema_error("/entries/" + std::to_string(r), "entries must be 0 or 1");
        if (ch == '1') columns[c] |= bit(rows_in_order.index(labels[r]));
      }
    }
    return detail::rethrow_at("/entries", [&] { return BinaryMatrix(rows_in_order, columns); });
  }
  detail::schema_error("/kind", "unknown kind \"" + kind + "\"");
}

/// Parses a JSON document; syntax errors carry their byte position.
inline Structure parse_structure(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON (byte ") + std::to_string(e.byte) + "): " + e.what());
  }
  return structure_from_json(j);
}

// ---------------------------------------------------------------------------
// Text

inline std::string to_text(const MatLabeledGraph& g) {
  std::ostringstream os;
  os << "matgraph on " << g.vertices().format(g.vertices().full()) << "\n";
  for (const auto& e : g.edges()) os << "  " << e.u << " " << e.v << " " << e.label << "\n";
  return os.str();
}

inline std::string to_text(const RegularVine& v) {
  std::ostringstream os;
  os << "vine on " << v.ground().format(v.ground().full()) << "\n";
  for (int k = 1; k <= v.size(); ++k) {
    os << "  rank " << k << ":";
    for (Mask m : v.rank(k)) os << " " << v.ground().format(m);
    os << "\n";
  }
  return os.str();
}

/// Columns are preferences, the first row is rank 1.
inline std::string to_text(const PreferenceDomain& d) {
  std::ostringstream os;
  os << "domain on " << d.alternatives().format(d.alternatives().full()) << " (" << d.count() << " preferences)\n";
  std::size_t width = 1;
  for (const auto& l : d.alternatives().labels()) width = std::max(width, l.size());
  for (int k = 0; k < d.size(); ++k) {
    os << " ";
    for (const auto& p : d.preferences()) {
      const auto& l = d.alternatives().label(static_cast<std::size_t>(p[static_cast<std::size_t>(k)]));
      os << " " << std::string(width - l.size(), ' ') << l;
    }
    os << "\n";
  }
  return os.str();
}

inline std::string to_text(const SubsetLattice& l) {
  std::ostringstream os;
  os << "lattice on " << l.ground().format(l.ground().full()) << " (" << l.count() << " elements)\n ";
  for (Mask m : l.elements()) os << " " << l.ground().format(m);
  os << "\n";
  return os.str();
}

/// One line of 0/1 per row, columns in node order.
inline std::string to_text(const BinaryMatrix& m) {
  std::ostringstream os;
  for (const auto& r : matrix_rows(m)) os << r << "\n";
  return os.str();
}

inline std::string to_text(const Structure& s) {
  return std::visit([](const auto& x) { return to_text(x); }, s);
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {

inline std::string dot_id(const GroundSet& g, Mask m) {
  std::string s = "\"";
  s += g.format(m);
  s += "\"";
  return s;
}

inline std::string hasse_dot(const std::string& name, const GroundSet& g, const std::vector<Mask>& els) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (Mask m : els) os << "  " << dot_id(g, m) << ";\n";
  const auto covers = cover_lists(els);
  for (std::size_t i = 0; i < els.size(); ++i)
    for (int c : covers[i]) os << "  " << dot_id(g, els[static_cast<std::size_t>(c)]) << " -> " << dot_id(g, els[i]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace detail

inline std::string to_dot(const MatLabeledGraph& g) {
  std::ostringstream os;
  os << "graph matgraph {\n";
  for (const auto& l : g.vertices().labels()) os << "  \"" << l << "\";\n";
  for (const auto& e : g.edges()) os << "  \"" << e.u << "\" -- \"" << e.v << "\" [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const RegularVine& v) { return detail::hasse_dot("vine", v.ground(), v.nodes()); }
inline std::string to_dot(const SubsetLattice& l) { return detail::hasse_dot("lattice", l.ground(), l.elements()); }

inline std::string to_dot(const Structure& s) {
  if (auto g = std::get_if<MatLabeledGraph>(&s)) return to_dot(*g);
  if (auto v = std::get_if<RegularVine>(&s)) return to_dot(*v);
  if (auto l = std::get_if<SubsetLattice>(&s)) return to_dot(*l);
  throw ArgumentError("DOT output is not available for kind " + kind_of(s));
}

}  // namespace splitmerge
