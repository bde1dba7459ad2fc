#pragma once

// JSON encodings of fields, matrices, algebras, groups and reports, plus the
// plain-text pc-presentation reader. Requires nlohmann/json on the include path.

#include <istream>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ucsiac/duality.hpp"
#include "ucsiac/esq.hpp"

namespace ucs::io {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

inline std::size_t index(const Json& j, const char* what) {
  const auto v = integer(j, what);
  if (v < 0) fail(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

// ---- fields and elements

inline Json to_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

inline Field field_from_json(const Json& j) {
  const auto p = detail::integer(detail::member(j, "p"), "p");
  const auto k = j.contains("k") ? detail::integer(j.at("k"), "k") : 1;
  if (p < 2 || k < 1 || p > 65536 || k > 16) detail::fail("field parameters out of range");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").empty()) {
    std::vector<std::uint32_t> m;
    for (const auto& c : j.at("modulus")) {
      const auto v = detail::integer(c, "modulus coefficient");
      if (v < 0 || v >= p) detail::fail("modulus coefficient out of range");
      m.push_back(static_cast<std::uint32_t>(v));
    }
    modulus = std::move(m);
  }
  return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), modulus);
}

/// Low-first coefficient array of length k.
inline Json element_to_json(const Field& f, Scalar x) { return f.coeffs(x); }

/// Accepts a coefficient array or, as shorthand, an integer reduced into F.
inline Scalar element_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (!j.is_array() || j.size() != f.degree()) detail::fail("element must be an array of " + std::to_string(f.degree()) + " coefficients");
  std::vector<std::int64_t> c;
  for (const auto& x : j) {
    const auto v = detail::integer(x, "coefficient");
    if (v < 0 || v >= f.characteristic()) detail::fail("coefficient out of range");
    c.push_back(v);
  }
  return f.from_coeffs(c);
}

inline Json vec_to_json(const Field& f, std::span<const Scalar> v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(element_to_json(f, x));
  return out;
}

inline Vec vec_from_json(const Field& f, const Json& j, std::size_t len) {
  if (!j.is_array() || j.size() != len) detail::fail("vector must have length " + std::to_string(len));
  Vec v;
  for (const auto& x : j) v.push_back(element_from_json(f, x));
  return v;
}

inline Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.field(), m.row(i)));
  return out;
}

inline Matrix matrix_from_json(const Field& f, const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) detail::fail("matrix must be a non-empty array of rows");
  const std::size_t cols = j.front().size();
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(f, r, cols));
  return Matrix::from_rows(f, cols, rows);
}

// ---- algebras

inline Json to_json(const ACAlgebra& L) {
  Json table = Json::array();
  for (const auto& e : L.entries())
    table.push_back(Json{{"i", e.i}, {"j", e.j}, {"c", vec_to_json(L.field(), e.c)}});
  return Json{{"field", to_json(L.field())}, {"dim", L.dim()}, {"table", table}};
}

inline ACAlgebra algebra_from_json(const Json& j) {
  const Field f = field_from_json(detail::member(j, "field"));
  const std::size_t r = detail::index(detail::member(j, "dim"), "dim");
  if (r == 0 || r > 64) detail::fail("dim out of range");
  const Json& table = detail::member(j, "table");
  if (!table.is_array()) detail::fail("table must be an array");
  std::vector<TableEntry> entries;
  for (const auto& e : table)
    entries.push_back({detail::index(detail::member(e, "i"), "i"), detail::index(detail::member(e, "j"), "j"),
                       vec_from_json(f, detail::member(e, "c"), r)});
  return ACAlgebra::make(f, r, entries);
}

// ---- groups

inline Json to_json(const PcGroup& G) {
  Json comms = Json::array();
  for (std::size_t i = 0; i < G.rank(); ++i)
    for (std::size_t j = i + 1; j < G.rank(); ++j) {
      const auto c = G.commutator_exponents(i, j);
      if (std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; })) continue;
      comms.push_back(Json{{"i", i}, {"j", j}, {"z", c}});
    }
  return Json{{"p", G.prime()}, {"rank", G.rank()}, {"order", G.order()}, {"commutators", comms}};
}

inline PcGroup group_from_json(const Json& j) {
  const auto p = detail::integer(detail::member(j, "p"), "p");
  const std::size_t r = detail::index(detail::member(j, "rank"), "rank");
  if (p < 2 || p > 65536 || r == 0 || r > 64) detail::fail("group parameters out of range");
  std::vector<std::vector<std::uint32_t>> c(wedge_dim(r), std::vector<std::uint32_t>(r, 0));
  std::vector<bool> seen(wedge_dim(r), false);
  for (const auto& e : detail::member(j, "commutators")) {
    const auto i = detail::index(detail::member(e, "i"), "i");
    const auto jj = detail::index(detail::member(e, "j"), "j");
    if (i >= jj || jj >= r) detail::fail("commutator pair needs i < j < rank");
    if (seen[pair_index(i, jj, r)]) detail::fail("duplicate commutator pair");
    seen[pair_index(i, jj, r)] = true;
    const Json& z = detail::member(e, "z");
    if (!z.is_array() || z.size() != r) detail::fail("z must have length rank");
    for (std::size_t k = 0; k < r; ++k) {
      const auto v = detail::integer(z[k], "exponent");
      c[pair_index(i, jj, r)][k] = static_cast<std::uint32_t>(((v % p) + p) % p);
    }
  }
  return PcGroup::from_table(static_cast<std::uint32_t>(p), r, c);
}

/// Reads the text produced by PcGroup::pc_presentation(). Blank lines and
/// lines starting with '#' are ignored; relations may appear in any order.
inline PcGroup group_from_pcp(std::istream& in) {
  static const std::regex power(R"(g(\d+)\^(\d+)\s*=\s*z(\d+))");
  static const std::regex central_power(R"(z(\d+)\^(\d+)\s*=\s*1)");
  static const std::regex trivial_comm(R"(\[([gz])(\d+),([gz])(\d+)\]\s*=\s*1)");
  static const std::regex comm(R"(\[g(\d+),g(\d+)\]\s*=((\s*z\d+\^-?\d+)+))");
  static const std::regex factor(R"(z(\d+)\^(-?\d+))");
  std::uint32_t p = 0;
  std::size_t r = 0;
  struct Rel {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, std::int64_t>> z;
  };
  std::vector<Rel> rels;
  std::set<std::size_t> powers;
  std::string line;
  std::size_t lineno = 0;
  auto at = [&] { return "line " + std::to_string(lineno) + ": "; };
  while (std::getline(in, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string s = line.substr(b, e - b + 1);
    std::smatch m;
    if (std::regex_match(s, m, power)) {
      if (m[1] != m[3]) detail::fail(at() + "expected gi^p = zi");
      const auto q = static_cast<std::uint32_t>(std::stoul(m[2]));
      if (p != 0 && q != p) detail::fail(at() + "inconsistent prime");
      p = q;
      powers.insert(std::stoul(m[1]));
      r = std::max<std::size_t>(r, std::stoul(m[1]));
    } else if (std::regex_match(s, m, central_power) || std::regex_match(s, m, trivial_comm)) {
      continue;
    } else if (std::regex_match(s, m, comm)) {
      Rel rel{std::stoul(m[1]), std::stoul(m[2]), {}};
      const std::string rhs = m[3];
      for (std::sregex_iterator it(rhs.begin(), rhs.end(), factor), end; it != end; ++it)
        rel.z.push_back({std::stoul((*it)[1]), std::stoll((*it)[2])});
      rels.push_back(std::move(rel));
    } else {
      detail::fail(at() + "unrecognized relation \"" + s + "\"");
    }
  }
  if (p == 0 || r == 0) detail::fail("no power relations gi^p = zi found");
  if (powers.size() != r || *powers.begin() != 1) detail::fail("power relations must cover g1 .. g" + std::to_string(r));
  std::vector<std::vector<std::uint32_t>> c(wedge_dim(r), std::vector<std::uint32_t>(r, 0));
  for (const auto& rel : rels) {
    if (rel.i < 1 || rel.j > r || rel.i >= rel.j) detail::fail("commutator [g" + std::to_string(rel.i) + ",g" + std::to_string(rel.j) + "] out of range");
    auto& row = c[pair_index(rel.i - 1, rel.j - 1, r)];
    for (const auto& [k, e] : rel.z) {
      if (k < 1 || k > r) detail::fail("z" + std::to_string(k) + " out of range");
      row[k - 1] = static_cast<std::uint32_t>((row[k - 1] + ((e % p) + p) % p) % p);
    }
  }
  return PcGroup::from_table(p, r, c);
}

inline PcGroup group_from_pcp(const std::string& text) {
  std::istringstream in(text);
  return group_from_pcp(in);
}

// ---- reports

inline Json to_json(const AuditReport& rep, const Field& f) {
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json basis = Json::array();
    for (const auto& v : row.subspace.basis_vectors()) basis.push_back(vec_to_json(f, v));
    rows.push_back(Json{{"dim", row.subspace.dim()},
                        {"basis", basis},
                        {"is_subalgebra", row.is_subalgebra},
                        {"powerful", row.powerful},
                        {"is_ideal", row.is_ideal},
                        {"powerfully_embedded", row.powerfully_embedded}});
  }
  return Json{{"proper_nonzero", rep.proper_nonzero}, {"subalgebras", rep.subalgebras}, {"ideals", rep.ideals},
              {"proper_ideals", rep.proper_ideals}, {"restricted", rep.restricted}, {"all_agree", rep.all_agree},
              {"rows", rows}};
}

inline Json to_json(const CensusReport& rep) {
  Json classes = Json::array();
  for (const auto& c : rep.classes)
    classes.push_back(Json{{"table", to_json(c.representative)}, {"aut_order", c.aut_order}, {"orbit_size", c.orbit_size}});
  return Json{{"q", rep.q},
              {"module", rep.module},
              {"hom_dim", rep.hom_dim},
              {"candidates", rep.candidates},
              {"class_count", rep.classes.size()},
              {"classes", classes}};
}

namespace detail {

inline bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); })))
      return false;
  return true;
}

inline void write(std::ostream& out, const Json& j, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (is_flat(j)) {
    out << j.dump();
    return;
  }
  const bool obj = j.is_object();
  out << (obj ? "{" : "[");
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << (first ? "\n" : ",\n") << pad << "  ";
    first = false;
    if (obj) out << Json(it.key()).dump() << ": ";
    write(out, *it, indent + 2);
  }
  out << "\n" << pad << (obj ? "}" : "]");
}

}  // namespace detail

/// Canonical text form: objects and nested arrays indented by two spaces,
/// arrays of scalars (and of scalar arrays) kept on one line.
inline std::string dump(const Json& j) {
  std::ostringstream out;
  detail::write(out, j, 0);
  out << "\n";
  return out.str();
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ucs::io
