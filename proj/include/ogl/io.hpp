// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_IO_HPP
#define OGL_IO_HPP

// JSON encoding of the value types. Decoding is strict: unknown keys,
// floating-point numbers and broken invariants are all rejected, and every
// error names the JSON pointer of the offending value.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ogl/conjclass.hpp"
#include "ogl/dim4.hpp"
#include "ogl/errors.hpp"
#include "ogl/grassmann.hpp"

namespace ogl::io {

using Json = nlohmann::ordered_json;

/// A decoding failure at `pointer` (a JSON pointer, "" for the root).
/// Syntax errors carry a 1-based line and column instead.
class DocumentError : public ParseError {
 public:
  enum class Kind { Syntax, Schema, Invariant };

  DocumentError(Kind kind, std::string pointer, std::string message, std::size_t line = 0, std::size_t column = 0)
      : ParseError(format(kind, pointer, message, line, column)),
        kind_(kind),
        pointer_(std::move(pointer)),
        message_(std::move(message)),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  const std::string& pointer() const { return pointer_; }
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::Syntax: return "syntax";
      case Kind::Schema: return "schema";
      case Kind::Invariant: return "invariant";
    }
    return "?";
  }

 private:
  static std::string format(Kind kind, const std::string& pointer, const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string where = kind == Kind::Syntax ? std::to_string(line) + ":" + std::to_string(column)
                                             : (pointer.empty() ? std::string("/") : pointer);
    return where + ": " + kind_name(kind) + " error: " + message;
  }

  Kind kind_;
  std::string pointer_;
  std::string message_;
  std::size_t line_, column_;
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& at, const std::string& msg) {
  throw DocumentError(DocumentError::Kind::Schema, at, msg);
}

[[noreturn]] inline void invariant_error(const std::string& at, const std::string& msg) {
  throw DocumentError(DocumentError::Kind::Invariant, at, msg);
}

inline std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
inline std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

inline void expect_object(const Json& j, const std::string& at, std::initializer_list<const char*> required,
                          std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema_error(at, "expected an object");
  for (const char* key : required)
    if (!j.contains(key)) schema_error(at, std::string("missing key \"") + key + "\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = it.key() == "type";
    for (const char* key : required) known = known || it.key() == key;
    for (const char* key : optional) known = known || it.key() == key;
    if (!known) schema_error(at, "unknown key \"" + it.key() + "\"");
  }
}

inline void expect_tag(const Json& j, const std::string& at, const char* tag) {
  if (!j.contains("type")) return;
  if (!j["type"].is_string() || j["type"].get<std::string>() != tag)
    schema_error(child(at, "type"), std::string("expected type \"") + tag + "\"");
}

inline const Json& expect_array(const Json& j, const std::string& at) {
  if (!j.is_array()) schema_error(at, "expected an array");
  return j;
}

inline std::size_t read_size(const Json& j, const std::string& at) {
  // Parsed literals are unsigned; values built in code may be signed.
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0))
    schema_error(at, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::string read_string(const Json& j, const std::string& at) {
  if (!j.is_string()) schema_error(at, "expected a string");
  return j.get<std::string>();
}

/// Rethrows library preconditions as invariant errors at `at`.
template <typename F>
auto with_invariants(const std::string& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& e) {
    invariant_error(at, e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars and vectors.

/// Scalars are written as canonical strings ("3", "-1/2", "2-3/4i").
inline Json to_json(const Scalar& s) { return s.to_string(); }

/// Accepts a string in the canonical grammar or an integer literal.
inline Scalar scalar_from_json(const Json& j, const std::string& at = "") {
  if (j.is_number_integer()) return Scalar(mpq_class(mpz_class(j.dump())));
  if (j.is_number_float()) detail::schema_error(at, "floating-point numbers are not exact; write a string such as \"1/3\"");
  if (!j.is_string()) detail::schema_error(at, "expected a scalar string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const Error& e) {
    detail::schema_error(at, e.what());
  }
}

inline mpq_class rational_from_json(const Json& j, const std::string& at = "") {
  const Scalar s = scalar_from_json(j, at);
  if (!s.is_real()) detail::invariant_error(at, "expected a real number");
  return s.re();
}

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Vector vector_from_json(const Json& j, std::size_t n, const std::string& at = "") {
  detail::expect_array(j, at);
  if (j.size() != n)
    detail::schema_error(at, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(j.size()));
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], detail::child(at, i)));
  return v;
}

// ---------------------------------------------------------------------------
// Subspaces.

/// {"ambient": n, "basis": [[...], ...]} with the canonical reduced basis.
inline Json to_json(const Subspace& x) {
  Json out;
  out["ambient"] = x.ambient();
  Json rows = Json::array();
  for (const auto& r : x.basis_vectors()) rows.push_back(to_json(r));
  out["basis"] = std::move(rows);
  return out;
}

/// Rows need not be reduced but must be linearly independent.
inline Subspace subspace_from_json(const Json& j, const std::string& at = "") {
  detail::expect_object(j, at, {"ambient", "basis"});
  detail::expect_tag(j, at, "subspace");
  const std::size_t n = detail::read_size(j["ambient"], detail::child(at, "ambient"));
  if (n == 0) detail::invariant_error(detail::child(at, "ambient"), "ambient dimension must be positive");
  const std::string basis_at = detail::child(at, "basis");
  const Json& rows = detail::expect_array(j["basis"], basis_at);
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    vs.push_back(vector_from_json(rows[r], n, detail::child(basis_at, r)));
    if (Subspace::from_rows(ExactMatrix::from_rows(vs, n)).dim() != vs.size())
      detail::invariant_error(detail::child(basis_at, r),
                              r == 0 ? "row is zero" : "row is linearly dependent on the rows before it");
  }
  return Subspace::from_rows(ExactMatrix::from_rows(vs, n));
}

// ---------------------------------------------------------------------------
// Operators.

/// {"eigenvalues": ["0", "1"], "eigenspaces": [subspace, ...]}; the
/// multiplicities are the eigenspace dimensions.
inline Json to_json(const SelfAdjointOperator& a) {
  Json out;
  Json ev = Json::array();
  for (const auto& x : a.spectral().eigenvalues()) ev.push_back(to_json(Scalar(x)));
  out["eigenvalues"] = std::move(ev);
  Json es = Json::array();
  for (const auto& x : a.eigenspaces()) es.push_back(to_json(x));
  out["eigenspaces"] = std::move(es);
  return out;
}

inline SelfAdjointOperator operator_from_json(const Json& j, const std::string& at = "") {
  detail::expect_object(j, at, {"eigenvalues", "eigenspaces"});
  detail::expect_tag(j, at, "operator");
  const std::string ev_at = detail::child(at, "eigenvalues"), es_at = detail::child(at, "eigenspaces");
  const Json& ev = detail::expect_array(j["eigenvalues"], ev_at);
  const Json& es = detail::expect_array(j["eigenspaces"], es_at);
  if (ev.size() != es.size()) detail::schema_error(at, "eigenvalues and eigenspaces differ in length");
  std::vector<mpq_class> sigma;
  std::vector<Subspace> spaces;
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    sigma.push_back(rational_from_json(ev[i], detail::child(ev_at, i)));
    spaces.push_back(subspace_from_json(es[i], detail::child(es_at, i)));
    d.push_back(spaces.back().dim());
  }
  return detail::with_invariants(at, [&] {
    return SelfAdjointOperator::make(SpectralData::make(std::move(sigma), std::move(d)), std::move(spaces));
  });
}

// ---------------------------------------------------------------------------
// Universes and families.

inline Json to_json(const FiniteUniverse& u) {
  Json out;
  out["edges"] = to_string(u.edge_kind());
  out["n"] = u.size() ? u.vertices().front().ambient() : 0;
  out["k"] = u.size() ? u.vertices().front().dim() : 0;
  Json vs = Json::array();
  for (const auto& v : u.vertices()) vs.push_back(to_json(v));
  out["vertices"] = std::move(vs);
  return out;
}

inline FiniteUniverse universe_from_json(const Json& j, const std::string& at = "") {
  detail::expect_object(j, at, {"edges", "n", "k", "vertices"});
  detail::expect_tag(j, at, "universe");
  const std::string edges = detail::read_string(j["edges"], detail::child(at, "edges"));
  if (edges != "grassmann" && edges != "ortho")
    detail::schema_error(detail::child(at, "edges"), "expected \"grassmann\" or \"ortho\"");
  const std::size_t n = detail::read_size(j["n"], detail::child(at, "n"));
  const std::size_t k = detail::read_size(j["k"], detail::child(at, "k"));
  const std::string vs_at = detail::child(at, "vertices");
  const Json& vs = detail::expect_array(j["vertices"], vs_at);
  std::vector<Subspace> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(subspace_from_json(vs[i], detail::child(vs_at, i)));
    if (vertices.back().ambient() != n || vertices.back().dim() != k)
      detail::invariant_error(detail::child(vs_at, i), "vertex is not a " + std::to_string(k) + "-subspace of C^" +
                                                           std::to_string(n));
  }
  return detail::with_invariants(vs_at, [&] { return FiniteUniverse(std::move(vertices), parse_graph_kind(edges)); });
}

inline Json to_json(const PerpClosedFamily& f) {
  Json out;
  Json ms = Json::array();
  for (const auto& x : f.members()) ms.push_back(to_json(x));
  out["members"] = std::move(ms);
  return out;
}

inline PerpClosedFamily family_from_json(const Json& j, const std::string& at = "") {
  detail::expect_object(j, at, {"members"});
  detail::expect_tag(j, at, "family");
  const std::string ms_at = detail::child(at, "members");
  const Json& ms = detail::expect_array(j["members"], ms_at);
  std::vector<Subspace> members;
  for (std::size_t i = 0; i < ms.size(); ++i) members.push_back(subspace_from_json(ms[i], detail::child(ms_at, i)));
  return detail::with_invariants(ms_at, [&] { return PerpClosedFamily::make(members); });
}

// ---------------------------------------------------------------------------
// Documents.

/// Top-level form: the same object with a leading "type" tag.
inline Json tagged(const char* type, const Json& body) {
  Json out;
  out["type"] = type;
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

/// Parses JSON text; syntax errors report 1-based line and column.
inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // Drop the library prefix and its own position text.
    const auto colon = what.find(": ", what.find("column"));
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw DocumentError(DocumentError::Kind::Syntax, "", what, line, column);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

inline Json load_file(const std::string& path) { return parse_text(read_file(path)); }

/// Pretty-printed with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ogl::io

#endif  // OGL_IO_HPP
