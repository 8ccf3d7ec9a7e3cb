#pragma once

// JSON presentations, doubles and cocycles, and the named examples.
//
// Scalars are written as their canonical strings ("3/2", "1 + -1*z3"); integers
// are also accepted on input. Arrays are nested n x n x n for mult and comult,
// flat of length n^3 (big-endian index) for phi, and row i of "antipode" is
// S(e_i). Phi^{-1} is never written; it is recomputed on load.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qhopf/double.hpp"
#include "qhopf/gallery.hpp"

namespace qhopf {

using Json = nlohmann::ordered_json;

namespace detail {

inline Error parse_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::size_t to_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw parse_error(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

inline Json scalar_json(const Scalar& s) { return s.to_string(); }

inline Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw detail::parse_error("scalar must be a string or an integer");
}

inline Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

inline Vector vector_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw detail::parse_error(std::string(what) + " must be an array of length " + std::to_string(n));
  Vector v;
  v.reserve(n);
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

inline Json nested3_json(const TensorElement& t) {
  const std::size_t n = t.dim();
  std::vector<Scalar> dense(n * n * n);
  for (const auto& [f, c] : t.terms()) dense[f] = c;
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json a = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json b = Json::array();
      for (std::size_t k = 0; k < n; ++k) b.push_back(scalar_json(dense[(i * n + j) * n + k]));
      a.push_back(std::move(b));
    }
    out.push_back(std::move(a));
  }
  return out;
}

inline TensorElement nested3_from_json(const Json& j, std::size_t n, const char* what) {
  const std::string msg = std::string(what) + " must be a nested n x n x n array";
  if (!j.is_array() || j.size() != n) throw detail::parse_error(msg);
  std::vector<Scalar> dense;
  dense.reserve(n * n * n);
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != n) throw detail::parse_error(msg);
    for (const auto& b : a) {
      if (!b.is_array() || b.size() != n) throw detail::parse_error(msg);
      for (const auto& c : b) dense.push_back(scalar_from_json(c));
    }
  }
  return TensorElement::from_dense(n, 3, dense);
}

inline Json flat_json(const TensorElement& t) {
  std::vector<Scalar> dense(t.size());
  for (const auto& [f, c] : t.terms()) dense[f] = c;
  return vector_json(dense);
}

inline Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json presentation_json(const AlgebraPresentation& p) {
  Json j;
  j["dim"] = p.dim;
  j["field"] = p.field_order == 1 ? Json{{"type", "Q"}} : Json{{"type", "cyclotomic"}, {"order", p.field_order}};
  j["basis_labels"] = p.basis_labels;
  j["mult"] = nested3_json(p.mult);
  j["unit"] = vector_json(p.unit);
  j["comult"] = nested3_json(p.comult);
  j["counit"] = vector_json(p.counit);
  j["phi"] = flat_json(p.phi);
  j["antipode"] = matrix_json(p.antipode);
  j["alpha"] = vector_json(p.alpha);
  j["beta"] = vector_json(p.beta);
  return j;
}

inline AlgebraPresentation presentation_from_json(const Json& j) {
  using detail::field;
  AlgebraPresentation p;
  p.dim = detail::to_index(field(j, "dim"), "dim");
  const std::size_t n = p.dim;
  if (n == 0 || n > 256) throw detail::parse_error("dim out of range");
  const Json& fj = field(j, "field");
  const Json& type = field(fj, "type");
  if (type == "Q") {
    p.field_order = 1;
  } else if (type == "cyclotomic") {
    p.field_order = static_cast<unsigned>(detail::to_index(field(fj, "order"), "field order"));
    if (p.field_order == 0) throw detail::parse_error("field order must be positive");
  } else {
    throw detail::parse_error("field type must be \"Q\" or \"cyclotomic\"");
  }
  if (j.contains("basis_labels")) {
    const Json& labels = j.at("basis_labels");
    if (!labels.is_array() || labels.size() != n) throw detail::parse_error("basis_labels must have length dim");
    for (const auto& l : labels) {
      if (!l.is_string()) throw detail::parse_error("basis labels must be strings");
      p.basis_labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) p.basis_labels.push_back("e" + std::to_string(i));
  }
  p.mult = nested3_from_json(field(j, "mult"), n, "mult");
  p.unit = vector_from_json(field(j, "unit"), n, "unit");
  p.comult = nested3_from_json(field(j, "comult"), n, "comult");
  p.counit = vector_from_json(field(j, "counit"), n, "counit");
  p.phi = TensorElement::from_dense(n, 3, vector_from_json(field(j, "phi"), n * n * n, "phi"));
  const Json& s = field(j, "antipode");
  if (!s.is_array() || s.size() != n) throw detail::parse_error("antipode must be an n x n array");
  p.antipode = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vector row = vector_from_json(s[r], n, "antipode row");
    for (std::size_t c = 0; c < n; ++c) p.antipode(r, c) = row[c];
  }
  p.alpha = vector_from_json(field(j, "alpha"), n, "alpha");
  p.beta = vector_from_json(field(j, "beta"), n, "beta");
  // Every scalar must live in the declared field.
  auto check_field = [&](const Scalar& x) {
    if (x.is_cyclotomic() && x.order() != p.field_order)
      throw detail::parse_error("scalar " + x.to_string() + " is outside the declared field");
  };
  for (const auto* t : {&p.mult, &p.comult, &p.phi})
    for (const auto& [f, c] : t->terms()) check_field(c);
  for (const auto* v : {&p.unit, &p.counit, &p.alpha, &p.beta})
    for (const auto& c : *v) check_field(c);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) check_field(p.antipode(r, c));
  return p;
}

/// The double in presentation format, plus its R-matrix and the base algebra.
inline Json double_json(const QuantumDouble& D) {
  Json j = presentation_json(D.algebra().presentation());
  j["r_matrix"] = flat_json(D.R());
  j["source"] = presentation_json(D.base().presentation());
  return j;
}

// ---- Groups, cocycles and named examples ----

inline GroupTable group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group3();
  if (name.size() >= 2 && name[0] == 'Z' && name.find_first_not_of("0123456789", 1) == std::string::npos && name.size() <= 4) {
    const auto n = std::stoul(name.substr(1));
    if (n >= 1) return cyclic_group(n);
  }
  throw detail::parse_error("unknown group \"" + name + "\" (expected Zn or S3)");
}

inline ThreeCocycle cocycle_from_json(const Json& values, const GroupTable& g) {
  ThreeCocycle w;
  w.group = g;
  const TensorElement t = nested3_from_json(values, g.order, "cocycle");
  w.values.assign(g.order * g.order * g.order, Scalar());
  for (const auto& [f, c] : t.terms()) w.values[f] = c;
  for (const auto& c : w.values)
    if (c.is_cyclotomic()) w.field_order = c.order();
  return w;
}

struct Input {
  std::string descriptor;
  AlgebraPresentation presentation;
  bool double_focus = false;  // the subject of interest is D(H) (dpr inputs)
  Scalar alpha_scale = Scalar(1);
  Scalar beta_scale = Scalar(1);
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::size_t small_number(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos) throw parse_error("bad " + what + " \"" + s + "\"");
  return std::stoul(s);
}

/// Rescales alpha and beta when eps(alpha), eps(beta) differ from 1.
inline void normalize_input(Input& in) {
  Structure h(in.presentation);
  const Scalar ea = h.counit_of(in.presentation.alpha), eb = h.counit_of(in.presentation.beta);
  // eps(alpha) eps(beta) = 0 is left for validation to report
  if ((ea.is_one() && eb.is_one()) || ea.is_zero() || eb.is_zero()) return;
  auto nz = normalize(std::move(in.presentation));
  in.presentation = std::move(nz.presentation);
  in.alpha_scale = nz.alpha_scale;
  in.beta_scale = nz.beta_scale;
}

}  // namespace detail

/// "group:Zn", "group:S3", "dual-omega:Zn:q", "dpr:Zn:q", "sweedler".
inline Input example_input(const std::string& name) {
  const auto parts = detail::split(name, ':');
  Input in;
  in.descriptor = name;
  if (parts.size() == 1 && parts[0] == "sweedler") {
    in.presentation = sweedler_h4();
  } else if (parts.size() == 2 && parts[0] == "group") {
    in.presentation = group_algebra(group_by_name(parts[1]));
  } else if (parts.size() == 3 && (parts[0] == "dual-omega" || parts[0] == "dpr")) {
    if (parts[1].empty() || parts[1][0] != 'Z') throw detail::parse_error("cocycles are available for cyclic groups Zn only");
    const std::size_t n = detail::small_number(parts[1].substr(1), "group order");
    const std::size_t q = detail::small_number(parts[2], "cocycle class");
    if (n == 0 || q >= n) throw detail::parse_error("need n >= 1 and 0 <= q < n");
    in.presentation = dual_group_algebra_twisted(cocycle_cyclic(n, q));
    in.double_focus = parts[0] == "dpr";
  } else {
    throw detail::parse_error("unknown example \"" + name + "\"");
  }
  return in;
}

/// A presentation, a serialized double (its "source" is used), or a cocycle
/// document {"group": "Zn", "cocycle": n x n x n, "construction": "dual-omega" | "dpr"}.
inline Input input_from_json(const Json& j, const std::string& descriptor) {
  Input in;
  in.descriptor = descriptor;
  if (j.is_object() && j.contains("cocycle")) {
    const GroupTable g = group_by_name(detail::field(j, "group").get<std::string>());
    const std::string kind = j.contains("construction") ? j.at("construction").get<std::string>() : "dual-omega";
    if (kind != "dual-omega" && kind != "dpr") throw detail::parse_error("construction must be dual-omega or dpr");
    in.presentation = dual_group_algebra_twisted(cocycle_from_json(j.at("cocycle"), g));
    in.double_focus = kind == "dpr";
    return in;
  }
  if (j.is_object() && j.contains("source")) {
    in.presentation = presentation_from_json(j.at("source"));
    in.double_focus = true;
  } else {
    in.presentation = presentation_from_json(j);
  }
  detail::normalize_input(in);
  return in;
}

inline Input input_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw detail::parse_error("cannot open \"" + path + "\"");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw detail::parse_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    return input_from_json(j, path);
  } catch (const nlohmann::json::exception& e) {
    throw detail::parse_error(std::string("malformed document: ") + e.what());
  }
}

}  // namespace qhopf
