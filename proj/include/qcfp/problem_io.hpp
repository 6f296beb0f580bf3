#ifndef QCFP_PROBLEM_IO_HPP
#define QCFP_PROBLEM_IO_HPP

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcfp/errors.hpp"
#include "qcfp/functions.hpp"
#include "qcfp/oracle.hpp"
#include "qcfp/point.hpp"

namespace qcfp {

// On-disk problem description: a JSON document with "dimension",
// "functions" (family entries), optional "x0" and "feasible_reference".
struct ProblemFile {
  std::size_t dimension = 0;
  std::vector<FamilySpec> functions;
  std::optional<std::vector<double>> x0;
  std::optional<std::vector<double>> feasible_reference;
};

struct ParsedProblem {
  FeasibilityProblem problem;
  std::optional<Point> x0;
  std::optional<Point> feasible_reference;
};

namespace detail {

using pjson = nlohmann::ordered_json;

inline double schema_number(const pjson& j, const std::string& context) {
  if (!j.is_number()) {
    throw SchemaError(context + " must be a number");
  }
  return j.get<double>();
}

inline double schema_positive(const pjson& j, const std::string& context) {
  const double v = schema_number(j, context);
  if (!(v > 0.0)) {
    throw SchemaError(context + " must be > 0");
  }
  return v;
}

inline std::vector<double> schema_vector(const pjson& j, std::size_t dim,
                                         const std::string& context) {
  if (!j.is_array()) {
    throw SchemaError(context + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const pjson& e : j) {
    out.push_back(schema_number(e, context + " entry"));
  }
  if (out.size() != dim) {
    throw SchemaError(context + " must have length " + std::to_string(dim) +
                      ", got " + std::to_string(out.size()));
  }
  return out;
}

inline const pjson& schema_require(const pjson& obj, const std::string& key,
                                   const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError("missing key '" + key + "' in " + context);
  }
  return *it;
}

inline void schema_allow_only(const pjson& obj,
                              const std::vector<std::string>& allowed,
                              const std::string& context) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const std::string& k : allowed) {
      if (item.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw SchemaError("unknown key '" + item.key() + "' in " + context);
    }
  }
}

inline FamilySpec parse_family_entry(const pjson& obj, std::size_t dim,
                                     const std::string& context) {
  if (!obj.is_object()) {
    throw SchemaError(context + " must be an object");
  }
  const pjson& fam = schema_require(obj, "family", context);
  if (!fam.is_string()) {
    throw SchemaError("'family' in " + context + " must be a string");
  }
  FamilySpec fs;
  fs.family = family_from_name(fam.get<std::string>());
  switch (fs.family) {
    case Family::affine:
      schema_allow_only(obj, {"family", "a", "b", "L", "delta", "label"},
                        context);
      fs.a = schema_vector(schema_require(obj, "a", context), dim,
                           context + " 'a'");
      fs.b = schema_number(schema_require(obj, "b", context), context + " 'b'");
      break;
    case Family::ball:
      schema_allow_only(obj, {"family", "center", "radius", "L", "delta",
                              "label"},
                        context);
      fs.center = schema_vector(schema_require(obj, "center", context), dim,
                                context + " 'center'");
      fs.radius = schema_number(schema_require(obj, "radius", context),
                                context + " 'radius'");
      break;
    case Family::linear_fractional:
      schema_allow_only(obj, {"family", "a", "b", "c", "d", "L", "delta",
                              "label"},
                        context);
      fs.a = schema_vector(schema_require(obj, "a", context), dim,
                           context + " 'a'");
      fs.b = schema_number(schema_require(obj, "b", context), context + " 'b'");
      fs.c = schema_vector(schema_require(obj, "c", context), dim,
                           context + " 'c'");
      fs.d = schema_number(schema_require(obj, "d", context), context + " 'd'");
      schema_require(obj, "L", context);
      break;
    case Family::sqrt_abs_shift:
      schema_allow_only(obj, {"family", "shift", "L", "delta", "label"},
                        context);
      fs.shift = schema_number(schema_require(obj, "shift", context),
                               context + " 'shift'");
      break;
    case Family::floor_ramp:
      schema_allow_only(obj, {"family", "L", "delta", "label"}, context);
      break;
    case Family::monotone_composition: {
      schema_allow_only(obj, {"family", "outer", "inner", "a", "b", "center",
                              "radius", "L", "delta", "label"},
                        context);
      const pjson& outer = schema_require(obj, "outer", context);
      const pjson& inner = schema_require(obj, "inner", context);
      if (!outer.is_string() || !inner.is_string()) {
        throw SchemaError("'outer' and 'inner' in " + context +
                          " must be strings");
      }
      fs.outer = outer.get<std::string>();
      fs.inner = inner.get<std::string>();
      if (fs.outer != "identity" && fs.outer != "cube") {
        throw SchemaError("'outer' in " + context +
                          " must be identity or cube");
      }
      if (fs.inner == "affine") {
        fs.a = schema_vector(schema_require(obj, "a", context), dim,
                             context + " 'a'");
        fs.b = schema_number(schema_require(obj, "b", context),
                             context + " 'b'");
      } else if (fs.inner == "ball") {
        fs.center = schema_vector(schema_require(obj, "center", context), dim,
                                  context + " 'center'");
        fs.radius = schema_number(schema_require(obj, "radius", context),
                                  context + " 'radius'");
      } else {
        throw SchemaError("'inner' in " + context + " must be affine or ball");
      }
      schema_require(obj, "L", context);
      schema_require(obj, "delta", context);
      break;
    }
  }
  if (obj.contains("L")) {
    fs.holder_modulus = schema_positive(obj["L"], context + " 'L'");
  }
  if (obj.contains("delta")) {
    fs.holder_order = schema_positive(obj["delta"], context + " 'delta'");
  }
  if (obj.contains("label")) {
    const pjson& label = obj["label"];
    if (!label.is_string()) {
      throw SchemaError("'label' in " + context + " must be a string");
    }
    fs.label = label.get<std::string>();
  }
  return fs;
}

}  // namespace detail

// Parses a problem document. Structural faults raise SchemaError with key
// context; malformed JSON raises ParseError.
inline ProblemFile parse_problem_text(const std::string& text) {
  detail::pjson doc;
  try {
    doc = detail::pjson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) {
    throw SchemaError("problem document must be a JSON object");
  }
  detail::schema_allow_only(
      doc, {"dimension", "functions", "x0", "feasible_reference"},
      "problem document");
  const detail::pjson& dim_j =
      detail::schema_require(doc, "dimension", "problem document");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) {
    throw SchemaError("'dimension' must be an integer >= 1");
  }
  ProblemFile pf;
  pf.dimension = dim_j.get<std::size_t>();
  const detail::pjson& fns =
      detail::schema_require(doc, "functions", "problem document");
  if (!fns.is_array() || fns.empty()) {
    throw SchemaError("'functions' must be a nonempty array");
  }
  for (std::size_t i = 0; i < fns.size(); ++i) {
    pf.functions.push_back(detail::parse_family_entry(
        fns[i], pf.dimension, "functions[" + std::to_string(i) + "]"));
  }
  if (doc.contains("x0")) {
    pf.x0 = detail::schema_vector(doc["x0"], pf.dimension, "'x0'");
  }
  if (doc.contains("feasible_reference")) {
    pf.feasible_reference = detail::schema_vector(
        doc["feasible_reference"], pf.dimension, "'feasible_reference'");
  }
  return pf;
}

inline ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open problem file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

// Canonical serialization: fixed key order per family, two-space indent,
// trailing newline. Writing then parsing is the identity on every field,
// and a document that has been written once re-serializes byte-identically.
inline std::string write_problem_text(const ProblemFile& pf) {
  detail::pjson doc;
  doc["dimension"] = pf.dimension;
  detail::pjson fns = detail::pjson::array();
  for (const FamilySpec& fs : pf.functions) {
    detail::pjson o;
    o["family"] = family_name(fs.family);
    switch (fs.family) {
      case Family::affine:
        o["a"] = fs.a;
        o["b"] = fs.b;
        break;
      case Family::ball:
        o["center"] = fs.center;
        o["radius"] = fs.radius;
        break;
      case Family::linear_fractional:
        o["a"] = fs.a;
        o["b"] = fs.b;
        o["c"] = fs.c;
        o["d"] = fs.d;
        break;
      case Family::sqrt_abs_shift:
        o["shift"] = fs.shift;
        break;
      case Family::floor_ramp:
        break;
      case Family::monotone_composition:
        o["outer"] = fs.outer;
        o["inner"] = fs.inner;
        if (fs.inner == "affine") {
          o["a"] = fs.a;
          o["b"] = fs.b;
        } else {
          o["center"] = fs.center;
          o["radius"] = fs.radius;
        }
        break;
    }
    if (fs.holder_modulus) {
      o["L"] = *fs.holder_modulus;
    }
    if (fs.holder_order) {
      o["delta"] = *fs.holder_order;
    }
    if (fs.label) {
      o["label"] = *fs.label;
    }
    fns.push_back(std::move(o));
  }
  doc["functions"] = std::move(fns);
  if (pf.x0) {
    doc["x0"] = *pf.x0;
  }
  if (pf.feasible_reference) {
    doc["feasible_reference"] = *pf.feasible_reference;
  }
  return doc.dump(2) + "\n";
}

inline void save_problem(const ProblemFile& pf, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write problem file '" + path + "'");
  }
  out << write_problem_text(pf);
}

// Materializes the oracles. Entries without a label get "f1".."fm" by
// position.
inline ParsedProblem build_problem(const ProblemFile& pf) {
  if (pf.dimension < 1) {
    throw SchemaError("problem dimension must be >= 1");
  }
  if (pf.functions.empty()) {
    throw SchemaError("problem requires at least one function");
  }
  std::vector<QcOracle> oracles;
  oracles.reserve(pf.functions.size());
  for (std::size_t i = 0; i < pf.functions.size(); ++i) {
    QcOracle o = make_oracle(pf.functions[i], pf.dimension);
    if (!pf.functions[i].label) {
      o = o.with_label("f" + std::to_string(i + 1));
    }
    oracles.push_back(std::move(o));
  }
  std::optional<Point> x0;
  if (pf.x0) {
    x0 = Point(*pf.x0);
  }
  std::optional<Point> ref;
  if (pf.feasible_reference) {
    ref = Point(*pf.feasible_reference);
  }
  return ParsedProblem{
      FeasibilityProblem(pf.dimension, std::move(oracles)), std::move(x0),
      std::move(ref)};
}

inline ParsedProblem parse_problem(const std::string& path) {
  return build_problem(load_problem(path));
}

}  // namespace qcfp

#endif  // QCFP_PROBLEM_IO_HPP
