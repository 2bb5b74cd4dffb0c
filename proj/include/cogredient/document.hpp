#pragma once

// JSON documents exchanged by the command-line tool. Element encodings mirror
// RingElement encodings: an integer for zmod, r integers for gr, and m arrays
// of r integers for trunc.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cogredient/error.hpp"
#include "cogredient/localring.hpp"
#include "cogredient/matrix.hpp"
#include "cogredient/oracle.hpp"
#include "cogredient/reduction.hpp"

namespace cogredient {

using Json = nlohmann::ordered_json;

inline Json element_to_json(const Element& a) {
  const RingContext& ring = detail::ring_of(a);
  const auto c = a.coeffs();
  switch (ring.family()) {
    case RingFamily::kZmod:
      return c[0];
    case RingFamily::kGalois:
      return Json(std::vector<std::uint64_t>(c.begin(), c.end()));
    case RingFamily::kTrunc: {
      Json blocks = Json::array();
      for (unsigned b = 0; b < ring.truncation(); ++b) {
        const auto block = c.subspan(std::size_t{b} * ring.degree(), ring.degree());
        blocks.push_back(std::vector<std::uint64_t>(block.begin(), block.end()));
      }
      return blocks;
    }
  }
  return nullptr;
}

namespace detail {
inline std::uint64_t json_coefficient(const Json& v) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError("element encoding: expected a non-negative integer, got " + v.dump());
  }
  return v.get<std::uint64_t>();
}
}  // namespace detail

inline Element element_from_json(const RingContext& ring, const Json& v) {
  std::vector<std::uint64_t> coeffs;
  switch (ring.family()) {
    case RingFamily::kZmod:
      coeffs.push_back(detail::json_coefficient(v));
      break;
    case RingFamily::kGalois:
      if (!v.is_array()) throw ParseError("element encoding: gr elements are arrays of " + std::to_string(ring.degree()) + " integers");
      for (const Json& c : v) coeffs.push_back(detail::json_coefficient(c));
      break;
    case RingFamily::kTrunc:
      if (!v.is_array() || v.size() != ring.truncation()) {
        throw ParseError("element encoding: trunc elements are arrays of " + std::to_string(ring.truncation()) + " blocks");
      }
      for (const Json& block : v) {
        if (!block.is_array() || block.size() != ring.degree()) {
          throw ParseError("element encoding: trunc blocks are arrays of " + std::to_string(ring.degree()) + " integers");
        }
        for (const Json& c : block) coeffs.push_back(detail::json_coefficient(c));
      }
      break;
  }
  return ring.from_coeffs(coeffs);
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const Ring& ring, const Json& v, std::size_t n) {
  if (!v.is_array() || v.size() != n) throw ParseError("entries: expected " + std::to_string(n) + " rows");
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = v[i];
    if (!row.is_array() || row.size() != n) throw ParseError("entries: row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = element_from_json(*ring, row[j]);
  }
  return m;
}

// ---- MatrixDocument ---------------------------------------------------------

struct MatrixDocument {
  std::string ring_spec;  // as written in the document
  Ring ring;
  Matrix matrix;

  friend bool operator==(const MatrixDocument& a, const MatrixDocument& b) {
    return a.ring_spec == b.ring_spec && a.ring->spec() == b.ring->spec() && a.matrix.rows() == b.matrix.rows() &&
           matrix_to_json(a.matrix) == matrix_to_json(b.matrix);
  }
};

inline Json to_json(const MatrixDocument& doc) {
  Json out;
  out["ring"] = doc.ring_spec;
  out["n"] = doc.matrix.rows();
  out["entries"] = matrix_to_json(doc.matrix);
  return out;
}

/// Parses {"ring": spec, "n": k, "entries": [[...]]}. When `ring_override` is
/// given it supplies a missing "ring" field and must agree with a present one.
inline MatrixDocument parse_matrix_document(const Json& v, const std::optional<std::string>& ring_override = {}) {
  if (!v.is_object()) throw ParseError("matrix document: expected a JSON object");
  std::string spec;
  if (v.contains("ring")) {
    if (!v["ring"].is_string()) throw ParseError("matrix document: \"ring\" must be a string");
    spec = v["ring"].get<std::string>();
  }
  if (ring_override) {
    if (spec.empty()) {
      spec = *ring_override;
    } else if (make_ring(spec)->spec() != make_ring(*ring_override)->spec()) {
      throw ParseError("matrix document: ring '" + spec + "' differs from --ring '" + *ring_override + "'");
    }
  }
  if (spec.empty()) throw ParseError("matrix document: no ring given");
  Ring ring = make_ring(spec);
  if (!v.contains("n") || !v["n"].is_number_unsigned() || v["n"].get<std::uint64_t>() == 0) {
    throw ParseError("matrix document: \"n\" must be a positive integer");
  }
  const auto n = v["n"].get<std::size_t>();
  if (!v.contains("entries")) throw ParseError("matrix document: missing \"entries\"");
  Matrix m = matrix_from_json(ring, v["entries"], n);
  return {std::move(spec), std::move(ring), std::move(m)};
}

inline MatrixDocument parse_matrix_document(const std::string& text, const std::optional<std::string>& ring_override = {}) {
  Json v;
  try {
    v = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("matrix document: invalid JSON: ") + e.what());
  }
  return parse_matrix_document(v, ring_override);
}

inline MatrixDocument parse_matrix_document(const char* text, const std::optional<std::string>& ring_override = {}) {
  return parse_matrix_document(std::string(text), ring_override);
}

// ---- ResultDocument -----------------------------------------------------------

struct ResultDocument {
  StandardForm form;
  std::optional<Matrix> witness;
  std::optional<Matrix> target;
  bool verified = false;
  std::vector<ReductionStep> steps;
};

inline Json form_to_json(const StandardForm& form) {
  Json out;
  out["nu"] = form.nu;
  out["delta"] = form.delta;
  out["delta_kind"] = std::string(to_string(form.kind));
  out["z"] = element_to_json(form.z());
  return out;
}

inline Json to_json(const ResultDocument& doc) {
  Json out;
  out["form"] = form_to_json(doc.form);
  if (doc.witness) out["witness"] = matrix_to_json(*doc.witness);
  if (doc.target) out["target"] = matrix_to_json(*doc.target);
  out["verified"] = doc.verified;
  if (!doc.steps.empty()) {
    Json steps = Json::array();
    for (const ReductionStep& step : doc.steps) {
      Json s;
      s["stage"] = step.stage;
      s["transform"] = matrix_to_json(step.transform);
      s["result"] = matrix_to_json(step.result);
      steps.push_back(std::move(s));
    }
    out["steps"] = std::move(steps);
  }
  return out;
}

// ---- OrbitReport ----------------------------------------------------------------

inline Json to_json(const OrbitReport& report) {
  Json out;
  out["ring"] = report.ring->spec();
  out["n"] = report.n;
  out["total"] = report.total;
  out["orbit_count"] = report.orbit_count();
  Json sizes = Json::array();
  for (const Orbit& o : report.orbits) sizes.push_back(o.size);
  out["orbit_sizes"] = std::move(sizes);
  Json orbits = Json::array();
  for (const Orbit& o : report.orbits) {
    Json jo;
    jo["size"] = o.size;
    jo["representative"] = matrix_to_json(o.representative);
    jo["det_square"] = o.det_square;
    Json forms = Json::array();
    for (const StandardForm& f : o.canonical_forms) forms.push_back(form_to_json(f));
    jo["canonical_forms"] = std::move(forms);
    orbits.push_back(std::move(jo));
  }
  out["orbits"] = std::move(orbits);
  Json checks;
  checks["two_orbits"] = report.checks.two_orbits;
  checks["canonical_separation"] = report.checks.canonical_separation;
  checks["det_class_separation"] = report.checks.det_class_separation;
  checks["classify_consistent"] = report.checks.classify_consistent;
  checks["reduce_witnesses"] = report.checks.reduce_witnesses;
  out["checks"] = std::move(checks);
  out["reduce_checked"] = report.reduce_checked;
  out["passed"] = report.passed();
  if (!report.failure.empty()) {
    out["failure"] = report.failure;
    if (report.counterexample) out["counterexample"] = matrix_to_json(*report.counterexample);
  }
  return out;
}

}  // namespace cogredient
