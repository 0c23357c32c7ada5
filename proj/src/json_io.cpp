// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/json_io.hpp"

#include <charconv>
#include <string>

#include "eqdecomp/error.hpp"

namespace eqdecomp {

using nlohmann::json;

namespace {

std::string exact_decimal(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    double x = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw ParseError("malformed number '" + s + "'");
    return x;
  }
  throw ParseError("expected a number or numeric string");
}

std::size_t size_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) throw ParseError(std::string("missing or invalid '") + key + "'");
  return j.at(key).get<std::size_t>();
}

}  // namespace

json complex_to_json(Complex z) { return json::array({exact_decimal(z.real()), exact_decimal(z.imag())}); }

Complex complex_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return {number_from_json(j[0]), number_from_json(j[1])};
  if (j.is_number() || j.is_string()) return {number_from_json(j), 0.0};
  throw ParseError("expected a [re, im] pair");
}

json matrix_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<Complex>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    auto& out = rows.emplace_back();
    for (const auto& entry : row) out.push_back(complex_from_json(entry));
  }
  return DenseMatrix::from_rows(rows);
}

json decomposition_to_json(const Decomposition& d) {
  json ordering = json::array();
  for (Vertex v : d.ordering) ordering.push_back(v + 1);
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(matrix_to_json(b));
  return json{{"k", d.k},
              {"r", d.r},
              {"p", d.p},
              {"ordering", ordering},
              {"divisorBlock", matrix_to_json(d.divisor_block)},
              {"blocks", blocks},
              {"omega", complex_to_json(d.omega)}};
}

Decomposition decomposition_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("decomposition must be a JSON object");
  Decomposition d;
  d.k = size_from_json(j, "k");
  d.r = size_from_json(j, "r");
  d.p = size_from_json(j, "p");
  if (!j.contains("ordering") || !j.at("ordering").is_array()) throw ParseError("missing 'ordering'");
  for (const auto& v : j.at("ordering")) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) throw ParseError("ordering entries must be positive integers");
    d.ordering.push_back(v.get<std::size_t>() - 1);
  }
  if (!j.contains("divisorBlock")) throw ParseError("missing 'divisorBlock'");
  d.divisor_block = matrix_from_json(j.at("divisorBlock"));
  if (!j.contains("blocks") || !j.at("blocks").is_array()) throw ParseError("missing 'blocks'");
  for (const auto& b : j.at("blocks")) d.blocks.push_back(matrix_from_json(b));
  if (!j.contains("omega")) throw ParseError("missing 'omega'");
  d.omega = complex_from_json(j.at("omega"));
  return d;
}

json spectrum_to_json(const SpectrumMultiset& s) {
  json values = json::array();
  for (const auto& z : s.sorted_values()) values.push_back(complex_to_json(z));
  return json{{"values", values}, {"tolerance", exact_decimal(s.tolerance)}};
}

SpectrumMultiset spectrum_from_json(const json& j) {
  SpectrumMultiset s;
  if (!j.is_object() || !j.contains("values") || !j.at("values").is_array()) throw ParseError("missing 'values'");
  for (const auto& v : j.at("values")) s.values.push_back(complex_from_json(v));
  if (j.contains("tolerance")) s.tolerance = number_from_json(j.at("tolerance"));
  return s;
}

json bounds_to_json(const std::vector<SimpleEigBound>& bounds) {
  json out = json::array();
  for (const auto& b : bounds) {
    json entry{{"kind", std::string(to_string(b.kind))}, {"bound", b.bound}, {"n", b.n}};
    if (b.k) entry["k"] = b.k;
    if (b.r) entry["r"] = b.r;
    if (b.kind == BoundKind::BasicOdd || b.kind == BoundKind::BasicEven) entry["N"] = b.fixed_points;
    out.push_back(std::move(entry));
  }
  return out;
}

json spectral_report_to_json(const SpectrumMultiset& partial, const SpectralBoundsReport& report) {
  json out{{"partial", spectrum_to_json(partial)}, {"radiusLowerBound", exact_decimal(report.radius_lower_bound)}};
  out["gapUpperBound"] = report.gap_upper_bound ? json(exact_decimal(*report.gap_upper_bound)) : json(nullptr);
  return out;
}

}  // namespace eqdecomp
