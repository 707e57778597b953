#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "eigenmatrix/error.hpp"

namespace eigenmatrix::cli {

namespace {

[[noreturn]] void schema(const std::string& why) { throw Error(ErrorKind::SchemaError, why); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::size_t positive_count(const Json& j, const char* key) {
  if (!j.contains(key)) schema(std::string("missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) schema(std::string("\"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

}  // namespace

Matrix parse_matrix_json(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) schema("matrix must be a JSON object");
  const std::size_t rows = positive_count(j, "rows");
  const std::size_t cols = positive_count(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) schema("missing \"entries\" array");
  const Json& entries = j.at("entries");
  if (entries.size() != rows) {
    schema("\"entries\" has " + std::to_string(entries.size()) + " rows, expected " + std::to_string(rows));
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries[r];
    if (!row.is_array() || row.size() != cols) {
      schema("row " + std::to_string(r) + " must be an array of " + std::to_string(cols) + " scalars");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string where = "row " + std::to_string(r) + ", col " + std::to_string(c);
      if (!row[c].is_string()) schema(where + ": scalar must be a string");
      try {
        m(r, c) = gq_parse(row[c].get<std::string>());
      } catch (const Error& e) {
        throw Error(ErrorKind::SchemaError, where + ": " + e.what());
      }
    }
  }
  return m;
}

Spectrum parse_spectrum_json(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("eigenvalues") || !j.at("eigenvalues").is_array()) {
    schema("spectrum must be {\"eigenvalues\":[...]}");
  }
  std::vector<Eigenvalue> pairs;
  std::size_t k = 0;
  for (const auto& e : j.at("eigenvalues")) {
    const std::string where = "eigenvalue " + std::to_string(k++);
    if (!e.is_object() || !e.contains("value") || !e.at("value").is_string()) schema(where + ": missing \"value\"");
    if (!e.contains("multiplicity") || !e.at("multiplicity").is_number_integer() ||
        e.at("multiplicity").get<long long>() <= 0) {
      schema(where + ": \"multiplicity\" must be a positive integer");
    }
    try {
      pairs.push_back({gq_parse(e.at("value").get<std::string>()), e.at("multiplicity").get<std::size_t>()});
    } catch (const Error& err) {
      throw Error(ErrorKind::SchemaError, where + ": " + err.what());
    }
  }
  if (pairs.empty()) schema("spectrum is empty");
  return Spectrum(std::move(pairs));
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(gq_format(m(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v.entries()) out.push_back(gq_format(x));
  return out;
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Json spectrum_to_json(const Spectrum& s) {
  Json list = Json::array();
  for (const auto& e : s) list.push_back({{"value", gq_format(e.value)}, {"multiplicity", e.alg_mult}});
  return {{"eigenvalues", std::move(list)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace eigenmatrix::cli
