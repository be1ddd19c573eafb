#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ginv/blocks.hpp"
#include "ginv/checks.hpp"
#include "ginv/suite.hpp"
#include "ginv/version.hpp"

namespace ginv::io {

using Json = nlohmann::ordered_json;

// Rationals travel as strings so that no precision is lost.
inline Json to_json(const GaussianRational& z) { return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

inline Json to_json(const CMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace detail {

inline BigRational rational_field(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  if (!it->is_string()) throw ParseError(where + "." + key + ": expected a rational string");
  try {
    return BigRational::parse(it->get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + "." + key + ": " + e.what());
  }
}

inline std::size_t positive_size(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  if (!it->is_number_integer() || it->get<std::int64_t>() <= 0)
    throw ParseError(where + "." + key + ": expected a positive integer");
  return it->get<std::size_t>();
}

// 1-based line and column of a byte offset.
inline std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace detail

inline CMatrix matrix_from_json(const Json& j, const std::string& where = "matrix") {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const std::size_t rows = detail::positive_size(j, "rows", where);
  const std::size_t cols = detail::positive_size(j, "cols", where);
  const auto it = j.find("entries");
  if (it == j.end() || !it->is_array()) throw ParseError(where + ": \"entries\" must be an array of rows");
  if (it->size() != rows)
    throw ParseError(where + ".entries: " + std::to_string(it->size()) + " rows, expected " + std::to_string(rows));
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = (*it)[i];
    const std::string row_where = where + ".entries[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols)
      throw ParseError(row_where + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string entry_where = row_where + "[" + std::to_string(c) + "]";
      if (!row[c].is_object()) throw ParseError(entry_where + ": expected {\"re\", \"im\"}");
      m(i, c) = GaussianRational(detail::rational_field(row[c], "re", entry_where),
                                 detail::rational_field(row[c], "im", entry_where));
    }
  }
  return m;
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": malformed JSON at " + detail::position(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline CMatrix parse_matrix_text(const std::string& text, const std::string& source = "<input>") {
  return matrix_from_json(parse_json_text(text, source), source);
}

inline CMatrix parse_matrix_file(const std::filesystem::path& path) {
  return parse_matrix_text(read_text(path), path.string());
}

class IoError : public Error {
public:
  using Error::Error;
};

// Writes to a sibling temporary and renames it over the target.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(tmp.string() + ": cannot open for writing");
    out << content;
    if (!out.flush()) throw IoError(tmp.string() + ": write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError(path.string() + ": rename failed");
  }
}

inline void write_matrix_file(const std::filesystem::path& path, const CMatrix& m) {
  write_atomic(path, to_json(m).dump(2) + "\n");
}

inline Json to_json(const CheckResult& r) {
  Json j{{"checkName", r.name}, {"paperRef", r.reference}, {"pass", r.pass()},
         {"verdict", std::string(to_string(r.verdict))}};
  if (!r.instance.empty()) j["instance"] = r.instance;
  if (r.witness) {
    Json w{{"condition", r.witness->condition}};
    if (!r.witness->detail.empty()) w["detail"] = r.witness->detail;
    if (r.witness->lhs) w["lhs"] = to_json(*r.witness->lhs);
    if (r.witness->rhs) w["rhs"] = to_json(*r.witness->rhs);
    Json inputs = Json::object();
    for (const auto& in : r.witness->inputs) inputs[in.name] = to_json(in.value);
    w["inputs"] = std::move(inputs);
    j["witness"] = std::move(w);
  }
  return j;
}

struct ReportMeta {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t dim_max = 0;
  std::size_t index_max = 0;
  std::uint64_t entry_bound = 3;
  std::vector<std::size_t> ms;
};

inline Json report_to_json(const ReportMeta& meta, const std::vector<CheckResult>& results) {
  const SuiteSummary s = summarize(results);
  Json out;
  out["meta"] = Json{{"seed", meta.seed},
                     {"trials", meta.trials},
                     {"dims", Json{{"max", meta.dim_max}, {"indexMax", meta.index_max}}},
                     {"entryBound", meta.entry_bound},
                     {"mList", meta.ms},
                     {"toolVersion", kVersion}};
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  out["results"] = std::move(arr);
  out["summary"] = Json{{"total", s.total},
                        {"passed", s.passed},
                        {"failed", s.failed},
                        {"hypothesisViolated", s.hypothesis_violated}};
  return out;
}

inline Json to_json(const PierceBlocks<GaussianRational>& b, std::size_t m, const CMatrix& mwg) {
  Json c = Json::array();
  for (const auto& ci : b.c) c.push_back(to_json(ci));
  return Json{{"m", m},      {"p", to_json(b.p)}, {"t", to_json(b.t)},   {"s", to_json(b.s)},
              {"n", to_json(b.n)}, {"c", std::move(c)}, {"mwg", to_json(mwg)}};
}

} // namespace ginv::io
