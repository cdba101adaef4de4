#include "cli/io.hpp"

#include <fstream>
#include <sstream>

#include "mec/error.hpp"

namespace mec::cli {

namespace {

[[noreturn]] void bad(std::string_view origin, const std::string& what) {
  throw Error(ErrorCode::kBadInput, std::string(origin) + ": " + what);
}

RawDistribution numbers(const Json& arr, std::string_view origin) {
  if (!arr.is_array()) bad(origin, "expected an array of numbers");
  RawDistribution out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) bad(origin, "element " + std::to_string(i) + " is not a number");
    out.push_back(arr[i].get<double>());
  }
  return out;
}

std::size_t index_field(const Json& e, const char* key, std::size_t k) {
  if (!e.contains(key) || !e[key].is_number_unsigned()) {
    bad("coupling", "entry " + std::to_string(k) + " lacks unsigned \"" + key + "\"");
  }
  return e[key].get<std::size_t>();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, std::string_view origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(origin, std::string("invalid JSON: ") + e.what());
  }
}

RawDistribution distribution_from_json(const Json& doc, std::string_view key,
                                       std::string_view origin) {
  if (doc.is_array()) return numbers(doc, origin);
  if (doc.is_object()) {
    if (doc.contains(key)) return numbers(doc[std::string(key)], origin);
    bad(origin, "missing field \"" + std::string(key) + "\"");
  }
  bad(origin, "expected an array or an object");
}

std::vector<RawDistribution> distributions_from_csv(std::string_view text,
                                                    std::string_view origin) {
  std::vector<RawDistribution> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    RawDistribution row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        bad(origin, "line " + std::to_string(line_no) + ": '" + cell + "' is not a number");
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<RawDistribution> distribution_list_from_json(const Json& doc,
                                                         std::string_view origin) {
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("dists")) bad(origin, "missing field \"dists\"");
    list = &doc["dists"];
  }
  if (!list->is_array()) bad(origin, "expected an array of distributions");
  std::vector<RawDistribution> out;
  for (const auto& d : *list) out.push_back(numbers(d, origin));
  return out;
}

Json coupling_to_json(const SparseCoupling& m) {
  SparseCoupling sorted = m;
  sorted.canonicalize();
  Json entries = Json::array();
  for (const auto& e : sorted.entries) {
    entries.push_back({{"i", e.row}, {"j", e.col}, {"v", e.value}});
  }
  return {{"n_rows", m.n_rows}, {"n_cols", m.n_cols}, {"entries", std::move(entries)}};
}

Json coupling_to_dense_json(const SparseCoupling& m) {
  const std::vector<double> cells = m.to_dense();
  Json matrix = Json::array();
  for (std::size_t r = 0; r < m.n_rows; ++r) {
    matrix.push_back(std::vector<double>(cells.begin() + r * m.n_cols,
                                         cells.begin() + (r + 1) * m.n_cols));
  }
  return {{"n_rows", m.n_rows}, {"n_cols", m.n_cols}, {"matrix", std::move(matrix)}};
}

SparseCoupling coupling_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    bad("coupling", "expected an object with an \"entries\" array");
  }
  SparseCoupling m;
  m.n_rows = doc.value("n_rows", std::size_t{0});
  m.n_cols = doc.value("n_cols", std::size_t{0});
  std::size_t k = 0;
  for (const auto& e : doc["entries"]) {
    if (!e.contains("v") || !e["v"].is_number()) bad("coupling", "entry without numeric \"v\"");
    m.entries.push_back({e["v"].get<double>(), index_field(e, "i", k), index_field(e, "j", k)});
    ++k;
  }
  return m;
}

Json joint_to_json(const SparseJoint& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries) entries.push_back({{"coords", e.coords}, {"v", e.value}});
  return {{"dims", m.dims}, {"entries", std::move(entries)}};
}

SparseJoint joint_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("entries") || !doc.contains("dims")) {
    bad("joint", "expected an object with \"dims\" and \"entries\"");
  }
  SparseJoint m;
  m.dims = doc["dims"].get<std::vector<std::size_t>>();
  for (const auto& e : doc["entries"]) {
    m.entries.push_back({e.at("v").get<double>(), e.at("coords").get<std::vector<std::size_t>>()});
  }
  return m;
}

}  // namespace mec::cli
