#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mec/coupling.hpp"

namespace mec::cli {

using Json = nlohmann::json;
using RawDistribution = std::vector<double>;

std::string read_file(const std::string& path);

/// Distribution documents: a bare JSON array of numbers, or an object whose
/// `key` member is that array.
RawDistribution distribution_from_json(const Json& doc, std::string_view key,
                                       std::string_view origin);

/// One distribution per non-empty line, comma separated.
std::vector<RawDistribution> distributions_from_csv(std::string_view text,
                                                    std::string_view origin);

/// {"dists": [[...], ...]} or a bare array of arrays.
std::vector<RawDistribution> distribution_list_from_json(const Json& doc,
                                                         std::string_view origin);

Json parse_json(const std::string& text, std::string_view origin);

/// {"n_rows", "n_cols", "entries": [{"i", "j", "v"}, ...]} sorted by (i, j).
Json coupling_to_json(const SparseCoupling& m);
/// Row-major {"n_rows", "n_cols", "matrix": [[...], ...]}.
Json coupling_to_dense_json(const SparseCoupling& m);
SparseCoupling coupling_from_json(const Json& doc);

/// {"dims", "entries": [{"coords", "v"}, ...]}.
Json joint_to_json(const SparseJoint& m);
SparseJoint joint_from_json(const Json& doc);

}  // namespace mec::cli
