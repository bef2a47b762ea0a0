// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paretosub/instance_io.hpp"

#include <filesystem>
#include <fstream>

#include "paretosub/errors.hpp"

namespace paretosub {
namespace {

using nlohmann::json;

Eigen::MatrixXd matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty())
    throw ConfigError("instance: 'matrix' must be a non-empty array of rows");
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  const auto ncols = static_cast<Eigen::Index>(rows[0].size());
  Eigen::MatrixXd out(nrows, ncols);
  for (Eigen::Index i = 0; i < nrows; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != ncols)
      throw ConfigError("instance: ragged 'matrix'");
    for (Eigen::Index j = 0; j < ncols; ++j)
      out(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }
  return out;
}

std::string resolve(const std::string& path, const std::string& base_dir) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

// Source vectors for kernel-style objectives: inline matrix of vectors is
// not supported; a CSV file or a Gaussian generator is.
Eigen::MatrixXd vectors_from(const json& desc, const std::string& base_dir) {
  if (desc.contains("csv"))
    return load_vectors_csv(resolve(desc.at("csv").get<std::string>(),
                                    base_dir));
  const json& gen = desc.at("generator");
  return gen_gaussian_points(gen.at("clusters").get<int>(),
                             gen.at("points").get<int>(),
                             gen.at("dim").get<int>(),
                             gen.at("seed").get<std::uint64_t>());
}

}  // namespace

SimilaritySpec similarity_from_json(const json& desc) {
  const std::string kind = desc.at("kind").get<std::string>();
  if (kind == "rbf") return SimilaritySpec::rbf(desc.at("sigma").get<double>());
  if (kind == "inner_product") return SimilaritySpec::inner_product();
  throw ConfigError("instance: unknown similarity kind '" + kind + "'");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::unique_ptr<ObjectiveOracle> make_oracle(const json& desc,
                                             const std::string& base_dir) {
  const std::string kind = desc.at("kind").get<std::string>();

  if (kind == "coverage") {
    auto instance = std::make_shared<const CoverageInstance>(
        desc.at("num_items").get<int>(),
        desc.at("sets").get<std::vector<std::vector<int>>>(),
        desc.value("weights", std::vector<double>{}));
    return std::make_unique<CoverageOracle>(std::move(instance));
  }

  if (kind == "modular")
    return std::make_unique<ModularOracle>(
        desc.at("weights").get<std::vector<double>>());

  if (kind == "tabular")
    return std::make_unique<TabularOracle>(
        desc.at("n").get<int>(),
        desc.at("values").get<std::vector<double>>());

  if (kind == "facility_location") {
    if (desc.contains("matrix"))
      return std::make_unique<FacilityLocationOracle>(
          std::make_shared<const FacilityLocationInstance>(
              matrix_from_json(desc.at("matrix"))));
    if (desc.contains("generator") && !desc.contains("similarity")) {
      // Gaussian generator default: RBF with the median-distance bandwidth.
      const json& gen = desc.at("generator");
      return std::make_unique<FacilityLocationOracle>(
          std::make_shared<const FacilityLocationInstance>(
              gen_gaussian_dataset(gen.at("clusters").get<int>(),
                                   gen.at("points").get<int>(),
                                   gen.at("dim").get<int>(),
                                   gen.at("seed").get<std::uint64_t>())));
    }
    return std::make_unique<FacilityLocationOracle>(
        std::make_shared<const FacilityLocationInstance>(make_fl_from_vectors(
            vectors_from(desc, base_dir),
            similarity_from_json(desc.at("similarity")))));
  }

  if (kind == "dpp") {
    if (desc.contains("matrix"))
      return std::make_unique<DppOracle>(std::make_shared<const DppInstance>(
          matrix_from_json(desc.at("matrix"))));
    return std::make_unique<DppOracle>(
        std::make_shared<const DppInstance>(make_dpp_from_vectors(
            vectors_from(desc, base_dir),
            similarity_from_json(desc.at("similarity")))));
  }

  throw ConfigError("instance: unknown objective kind '" + kind + "'");
}

std::unique_ptr<ObjectiveOracle> make_oracle_from_file(
    const std::string& path) {
  return make_oracle(load_json_file(path),
                     std::filesystem::path(path).parent_path().string());
}

}  // namespace paretosub
