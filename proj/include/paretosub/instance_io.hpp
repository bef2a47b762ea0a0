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

//
// JSON instance descriptions: objective kind plus inline data, a CSV vector
// file, or a generator spec. The schema is documented in the README.

#ifndef PARETOSUB_INSTANCE_IO_HPP_
#define PARETOSUB_INSTANCE_IO_HPP_

#include <memory>
#include <nlohmann/json.hpp>
#include <string>

#include "paretosub/objectives.hpp"

namespace paretosub {

// Builds an oracle from a description object. Relative CSV paths resolve
// against base_dir.
std::unique_ptr<ObjectiveOracle> make_oracle(const nlohmann::json& desc,
                                             const std::string& base_dir = "");

// Reads a description file; relative CSV paths resolve against its parent
// directory.
std::unique_ptr<ObjectiveOracle> make_oracle_from_file(
    const std::string& path);

SimilaritySpec similarity_from_json(const nlohmann::json& desc);

nlohmann::json load_json_file(const std::string& path);

}  // namespace paretosub

#endif  // PARETOSUB_INSTANCE_IO_HPP_
