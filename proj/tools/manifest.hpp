// Copyright 2026 The kanjinet Authors
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

#ifndef KANJINET_TOOLS_MANIFEST_HPP
#define KANJINET_TOOLS_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace kanjinet::cli {

// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

/// Provenance record written next to every primary output as
/// `<output>.manifest.json`. Only `timestamp` varies between identical runs.
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> args;
  std::uint64_t seed = 0;
  int threads = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const;
  void write(const std::string& primary_output) const;
};

}  // namespace kanjinet::cli

#endif  // KANJINET_TOOLS_MANIFEST_HPP
