// Copyright 2026 The EVKG Toolkit Authors.
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

#pragma once

#include <filesystem>
#include <string>

#include "evkg/cli/commands.hpp"

namespace evkg::testing {

inline std::filesystem::path data_dir() { return EVKG_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return data_dir() / "fixture"; }

/// The committed fixture, ingested exactly as `evkg ingest` does it.
inline cli::IngestOutcome build_fixture() { return cli::build_graph(cli::load_config(fixture_dir() / "config.json")); }

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("evkg-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace evkg::testing
