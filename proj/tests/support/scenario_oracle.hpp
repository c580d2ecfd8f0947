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
#include <set>
#include <string>
#include <utility>

namespace evkg::testing {

/// Recomputes competency-question answers straight from the fixture CSVs.
/// Zip membership uses ray casting and line crossing uses dense sampling;
/// nothing goes through the triple store or the query engine.
struct ScenarioOracle {
  explicit ScenarioOracle(const std::filesystem::path& fixture);

  /// (connector label, station id) pairs answering the target-selection
  /// question for zip 95814.
  std::set<std::pair<std::string, std::string>> target_stations() const;

  /// New Jersey zips crossed by a "500" line whose 2021 CCS charger per
  /// CCS-capable EV ratio is below 0.1.
  std::set<std::string> low_share_zips() const;
  /// New Jersey zips crossed by a "500" line with more than 98 CCS-capable
  /// EVs registered in 2021.
  std::set<std::string> high_adoption_zips() const;
  std::set<std::string> selected_zips() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace evkg::testing
