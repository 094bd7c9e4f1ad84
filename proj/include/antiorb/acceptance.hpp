/* Copyright (c) 2026 The antiorb Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */


#pragma once

// The acceptance suite: thirteen numbered criteria, each an exact check at
// desk scale. Results carry a JSON detail object for reports.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "antiorb/io.hpp"

namespace antiorb {

struct AcceptanceConfig {
  std::string profile = "desk";
  std::uint64_t budget = 20'000'000;
  std::uint64_t seed = 1;
};

struct CriterionResult {
  unsigned id = 0;
  std::string title;
  bool passed = false;
  Json details = Json::object();
};

constexpr unsigned kCriterionCount = 13;

/// Throws UsageError for an unknown profile or id outside 1..13.
CriterionResult run_criterion(unsigned id, const AcceptanceConfig& cfg);

/// Runs every criterion in order; on_result sees each one as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace antiorb
