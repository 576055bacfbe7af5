// Copyright 2026 The sptchain Authors
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

#include <string>
#include <vector>

namespace sptchain {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs the library's invariant checks at fixed small sizes. Suites:
/// "pauli", "spectra", "entropy", "transforms", or "all". Exceptions inside
/// a check are converted into failures, never propagated.
std::vector<CheckResult> run_checks(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);
std::string format_text(const std::vector<CheckResult>& results);
std::string format_json(const std::vector<CheckResult>& results);

}  // namespace sptchain
