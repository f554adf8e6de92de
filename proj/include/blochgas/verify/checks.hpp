// Copyright 2026 The Blochgas Authors
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

#include <functional>
#include <string>
#include <vector>

namespace blochgas::verify {

struct CheckResult {
    bool passed = false;
    std::string detail;
};

struct Check {
    std::string id;
    std::string name;
    std::function<CheckResult()> run;
};

// The acceptance gate: one check per numbered criterion (a01..a11), each
// self-contained with its tolerances pinned in code.
const std::vector<Check>& acceptance_checks();

// Library-level invariants beyond the acceptance list (i-*).
const std::vector<Check>& invariant_checks();

// acceptance_checks followed by invariant_checks; the verify CLI runs these.
std::vector<Check> all_checks();

}  // namespace blochgas::verify
