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

#include <string>
#include <vector>

namespace blochgas::cli {

// Shortest decimal string that round-trips to the exact double. Locale
// independent, so identical configs produce byte-identical files.
std::string format_double(double value);

// Column-labelled numeric table; the unit all experiments emit.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
    std::string to_csv() const;   // header + rows, '\n' endings
    std::string to_json() const;  // {"columns": [...], "rows": [[...]]}
};

}  // namespace blochgas::cli
