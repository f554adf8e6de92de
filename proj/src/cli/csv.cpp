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

#include "blochgas/cli/csv.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace blochgas::cli {

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    if (result.ec != std::errc()) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf, result.ptr);
}

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("Table: row width does not match the header");
    }
    rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c > 0) {
            out += ',';
        }
        out += columns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string Table::to_json() const {
    nlohmann::json j;
    j["columns"] = columns;
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace blochgas::cli
