/*
   Copyright 2026 The lampfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LAMPFIELD_TABLE_HPP
#define LAMPFIELD_TABLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lampfield/factor.hpp"
#include "lampfield/lampring.hpp"

namespace lampfield {

/// One line of the t(n) table.
struct TableRow {
    std::size_t n = 0;
    std::optional<Natural> t;         // empty when the factoring budget ran out
    std::optional<Natural> u_over_t;
    Factorization factors;
    std::string blocked;              // reason t is missing

    std::string factorization() const { return factors.to_string(); }
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

enum class TableFormat { text, csv, json };
TableFormat parse_table_format(std::string_view s);

/// Rows for from..to inclusive, in order. `progress` is called after each row.
std::vector<TableRow> build_table(std::size_t from, std::size_t to, RingCatalog& catalog,
                                  const std::function<void(const TableRow&)>& progress = {});

std::string render_table(const std::vector<TableRow>& rows, TableFormat fmt);
std::string render_text(const std::vector<TableRow>& rows);
std::string render_csv(const std::vector<TableRow>& rows);
std::string render_json(const std::vector<TableRow>& rows);

/// Inverse of render_json / render_csv. Throws std::invalid_argument.
std::vector<TableRow> parse_json_table(std::string_view text);
std::vector<TableRow> parse_csv_table(std::string_view text);

/// Parses "(A)(B)^2" or a bare polynomial into a Factorization.
Factorization parse_factorization(std::string_view text);

}  // namespace lampfield

#endif
