/*
   Copyright 2026 The ramcount Authors

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

#ifndef RAMCOUNT_CLI_HPP
#define RAMCOUNT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramcount/counting.hpp"

namespace ramcount {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitBudget = 2;

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err; returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// --budget wins over RAMCOUNT_BUDGET, which wins over the default.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag);

struct TableRow {
    std::vector<int> orders;
    Characteristic p = Characteristic::infinite();
    int d = 0;
    CharClass char_class = CharClass::High;
    std::optional<std::uint64_t> count;
    std::optional<std::uint64_t> closed_form;
    std::uint64_t schubert = 0;
    /// nullopt when no cross-check applies.
    std::optional<bool> match;
    std::string reason;
};

/// Every profile with 2 <= e_i <= d, d <= d_max and at least three orders,
/// at each characteristic; sorted by (d, n, orders) and then p, infinity last.
std::vector<TableRow> build_table(std::span<const Characteristic> ps, int d_max);

/// Header comment, column line, one line per row.
std::string table_csv(std::span<const TableRow> rows);

}  // namespace ramcount

#endif
