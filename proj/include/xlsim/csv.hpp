/*
 * Copyright 2026 xlsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef XLSIM_CSV_HPP
#define XLSIM_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace xlsim::csv {

using Row = std::vector<std::string>;

/// RFC 4180 parse. Quoted fields may contain commas, quotes and line
/// breaks; rows end at LF or CRLF outside quotes. A trailing newline
/// does not produce an empty row. Throws Error on broken quoting.
std::vector<Row> parse(std::string_view text);

/// Quotes the field only when it contains a comma, quote or line break.
std::string escape_field(std::string_view field);

/// Appends one comma-separated, LF-terminated row.
void write_row(std::string& out, const Row& row);

} // namespace xlsim::csv

#endif
