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

#include "xlsim/normalize.hpp"

#include "xlsim/unicode.hpp"

namespace xlsim {

NormalizedText normalize_english(std::string_view raw) {
    const std::u32string cps = uni::decode_utf8_lenient(raw);
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char32_t cp : cps) {
        if (uni::is_whitespace(cp) || uni::is_punct_or_symbol(cp)) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        uni::append_utf8(out, uni::simple_lower(cp));
    }
    return NormalizedText{std::move(out)};
}

TokenStream tokenize_english(const NormalizedText& norm) {
    TokenStream tokens;
    std::size_t start = 0;
    const std::string& s = norm.text;
    while (start < s.size()) {
        std::size_t end = s.find(' ', start);
        if (end == std::string::npos) end = s.size();
        if (end > start) tokens.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return tokens;
}

} // namespace xlsim
