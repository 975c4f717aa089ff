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

#include "xlsim/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "xlsim/error.hpp"
#include "xlsim/normalize.hpp"
#include "xlsim/unicode.hpp"
#include "xlsim/urdu_tokenizer.hpp"

namespace xlsim {

namespace {

std::string strip_zwnj_utf8(std::string_view text) {
    std::u32string cps = uni::decode_utf8_lenient(text);
    std::u32string clean;
    clean.reserve(cps.size());
    for (char32_t c : cps) {
        if (c != kZwnj) clean.push_back(c);
    }
    return uni::encode_utf8(clean);
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && static_cast<unsigned char>(s[b]) <= ' ') ++b;
    while (e > b && static_cast<unsigned char>(s[e - 1]) <= ' ') --e;
    return std::string(s.substr(b, e - b));
}

bool has_whitespace(std::string_view utf8) {
    for (char32_t c : uni::decode_utf8_lenient(utf8)) {
        if (uni::is_whitespace(c)) return true;
    }
    return false;
}

} // namespace

Lexicon Lexicon::parse(std::string_view text, std::string_view origin) {
    Lexicon lex;
    std::size_t line_no = 0;
    std::size_t start = 0;
    auto fail = [&](const std::string& what) {
        throw Error(std::string(origin) + ": line " + std::to_string(line_no) +
                    ": " + what);
    };

    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);

        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#') {
            if (start > text.size()) break;
            continue;
        }

        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
            fail("expected exactly two tab-separated fields (english<TAB>urdu)");
        }

        const NormalizedText english = normalize_english(line.substr(0, tab));
        if (english.text.empty()) fail("english side is empty after normalization");
        if (english.text.find(' ') != std::string::npos) {
            fail("english side '" + english.text + "' is not a single token");
        }

        const std::string urdu = strip_zwnj_utf8(trim(line.substr(tab + 1)));
        if (urdu.empty()) fail("urdu side is empty");
        if (has_whitespace(urdu)) fail("urdu side contains whitespace");

        std::uint32_t id;
        auto it = lex.english_index_.find(english.text);
        if (it == lex.english_index_.end()) {
            id = static_cast<std::uint32_t>(lex.entries_.size());
            lex.entries_.push_back(LexiconEntry{id, english.text, {}});
            lex.english_index_.emplace(english.text, id);
        } else {
            id = it->second;
        }
        std::vector<std::string>& variants = lex.entries_[id].urdu_variants;
        if (std::find(variants.begin(), variants.end(), urdu) == variants.end()) {
            variants.push_back(urdu);
            lex.urdu_index_[urdu].push_back(id);
        }

        if (start > text.size()) break;
    }

    if (lex.entries_.empty()) {
        throw Error(std::string(origin) + ": lexicon has no entries");
    }
    for (auto& [token, ids] : lex.urdu_index_) {
        std::sort(ids.begin(), ids.end());
    }
    return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open lexicon file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error("read failure on lexicon file: " + path.string());
    }
    return parse(buf.str(), path.string());
}

std::optional<std::uint32_t> Lexicon::lookup_english(std::string_view token) const {
    auto it = english_index_.find(std::string(token));
    if (it == english_index_.end()) return std::nullopt;
    return it->second;
}

std::span<const std::uint32_t> Lexicon::lookup_urdu(std::string_view token) const {
    auto it = urdu_index_.find(std::string(token));
    if (it == urdu_index_.end()) return {};
    return it->second;
}

LexiconStats Lexicon::stats() const {
    LexiconStats s;
    s.entries = entries_.size();
    for (const LexiconEntry& e : entries_) s.variants += e.urdu_variants.size();
    for (const auto& [token, ids] : urdu_index_) {
        if (ids.size() > 1) ++s.ambiguous_urdu;
    }
    return s;
}

} // namespace xlsim
