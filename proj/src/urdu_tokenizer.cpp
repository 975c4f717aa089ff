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

#include "xlsim/urdu_tokenizer.hpp"

#include <fstream>

#include "xlsim/error.hpp"
#include "xlsim/unicode.hpp"

namespace xlsim {

namespace {

// The fixed joiner/non-joiner tables. Everything else in the Arabic
// script (e.g. ٹ, آ, ں, ء) stays Other and never licenses a split.
constexpr std::u32string_view kJoiners =
    U"بپتثجچحخسشصضطظعغفقکگلمنہی";
constexpr std::u32string_view kNonJoiners =
    U"ادڈرزژوے";

std::u32string strip_zwnj(std::u32string_view text) {
    std::u32string out;
    out.reserve(text.size());
    for (char32_t c : text) {
        if (c != kZwnj) out.push_back(c);
    }
    return out;
}

// Longest-first depth-first cover of chunk[pos..) by word-list words.
// `dead` memoizes positions proven unreachable so pathological chunks
// stay quadratic. Internal cut points must follow a NonJoiner.
bool search_cover(std::u32string_view chunk, const WordList& words,
                  std::vector<char>& dead, std::size_t pos,
                  std::vector<std::size_t>& cuts) {
    const std::size_t n = chunk.size();
    if (pos == n) return true;
    if (dead[pos]) return false;
    for (std::size_t len = n - pos; len >= 1; --len) {
        const std::size_t end = pos + len;
        if (end < n && classify_char(chunk[end - 1]) != CharClass::NonJoiner) continue;
        if (!words.contains(chunk.substr(pos, len))) continue;
        cuts.push_back(end);
        if (search_cover(chunk, words, dead, end, cuts)) return true;
        cuts.pop_back();
    }
    dead[pos] = 1;
    return false;
}

std::vector<std::u32string> segment_u32(std::u32string_view chunk,
                                        const WordList& words) {
    std::vector<std::u32string> out;
    if (chunk.empty()) return out;
    std::vector<std::size_t> cuts;
    std::vector<char> dead(chunk.size(), 0);
    if (search_cover(chunk, words, dead, 0, cuts)) {
        std::size_t start = 0;
        for (std::size_t end : cuts) {
            out.emplace_back(chunk.substr(start, end - start));
            start = end;
        }
    } else {
        out.emplace_back(chunk); // fail-open: keep the chunk whole
    }
    return out;
}

} // namespace

CharClass classify_char(char32_t ch) {
    if (uni::is_whitespace(ch)) return CharClass::Space;
    if (kJoiners.find(ch) != std::u32string_view::npos) return CharClass::Joiner;
    if (kNonJoiners.find(ch) != std::u32string_view::npos) return CharClass::NonJoiner;
    return CharClass::Other;
}

std::u32string_view joiner_chars() { return kJoiners; }
std::u32string_view non_joiner_chars() { return kNonJoiners; }

void WordList::add(std::u32string_view word) {
    const std::u32string clean = strip_zwnj(word);
    if (!clean.empty()) words_.insert(clean);
}

void WordList::add(std::string_view text) {
    const std::u32string cps = uni::decode_utf8_lenient(text);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= cps.size(); ++i) {
        if (i == cps.size() || uni::is_whitespace(cps[i])) {
            if (i > start) add(std::u32string_view(cps).substr(start, i - start));
            start = i + 1;
        }
    }
}

bool WordList::contains(std::u32string_view word) const {
    return words_.find(word) != words_.end();
}

bool WordList::contains_utf8(std::string_view word) const {
    return contains(uni::decode_utf8_lenient(word));
}

WordList WordList::from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open word list: " + path.string());
    }
    WordList words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '#') continue;
        words.add(line);
    }
    return words;
}

std::string normalize_zwnj(std::string_view chunk, const WordList& words) {
    const std::u32string stripped =
        strip_zwnj(uni::decode_utf8_lenient(chunk));
    const std::vector<std::u32string> segments = segment_u32(stripped, words);
    std::u32string joined;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) joined.push_back(kZwnj);
        joined += segments[i];
    }
    return uni::encode_utf8(joined);
}

std::vector<std::string> segment_chunk(std::string_view chunk, const WordList& words) {
    const std::u32string stripped =
        strip_zwnj(uni::decode_utf8_lenient(chunk));
    std::vector<std::string> out;
    for (const std::u32string& seg : segment_u32(stripped, words)) {
        out.push_back(uni::encode_utf8(seg));
    }
    return out;
}

TokenStream tokenize_urdu(std::string_view body, const WordList& words) {
    const std::u32string cps = uni::decode_utf8_lenient(body);
    TokenStream tokens;
    std::u32string chunk;
    auto flush = [&] {
        if (chunk.empty()) return;
        // The chunk arrives with stray ZWNJ removed, exactly the
        // canonical form normalize_zwnj produces before joining.
        for (const std::u32string& seg : segment_u32(chunk, words)) {
            tokens.push_back(uni::encode_utf8(seg));
        }
        chunk.clear();
    };
    for (char32_t c : cps) {
        if (uni::is_whitespace(c) || uni::is_punct_or_symbol(c)) {
            flush();
        } else if (c != kZwnj) {
            chunk.push_back(c);
        }
    }
    flush();
    return tokens;
}

} // namespace xlsim
