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

#ifndef XLSIM_URDU_TOKENIZER_HPP
#define XLSIM_URDU_TOKENIZER_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "xlsim/tokens.hpp"

namespace xlsim {

/// Zero-width non-joiner: invisible cursive break, used here as an
/// explicit word-boundary marker inside unspaced chunks.
inline constexpr char32_t kZwnj = U'‌';

/// How an Urdu character behaves at a potential word boundary.
///
/// A Joiner connects cursively to its successor, so a hidden word
/// boundary can never sit right after one. A NonJoiner never connects
/// forward; only positions after a NonJoiner may hide an omitted space.
/// Characters outside both fixed sets (Latin letters, digits, Arabic
/// script not listed, ...) are Other and never license a split.
enum class CharClass { Joiner, NonJoiner, Space, Other };

CharClass classify_char(char32_t ch);

/// The 25 joining and 8 non-joining characters, exposed for tests and
/// table-driven tooling.
std::u32string_view joiner_chars();
std::u32string_view non_joiner_chars();

/// Vocabulary of valid Urdu word forms used to validate hidden-boundary
/// splits. Entries are stored ZWNJ-free; add() splits on whitespace and
/// ignores empty pieces, so it is safe to feed raw lines.
class WordList {
public:
    /// Adds every whitespace-separated piece of `text`, ZWNJ-stripped.
    void add(std::string_view text);
    void add(std::u32string_view word);

    bool contains(std::u32string_view word) const;
    bool contains_utf8(std::string_view word) const;

    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    /// One word per line, UTF-8; '#' lines are comments.
    static WordList from_file(const std::filesystem::path& path);

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::u32string_view s) const noexcept {
            return std::hash<std::u32string_view>{}(s);
        }
        std::size_t operator()(const std::u32string& s) const noexcept {
            return std::hash<std::u32string_view>{}(s);
        }
    };
    struct Eq {
        using is_transparent = void;
        bool operator()(std::u32string_view a, std::u32string_view b) const noexcept {
            return a == b;
        }
    };
    std::unordered_set<std::u32string, Hash, Eq> words_;
};

/// Canonical ZWNJ placement for one space-free chunk: existing ZWNJ are
/// stripped, then ZWNJ is reinserted exactly at the word boundaries
/// segment_chunk detects. A chunk with no detectable internal boundary
/// comes back unchanged (modulo stray ZWNJ removal).
std::string normalize_zwnj(std::string_view chunk, const WordList& words);

/// Splits an unspaced chunk into word-list words. Candidate boundaries
/// sit only immediately after a NonJoiner character; candidates are
/// tried longest-first with backtracking, so the chunk is returned
/// whole only when no decomposition covers it (fail-open).
std::vector<std::string> segment_chunk(std::string_view chunk, const WordList& words);

/// Whole-body tokenization: splits on whitespace, Urdu punctuation and
/// every other Unicode punctuation/symbol character, then repairs
/// omitted spaces in each chunk via normalize_zwnj/segment_chunk.
TokenStream tokenize_urdu(std::string_view body, const WordList& words);

} // namespace xlsim

#endif
