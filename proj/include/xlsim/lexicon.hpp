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

#ifndef XLSIM_LEXICON_HPP
#define XLSIM_LEXICON_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace xlsim {

/// One English word and its Urdu-script transliteration spellings.
/// Urdu spelling is unstandardized, so several variants may map to the
/// same English word; counts across variants sum into one component.
struct LexiconEntry {
    std::uint32_t id = 0;        // == position in the entry list
    std::string english;         // normalized, single token
    std::vector<std::string> urdu_variants; // ZWNJ-free, space-free

    bool operator==(const LexiconEntry&) const = default;
};

struct LexiconStats {
    std::size_t entries = 0;
    std::size_t variants = 0;        // total spellings across entries
    std::size_t ambiguous_urdu = 0;  // spellings shared by >1 entry
};

/// The English↔Urdu transliteration table linking the two corpora.
/// Immutable after load; lookups are index-backed and thread-safe.
class Lexicon {
public:
    /// UTF-8 TSV: english<TAB>urdu, one pair per line, '#' comments.
    /// Repeated english words accumulate variants; exact duplicate
    /// pairs collapse. Throws on malformed lines (with line number)
    /// and on files with no entries.
    static Lexicon load(const std::filesystem::path& path);
    static Lexicon parse(std::string_view text, std::string_view origin = "<memory>");

    std::size_t size() const { return entries_.size(); }
    const std::vector<LexiconEntry>& entries() const { return entries_; }

    /// Entry id for a normalized English token, if any.
    std::optional<std::uint32_t> lookup_english(std::string_view token) const;

    /// Every entry id carrying this Urdu spelling, ascending; empty on
    /// miss. The token must be ZWNJ-free (tokenizer output is).
    std::span<const std::uint32_t> lookup_urdu(std::string_view token) const;

    LexiconStats stats() const;

    bool operator==(const Lexicon& other) const { return entries_ == other.entries_; }

private:
    std::vector<LexiconEntry> entries_;
    std::unordered_map<std::string, std::uint32_t> english_index_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> urdu_index_;
};

} // namespace xlsim

#endif
