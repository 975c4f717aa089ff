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

#ifndef XLSIM_CORPUS_HPP
#define XLSIM_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace xlsim {

enum class Language { English, Urdu };

Language parse_language(std::string_view name); // "en"/"english", "ur"/"urdu"
std::string_view language_name(Language lang);

/// The canonical news categories; anything else maps to Other.
enum class Category {
    Education,
    Business,
    Technology,
    Politics,
    Entertainment,
    Sports,
    Other,
};

Category parse_category(std::string_view name);
std::string_view category_name(Category category);

/// One news document. `index` is its dense position in the owning
/// corpus; `length` is the whitespace-delimited token count of `body`.
struct Article {
    std::uint32_t index = 0;
    std::string date;
    std::string headline;
    std::string body;
    std::string source;
    Category category = Category::Other;
    std::string url;
    std::uint32_t length = 0;

    bool operator==(const Article&) const = default;
};

/// Token count used for the length column: maximal runs of
/// non-whitespace under the Unicode White_Space property.
std::uint32_t body_token_count(std::string_view body);

/// Immutable ordered article collection. The constructor assigns dense
/// indices in sequence order, recomputes lengths and validates that
/// every body survives whitespace trimming and every date is non-empty.
class Corpus {
public:
    Corpus() = default;
    Corpus(Language language, std::vector<Article> articles);

    Language language() const { return language_; }
    std::size_t size() const { return articles_.size(); }
    bool empty() const { return articles_.empty(); }
    const std::vector<Article>& articles() const { return articles_; }

    /// Article whose index equals `index`; throws on out-of-range.
    const Article& get(std::uint32_t index) const;

    bool operator==(const Corpus&) const = default;

private:
    Language language_ = Language::English;
    std::vector<Article> articles_;
};

struct IngestResult {
    Corpus corpus;
    std::size_t rows_skipped = 0; // data rows dropped for an empty body
    std::size_t rows_total = 0;   // accepted + skipped
};

/// Loads a UTF-8 article CSV. The header must name at least
/// date, headline, body, source, category and url (any order); index
/// and length columns are ignored on input and recomputed. Rows whose
/// body is empty after trimming are skipped and counted.
IngestResult ingest_csv(const std::filesystem::path& path, Language language);

/// Same parser over an in-memory buffer.
IngestResult ingest_csv_text(std::string_view text, Language language,
                             std::string_view origin = "<memory>");

/// Serializes with the fixed header
/// index,date,headline,body,source,category,url,length (UTF-8, LF).
/// ingest_csv(write_corpus(c)) reproduces c field for field.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);
std::string corpus_to_csv(const Corpus& corpus);

} // namespace xlsim

#endif
