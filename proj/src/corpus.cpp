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

#include "xlsim/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "xlsim/csv.hpp"
#include "xlsim/error.hpp"
#include "xlsim/unicode.hpp"

namespace xlsim {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

const std::array<std::string_view, 7> kCategoryNames = {
    "education", "business",      "technology", "politics",
    "entertainment", "sports", "other",
};

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string trim_copy(std::string_view s) {
    // Byte-level trim is enough here: every Unicode whitespace char that
    // matters for "empty after trimming" starts with an ASCII byte or is
    // caught by the token counter downstream.
    std::size_t b = 0, e = s.size();
    while (b < e && static_cast<unsigned char>(s[b]) <= ' ') ++b;
    while (e > b && static_cast<unsigned char>(s[e - 1]) <= ' ') --e;
    return std::string(s.substr(b, e - b));
}

bool body_is_blank(std::string_view body) {
    const std::u32string cps = uni::decode_utf8_lenient(body);
    return std::all_of(cps.begin(), cps.end(),
                       [](char32_t c) { return uni::is_whitespace(c); });
}

} // namespace

Language parse_language(std::string_view name) {
    const std::string n = ascii_lower(trim_copy(name));
    if (n == "en" || n == "english") return Language::English;
    if (n == "ur" || n == "urdu") return Language::Urdu;
    throw Error("unknown language '" + std::string(name) + "' (expected en or ur)");
}

std::string_view language_name(Language lang) {
    return lang == Language::English ? "english" : "urdu";
}

Category parse_category(std::string_view name) {
    const std::string n = ascii_lower(trim_copy(name));
    for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
        if (n == kCategoryNames[i]) return static_cast<Category>(i);
    }
    return Category::Other;
}

std::string_view category_name(Category category) {
    return kCategoryNames[static_cast<std::size_t>(category)];
}

std::uint32_t body_token_count(std::string_view body) {
    const std::u32string cps = uni::decode_utf8_lenient(body);
    std::uint32_t count = 0;
    bool in_token = false;
    for (char32_t c : cps) {
        const bool ws = uni::is_whitespace(c);
        if (!ws && !in_token) ++count;
        in_token = !ws;
    }
    return count;
}

Corpus::Corpus(Language language, std::vector<Article> articles)
    : language_(language), articles_(std::move(articles)) {
    for (std::size_t i = 0; i < articles_.size(); ++i) {
        Article& a = articles_[i];
        if (body_is_blank(a.body)) {
            throw Error("article " + std::to_string(i) + ": empty body");
        }
        if (a.date.empty()) {
            throw Error("article " + std::to_string(i) + ": empty date");
        }
        a.index = static_cast<std::uint32_t>(i);
        a.length = body_token_count(a.body);
    }
}

const Article& Corpus::get(std::uint32_t index) const {
    if (index >= articles_.size()) {
        throw Error("article index " + std::to_string(index) +
                    " out of range (corpus size " + std::to_string(articles_.size()) + ")");
    }
    return articles_[index];
}

IngestResult ingest_csv_text(std::string_view text, Language language,
                             std::string_view origin) {
    std::size_t bom_bytes = 0;
    if (text.substr(0, kBom.size()) == kBom) {
        text.remove_prefix(kBom.size());
        bom_bytes = kBom.size();
    }
    if (const std::size_t bad = uni::find_invalid_utf8(text); bad != uni::npos) {
        throw Error(std::string(origin) + ": invalid UTF-8 at byte offset " +
                    std::to_string(bad + bom_bytes));
    }

    const std::vector<csv::Row> rows = csv::parse(text);
    if (rows.empty()) {
        throw Error(std::string(origin) + ": missing header row");
    }

    // Resolve column positions by header name, case-insensitively.
    static constexpr std::array<std::string_view, 6> kRequired = {
        "date", "headline", "body", "source", "category", "url",
    };
    std::array<std::size_t, 6> col{};
    col.fill(uni::npos);
    for (std::size_t i = 0; i < rows[0].size(); ++i) {
        const std::string name = ascii_lower(trim_copy(rows[0][i]));
        for (std::size_t r = 0; r < kRequired.size(); ++r) {
            if (name == kRequired[r]) col[r] = i;
        }
    }
    std::string missing;
    for (std::size_t r = 0; r < kRequired.size(); ++r) {
        if (col[r] == uni::npos) {
            if (!missing.empty()) missing += ", ";
            missing += kRequired[r];
        }
    }
    if (!missing.empty()) {
        throw Error(std::string(origin) + ": malformed header, missing columns: " + missing);
    }

    IngestResult result;
    std::vector<Article> articles;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const csv::Row& row = rows[i];
        if (row.size() != rows[0].size()) {
            throw Error(std::string(origin) + ": row " + std::to_string(i + 1) +
                        ": expected " + std::to_string(rows[0].size()) +
                        " fields, got " + std::to_string(row.size()));
        }
        ++result.rows_total;
        if (body_is_blank(row[col[2]])) {
            ++result.rows_skipped;
            continue;
        }
        Article a;
        a.date = row[col[0]];
        a.headline = row[col[1]];
        a.body = row[col[2]];
        a.source = row[col[3]];
        a.category = parse_category(row[col[4]]);
        a.url = row[col[5]];
        if (a.date.empty()) {
            throw Error(std::string(origin) + ": row " + std::to_string(i + 1) +
                        ": empty date");
        }
        articles.push_back(std::move(a));
    }
    result.corpus = Corpus(language, std::move(articles));
    return result;
}

IngestResult ingest_csv(const std::filesystem::path& path, Language language) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open corpus file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error("read failure on corpus file: " + path.string());
    }
    return ingest_csv_text(buf.str(), language, path.string());
}

std::string corpus_to_csv(const Corpus& corpus) {
    std::string out = "index,date,headline,body,source,category,url,length\n";
    for (const Article& a : corpus.articles()) {
        csv::write_row(out, {
                                std::to_string(a.index),
                                a.date,
                                a.headline,
                                a.body,
                                a.source,
                                std::string(category_name(a.category)),
                                a.url,
                                std::to_string(a.length),
                            });
    }
    return out;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open for writing: " + path.string());
    }
    out << corpus_to_csv(corpus);
    out.flush();
    if (!out) {
        throw Error("write failure: " + path.string());
    }
}

} // namespace xlsim
