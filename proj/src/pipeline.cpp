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

#include "xlsim/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "xlsim/csv.hpp"
#include "xlsim/error.hpp"
#include "xlsim/normalize.hpp"
#include "xlsim/unicode.hpp"

namespace xlsim {

namespace {

template <class F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(std::string(name) + ": " + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error("read failure: " + path.string());
    }
    return buf.str();
}

// Raw vocabulary chunks of one body: split on whitespace, punctuation
// and symbols; a pre-existing ZWNJ counts as an explicit boundary here.
void add_body_vocabulary(WordList& words, std::string_view body) {
    const std::u32string cps = uni::decode_utf8_lenient(body);
    std::u32string chunk;
    for (char32_t c : cps) {
        if (c == kZwnj || uni::is_whitespace(c) || uni::is_punct_or_symbol(c)) {
            if (!chunk.empty()) words.add(std::u32string_view(chunk));
            chunk.clear();
        } else {
            chunk.push_back(c);
        }
    }
    if (!chunk.empty()) words.add(std::u32string_view(chunk));
}

std::string format_double(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

} // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw Error("unknown output format '" + std::string(name) +
                "' (expected table, json or csv)");
}

WordList build_wordlist(const Lexicon& lexicon, const Corpus* urdu_corpus,
                        const std::optional<std::filesystem::path>& extra_words) {
    WordList words;
    if (extra_words) {
        words = WordList::from_file(*extra_words);
    }
    for (const LexiconEntry& e : lexicon.entries()) {
        for (const std::string& variant : e.urdu_variants) {
            words.add(variant);
        }
    }
    if (urdu_corpus) {
        for (const Article& a : urdu_corpus->articles()) {
            add_body_vocabulary(words, a.body);
        }
    }
    return words;
}

PipelineContext load_pipeline(const PipelineConfig& config) {
    PipelineContext ctx;
    ctx.direction = config.direction;
    const Language corpus_lang = config.direction == QueryDirection::EnglishQuery
                                     ? Language::Urdu
                                     : Language::English;

    stage("ingest", [&] {
        IngestResult ingested = ingest_csv(config.corpus_path, corpus_lang);
        ctx.corpus = std::move(ingested.corpus);
        ctx.ingest_skipped = ingested.rows_skipped;
    });
    ctx.lexicon = stage("lexicon", [&] { return Lexicon::load(config.lexicon_path); });
    ctx.words = stage("wordlist", [&] {
        const Corpus* urdu = corpus_lang == Language::Urdu ? &ctx.corpus : nullptr;
        return build_wordlist(ctx.lexicon, urdu, config.wordlist_path);
    });
    ctx.corpus_vectors = stage("vectorize", [&] {
        return vectorize_corpus(ctx.corpus, ctx.lexicon, ctx.words);
    });
    return ctx;
}

std::vector<RankedResult> query_pipeline(const PipelineContext& ctx,
                                         std::string_view query_text,
                                         std::size_t k, const Metric& metric) {
    const Language query_lang = ctx.direction == QueryDirection::EnglishQuery
                                    ? Language::English
                                    : Language::Urdu;
    const FeatureVector query = stage("vectorize", [&] {
        return vectorize_body(query_text, query_lang, ctx.lexicon, ctx.words);
    });
    const std::vector<ScoredArticle> scores = stage("score", [&] {
        return score_corpus(query, ctx.corpus_vectors, metric);
    });
    return stage("rank", [&] {
        const SortOrder order =
            metric.is_distance() ? SortOrder::Ascending : SortOrder::Descending;
        return enrich(top_k(scores, k, order), ctx.corpus);
    });
}

QueryOutput run_query(const PipelineConfig& config) {
    const PipelineContext ctx = load_pipeline(config);
    QueryOutput out;
    out.corpus_articles = ctx.corpus.size();
    out.skipped_rows = ctx.ingest_skipped;
    const std::string query_text =
        stage("query", [&] { return read_file(config.query_path); });
    out.results = query_pipeline(ctx, query_text, config.k, config.metric);
    return out;
}

EvalSummary run_eval(const PipelineConfig& config,
                     const std::filesystem::path& queries_dir, std::ostream& out) {
    std::vector<std::filesystem::path> files;
    {
        std::error_code ec;
        std::filesystem::directory_iterator it(queries_dir, ec);
        if (ec) {
            throw Error("eval: cannot read directory " + queries_dir.string() +
                        ": " + ec.message());
        }
        for (const auto& entry : it) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw Error("eval: no query files in " + queries_dir.string());
    }

    const PipelineContext ctx = load_pipeline(config);

    EvalSummary summary;
    double top1_sum = 0.0;
    for (const std::filesystem::path& file : files) {
        const std::string text = stage("query", [&] { return read_file(file); });
        const std::vector<RankedResult> results =
            query_pipeline(ctx, text, config.k, config.metric);
        out << "== " << file.filename().string() << " ==\n";
        out << format_results(results, config.output_format);
        ++summary.queries_run;
        const double top1 = results.empty() ? 0.0 : results.front().score;
        top1_sum += top1;
        if (!config.metric.is_distance() && top1 == 0.0) ++summary.zero_overlap_count;
    }
    summary.mean_top1_score =
        summary.queries_run == 0 ? 0.0 : top1_sum / static_cast<double>(summary.queries_run);
    out << "queries: " << summary.queries_run
        << "  mean top-1 score: " << format_double("%.6f", summary.mean_top1_score)
        << "  zero-overlap queries: " << summary.zero_overlap_count << "\n";
    return summary;
}

std::string format_results(std::span<const RankedResult> results, OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv: {
        std::string out = "rank,index,score,percent,headline,url\n";
        for (const RankedResult& r : results) {
            csv::write_row(out, {
                                    std::to_string(r.rank),
                                    std::to_string(r.article_index),
                                    format_double("%.6f", r.score),
                                    format_double("%.2f", r.percent),
                                    r.headline,
                                    r.url,
                                });
        }
        return out;
    }
    case OutputFormat::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const RankedResult& r : results) {
            arr.push_back({
                {"rank", r.rank},
                {"index", r.article_index},
                {"score", r.score},
                {"percent", r.percent},
                {"headline", r.headline},
                {"url", r.url},
            });
        }
        return arr.dump(2) + "\n";
    }
    case OutputFormat::Table: {
        std::string out = "rank  index  score     percent  headline | url\n";
        for (const RankedResult& r : results) {
            char head[80];
            std::snprintf(head, sizeof head, "%-4u  %-5u  %.6f  %5.2f %%  ",
                          r.rank, r.article_index, r.score, r.percent);
            out += head;
            out += r.headline;
            out += " | ";
            out += r.url;
            out.push_back('\n');
        }
        return out;
    }
    }
    return {};
}

} // namespace xlsim
