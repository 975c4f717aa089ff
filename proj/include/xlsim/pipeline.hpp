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

#ifndef XLSIM_PIPELINE_HPP
#define XLSIM_PIPELINE_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "xlsim/corpus.hpp"
#include "xlsim/features.hpp"
#include "xlsim/lexicon.hpp"
#include "xlsim/ranking.hpp"

namespace xlsim {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_output_format(std::string_view name);

/// Which language the query article is in. The default matches the
/// primary use case: one English article against an Urdu corpus.
enum class QueryDirection { EnglishQuery, UrduQuery };

struct PipelineConfig {
    std::filesystem::path corpus_path;
    std::filesystem::path lexicon_path;
    std::filesystem::path query_path;
    std::size_t k = 10;
    Metric metric{MetricKind::Cosine, 2.0};
    OutputFormat output_format = OutputFormat::Table;
    std::optional<std::filesystem::path> wordlist_path;
    QueryDirection direction = QueryDirection::EnglishQuery;
};

/// Everything loaded once per corpus: articles, lexicon, segmentation
/// vocabulary and the precomputed per-article vectors.
struct PipelineContext {
    Corpus corpus;
    Lexicon lexicon;
    WordList words;
    std::vector<FeatureVector> corpus_vectors;
    QueryDirection direction = QueryDirection::EnglishQuery;
    std::size_t ingest_skipped = 0; // blank-body rows dropped on load
};

/// Segmentation vocabulary: the lexicon's Urdu spellings, plus the
/// corpus vocabulary when an Urdu corpus is given, plus an optional
/// one-word-per-line file.
WordList build_wordlist(const Lexicon& lexicon, const Corpus* urdu_corpus,
                        const std::optional<std::filesystem::path>& extra_words);

/// Loads corpus + lexicon + word list and vectorizes the corpus.
PipelineContext load_pipeline(const PipelineConfig& config);

/// Ranks the corpus against raw query text (read from no file).
std::vector<RankedResult> query_pipeline(const PipelineContext& ctx,
                                         std::string_view query_text,
                                         std::size_t k, const Metric& metric);

struct QueryOutput {
    std::vector<RankedResult> results;
    std::size_t corpus_articles = 0;
    std::size_t skipped_rows = 0;
};

/// The whole pipeline for one query file: ingest, tokenize, vectorize,
/// score, rank, enrich. Stage failures rethrow with the stage name.
/// Deterministic for fixed inputs.
QueryOutput run_query(const PipelineConfig& config);

struct EvalSummary {
    std::size_t queries_run = 0;
    double mean_top1_score = 0.0;
    std::size_t zero_overlap_count = 0; // queries whose best score is 0
};

/// Runs every query file in a directory against one corpus, writing a
/// ranked table per query to `out`, and returns the aggregate summary.
EvalSummary run_eval(const PipelineConfig& config,
                     const std::filesystem::path& queries_dir, std::ostream& out);

/// Renders results in the CLI's table / csv / json layouts with the
/// columns rank,index,score,percent,headline,url.
std::string format_results(std::span<const RankedResult> results, OutputFormat format);

} // namespace xlsim

#endif
