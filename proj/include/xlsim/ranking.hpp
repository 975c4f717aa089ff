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

#ifndef XLSIM_RANKING_HPP
#define XLSIM_RANKING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xlsim/corpus.hpp"
#include "xlsim/features.hpp"
#include "xlsim/similarity.hpp"

namespace xlsim {

struct ScoredArticle {
    std::uint32_t article_index = 0;
    double score = 0.0;

    bool operator==(const ScoredArticle&) const = default;
};

/// One row of the final ranked table.
struct RankedResult {
    std::uint32_t rank = 0;          // position in the result list
    std::uint32_t article_index = 0;
    double score = 0.0;              // raw metric value
    double percent = 0.0;            // score x 100, 2 decimals
    std::string headline;
    std::string url;

    bool operator==(const RankedResult&) const = default;
};

/// Cosine of the query against every corpus vector, in corpus order.
/// Pairs are scored in parallel; a length mismatch is reported with
/// the offending article_index.
std::vector<ScoredArticle> score_corpus(const FeatureVector& query,
                                        std::span<const FeatureVector> corpus_vectors);

/// Same, with a runtime-selected metric.
std::vector<ScoredArticle> score_corpus(const FeatureVector& query,
                                        std::span<const FeatureVector> corpus_vectors,
                                        const Metric& metric);

enum class SortOrder { Descending, Ascending };

/// The k best entries: sorted by score (descending for similarity,
/// ascending for distances), ties broken by ascending article index.
/// Saturates to the full sorted list when k exceeds the input size.
/// Headline/url stay empty; enrich() fills them.
std::vector<RankedResult> top_k(std::span<const ScoredArticle> scores, std::size_t k,
                                SortOrder order = SortOrder::Descending);

/// score x 100 rounded to 2 decimals, half away from zero.
double to_percent(double score);

/// Copies headline and url from the corpus; order and scores are
/// untouched. Throws on a dangling article index.
std::vector<RankedResult> enrich(std::vector<RankedResult> results, const Corpus& corpus);

} // namespace xlsim

#endif
