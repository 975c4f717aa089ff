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

#include "xlsim/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "xlsim/error.hpp"

namespace xlsim {

std::vector<ScoredArticle> score_corpus(const FeatureVector& query,
                                        std::span<const FeatureVector> corpus_vectors,
                                        const Metric& metric) {
    // Length check first, serially, so the error can name the article
    // and no exception escapes the parallel region.
    for (const FeatureVector& v : corpus_vectors) {
        if (v.counts.size() != query.counts.size()) {
            throw Error("article " + std::to_string(v.article_index) +
                        ": vector length " + std::to_string(v.counts.size()) +
                        " does not match query length " +
                        std::to_string(query.counts.size()));
        }
    }

    std::vector<ScoredArticle> scores(corpus_vectors.size());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(corpus_vectors.size()); ++i) {
        const FeatureVector& v = corpus_vectors[static_cast<std::size_t>(i)];
        scores[static_cast<std::size_t>(i)] =
            ScoredArticle{v.article_index, score_pair(query, v, metric).value};
    }
    return scores;
}

std::vector<ScoredArticle> score_corpus(const FeatureVector& query,
                                        std::span<const FeatureVector> corpus_vectors) {
    return score_corpus(query, corpus_vectors, Metric{MetricKind::Cosine, 2.0});
}

std::vector<RankedResult> top_k(std::span<const ScoredArticle> scores, std::size_t k,
                                SortOrder order) {
    if (k < 1) {
        throw Error("top_k requires k >= 1");
    }
    std::vector<ScoredArticle> sorted(scores.begin(), scores.end());
    const std::size_t take = std::min(k, sorted.size());
    const auto better = [order](const ScoredArticle& a, const ScoredArticle& b) {
        if (a.score != b.score) {
            return order == SortOrder::Descending ? a.score > b.score
                                                  : a.score < b.score;
        }
        return a.article_index < b.article_index;
    };
    std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(take),
                      sorted.end(), better);
    sorted.resize(take);

    std::vector<RankedResult> results(take);
    for (std::size_t i = 0; i < take; ++i) {
        results[i].rank = static_cast<std::uint32_t>(i);
        results[i].article_index = sorted[i].article_index;
        results[i].score = sorted[i].score;
        results[i].percent = to_percent(sorted[i].score);
    }
    return results;
}

double to_percent(double score) {
    if (!std::isfinite(score)) {
        throw Error("cannot convert non-finite score to percent");
    }
    // std::round rounds halfway cases away from zero.
    return std::round(score * 10000.0) / 100.0;
}

std::vector<RankedResult> enrich(std::vector<RankedResult> results, const Corpus& corpus) {
    for (RankedResult& r : results) {
        const Article& a = corpus.get(r.article_index);
        r.headline = a.headline;
        r.url = a.url;
    }
    return results;
}

} // namespace xlsim
