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

#include "xlsim/reference.hpp"

#include "xlsim/error.hpp"

namespace xlsim::serial {

std::vector<FeatureVector> vectorize_corpus(const Corpus& corpus,
                                            const Lexicon& lexicon,
                                            const WordList& words) {
    std::vector<FeatureVector> out;
    out.reserve(corpus.size());
    for (const Article& a : corpus.articles()) {
        out.push_back(vectorize_body(a.body, corpus.language(), lexicon, words, a.index));
    }
    return out;
}

std::vector<ScoredArticle> score_corpus(const FeatureVector& query,
                                        std::span<const FeatureVector> corpus_vectors,
                                        const Metric& metric) {
    std::vector<ScoredArticle> scores;
    scores.reserve(corpus_vectors.size());
    for (const FeatureVector& v : corpus_vectors) {
        if (v.counts.size() != query.counts.size()) {
            throw Error("article " + std::to_string(v.article_index) +
                        ": vector length " + std::to_string(v.counts.size()) +
                        " does not match query length " +
                        std::to_string(query.counts.size()));
        }
        scores.push_back({v.article_index, score_pair(query, v, metric).value});
    }
    return scores;
}

} // namespace xlsim::serial
