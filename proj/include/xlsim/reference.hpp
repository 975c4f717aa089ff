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

#ifndef XLSIM_REFERENCE_HPP
#define XLSIM_REFERENCE_HPP

#include "xlsim/features.hpp"
#include "xlsim/ranking.hpp"

// Serial reference implementations of the parallel batch kernels.
// Kept as plain per-article / per-pair loops so tests can check the
// parallel paths against them and the benchmark can measure both.

namespace xlsim::serial {

std::vector<FeatureVector> vectorize_corpus(const Corpus& corpus,
                                            const Lexicon& lexicon,
                                            const WordList& words);

std::vector<ScoredArticle> score_corpus(const FeatureVector& query,
                                        std::span<const FeatureVector> corpus_vectors,
                                        const Metric& metric = {MetricKind::Cosine, 2.0});

} // namespace xlsim::serial

#endif
