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

#include "xlsim/features.hpp"

#include "xlsim/normalize.hpp"

namespace xlsim {

FeatureVector vectorize_english(const TokenStream& tokens, const Lexicon& lexicon) {
    FeatureVector v;
    v.side = Side::EnglishSide;
    v.counts.assign(lexicon.size(), 0);
    for (const std::string& token : tokens) {
        if (auto id = lexicon.lookup_english(token)) ++v.counts[*id];
    }
    return v;
}

FeatureVector vectorize_urdu(const TokenStream& tokens, const Lexicon& lexicon) {
    FeatureVector v;
    v.side = Side::UrduSide;
    v.counts.assign(lexicon.size(), 0);
    for (const std::string& token : tokens) {
        for (std::uint32_t id : lexicon.lookup_urdu(token)) ++v.counts[id];
    }
    return v;
}

FeatureVector vectorize_body(std::string_view body, Language language,
                             const Lexicon& lexicon, const WordList& words,
                             std::uint32_t article_index) {
    FeatureVector v;
    if (language == Language::English) {
        v = vectorize_english(tokenize_english(normalize_english(body)), lexicon);
    } else {
        v = vectorize_urdu(tokenize_urdu(body, words), lexicon);
    }
    v.article_index = article_index;
    return v;
}

std::vector<FeatureVector> vectorize_corpus(const Corpus& corpus,
                                            const Lexicon& lexicon,
                                            const WordList& words) {
    const std::vector<Article>& articles = corpus.articles();
    std::vector<FeatureVector> out(articles.size());
    const Language lang = corpus.language();

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(articles.size()); ++i) {
        const Article& a = articles[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] =
            vectorize_body(a.body, lang, lexicon, words, a.index);
    }
    return out;
}

} // namespace xlsim
