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

#ifndef XLSIM_FEATURES_HPP
#define XLSIM_FEATURES_HPP

#include <cstdint>
#include <vector>

#include "xlsim/corpus.hpp"
#include "xlsim/lexicon.hpp"
#include "xlsim/tokens.hpp"
#include "xlsim/urdu_tokenizer.hpp"

namespace xlsim {

/// Which side of the lexicon the counts were matched against.
enum class Side { EnglishSide, UrduSide };

/// Bag-of-words counts over lexicon entries: counts[i] belongs to
/// lexicon entry i, so the vector length always equals the lexicon
/// size used to produce it.
struct FeatureVector {
    std::vector<std::uint32_t> counts;
    std::uint32_t article_index = 0;
    Side side = Side::EnglishSide;

    bool operator==(const FeatureVector&) const = default;
};

/// counts[i] = number of tokens equal to entry i's english word.
/// Tokens must already be normalized.
FeatureVector vectorize_english(const TokenStream& tokens, const Lexicon& lexicon);

/// Every entry whose variant list contains a token gets one count per
/// occurrence; a spelling shared by several entries feeds all of them.
FeatureVector vectorize_urdu(const TokenStream& tokens, const Lexicon& lexicon);

/// Tokenizes each article with the corpus-language tokenizer and emits
/// one vector per article in corpus order (article_index preserved).
/// Articles are processed in parallel; `words` feeds the Urdu
/// tokenizer and is ignored for English corpora.
std::vector<FeatureVector> vectorize_corpus(const Corpus& corpus,
                                            const Lexicon& lexicon,
                                            const WordList& words);

/// Tokenize-and-count for a single article body.
FeatureVector vectorize_body(std::string_view body, Language language,
                             const Lexicon& lexicon, const WordList& words,
                             std::uint32_t article_index = 0);

} // namespace xlsim

#endif
