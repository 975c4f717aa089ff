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

#ifndef XLSIM_NORMALIZE_HPP
#define XLSIM_NORMALIZE_HPP

#include <string>
#include <string_view>

#include "xlsim/tokens.hpp"

namespace xlsim {

/// English text after normalization: lowercased, free of punctuation
/// and symbols, with whitespace collapsed to single spaces and no
/// leading/trailing space. Only normalize_english produces one.
struct NormalizedText {
    std::string text;

    bool operator==(const NormalizedText&) const = default;
};

/// Lowercases (simple case folding), replaces every punctuation or
/// symbol character (Unicode categories P* and S*) with a space so
/// neighbouring words do not merge, then collapses whitespace runs.
/// Total: accepts any byte sequence.
NormalizedText normalize_english(std::string_view raw);

/// Splits on single spaces. Joining the tokens with one space
/// reproduces the normalized text.
TokenStream tokenize_english(const NormalizedText& norm);

} // namespace xlsim

#endif
