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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "xlsim/normalize.hpp"
#include "xlsim/unicode.hpp"

using namespace xlsim;

TEST_CASE("normalize_english lowercases and strips punctuation") {
    CHECK(normalize_english("Hello, World!").text == "hello world");
    CHECK(normalize_english("").text == "");
    CHECK(normalize_english("U.S.-based, 2021 Q1: profits").text ==
          "u s based 2021 q1 profits");
}

TEST_CASE("normalize_english collapses whitespace and trims") {
    CHECK(normalize_english("  a   b\t\nc  ").text == "a b c");
    CHECK(normalize_english("...").text == "");
    CHECK(normalize_english("$100 + $200 = $300").text == "100 200 300");
}

TEST_CASE("normalize_english keeps digits and non-latin letters") {
    CHECK(normalize_english("abc123").text == "abc123");
    // Urdu letters are neither punctuation nor symbols.
    CHECK(normalize_english("News نیوز!").text == "news نیوز");
}

TEST_CASE("normalize_english is total on invalid UTF-8") {
    const std::string bad = std::string("ok\xFF\xFEgo");
    const NormalizedText out = normalize_english(bad);
    // U+FFFD is a symbol, so the bad bytes become a separator.
    CHECK(out.text == "ok go");
}

TEST_CASE("tokenize_english splits the normalized text on spaces") {
    CHECK(tokenize_english(normalize_english("hello world")) ==
          TokenStream{"hello", "world"});
    CHECK(tokenize_english(normalize_english("")) == TokenStream{});
    CHECK(tokenize_english(NormalizedText{"u s based 2021 q1 profits"}) ==
          TokenStream{"u", "s", "based", "2021", "q1", "profits"});
}

namespace {

std::string random_raw_text(testutil::Rng& rng) {
    static const std::string pool =
        "abcXYZ 019.,;:!?\"'()-_/\\\t\n"; // ASCII incl. punctuation
    static const std::vector<std::string> extras = {
        "é", "Ä", "،", "۔", "نیوز", "…", "—", "£",
    };
    std::string out;
    const std::size_t len = testutil::pick(rng, 0, 40);
    for (std::size_t i = 0; i < len; ++i) {
        if (testutil::pick(rng, 0, 7) == 0) {
            out += extras[testutil::pick(rng, 0, extras.size() - 1)];
        } else {
            out.push_back(pool[testutil::pick(rng, 0, pool.size() - 1)]);
        }
    }
    return out;
}

} // namespace

TEST_CASE("normalize_english is idempotent on generated text") {
    testutil::Rng rng(20260809);
    for (int i = 0; i < 500; ++i) {
        const std::string raw = random_raw_text(rng);
        const NormalizedText once = normalize_english(raw);
        CHECK(normalize_english(once.text).text == once.text);
    }
}

TEST_CASE("normalize_english ignores ASCII case") {
    testutil::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        std::string raw = random_raw_text(rng);
        std::string upper = raw;
        for (char& c : upper) {
            if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        }
        CHECK(normalize_english(raw).text == normalize_english(upper).text);
    }
}

TEST_CASE("normalized output satisfies its invariants") {
    testutil::Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        const std::string out = normalize_english(random_raw_text(rng)).text;
        CHECK(out.find("  ") == std::string::npos);
        if (!out.empty()) {
            CHECK(out.front() != ' ');
            CHECK(out.back() != ' ');
        }
        for (char32_t cp : uni::decode_utf8(out)) {
            CHECK_FALSE(uni::is_punct_or_symbol(cp));
            CHECK_FALSE((cp >= U'A' && cp <= U'Z'));
            if (uni::is_whitespace(cp)) CHECK(cp == U' ');
        }
    }
}

TEST_CASE("token boundaries only ever multiply") {
    // Splitting punctuation into spaces can only add boundaries:
    // tokens <= whitespace tokens + punctuation/symbol count.
    testutil::Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        const std::string raw = random_raw_text(rng);
        std::size_t ws_tokens = 0, punct = 0;
        bool in_tok = false;
        for (char32_t cp : uni::decode_utf8_lenient(raw)) {
            if (uni::is_punct_or_symbol(cp)) ++punct;
            const bool ws = uni::is_whitespace(cp);
            if (!ws && !in_tok) ++ws_tokens;
            in_tok = !ws;
        }
        const TokenStream tokens = tokenize_english(normalize_english(raw));
        CHECK(tokens.size() <= ws_tokens + punct);
    }
}

TEST_CASE("joining tokens with single spaces reproduces the normalized text") {
    testutil::Rng rng(1234);
    for (int i = 0; i < 300; ++i) {
        const NormalizedText norm = normalize_english(random_raw_text(rng));
        const TokenStream tokens = tokenize_english(norm);
        std::string joined;
        for (std::size_t t = 0; t < tokens.size(); ++t) {
            if (t > 0) joined.push_back(' ');
            joined += tokens[t];
        }
        CHECK(joined == norm.text);
    }
}
