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

#include <algorithm>
#include <map>
#include <set>

#include "testutil.hpp"
#include "xlsim/error.hpp"
#include "xlsim/lexicon.hpp"

using namespace xlsim;

namespace {

// The eleven published sample pairs.
const char* kSampleLexicon =
    "athlete\tایتھلیٹ\n"
    "news\tنیوز\n"
    "videos\tویڈیوز\n"
    "hello\tہیلو\n"
    "fame\tفیم\n"
    "tape\tٹیپ\n"
    "special\tسپیشل\n"
    "apartment\tاپارٹمنٹ\n"
    "role\tرول\n"
    "tweet\tٹوئٹ\n"
    "portal\tپورٹل\n";

} // namespace

TEST_CASE("load assigns dense ids in first-occurrence order") {
    const Lexicon lex = Lexicon::parse("athlete\tایتھلیٹ\nnews\tنیوز\n");
    REQUIRE(lex.size() == 2);
    CHECK(lex.entries()[0].english == "athlete");
    CHECK(lex.entries()[0].id == 0);
    CHECK(lex.entries()[1].english == "news");
    CHECK(lex.entries()[1].id == 1);
    CHECK(lex.entries()[1].urdu_variants == std::vector<std::string>{"نیوز"});
}

TEST_CASE("duplicate pairs collapse, variants accumulate") {
    const Lexicon dup = Lexicon::parse("lift\tلفٹ\nlift\tلفٹ\n");
    REQUIRE(dup.size() == 1);
    CHECK(dup.entries()[0].urdu_variants == std::vector<std::string>{"لفٹ"});

    const Lexicon bank = Lexicon::parse("bank\tبینک\nbank\tبنک\n");
    REQUIRE(bank.size() == 1);
    CHECK(bank.entries()[0].urdu_variants ==
          std::vector<std::string>{"بینک", "بنک"});
}

TEST_CASE("parser normalizes the english side and rejects junk") {
    const Lexicon lex = Lexicon::parse("  News \tنیوز\n");
    CHECK(lex.entries()[0].english == "news");

    CHECK_THROWS_WITH_AS(Lexicon::parse("one two\tنیوز\n"),
                         doctest::Contains("line 1"), Error);
    CHECK_THROWS_WITH_AS(Lexicon::parse("news نیوز\n"),
                         doctest::Contains("two tab-separated fields"), Error);
    CHECK_THROWS_WITH_AS(Lexicon::parse("ok\tنیوز\nbad\t\n"),
                         doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(Lexicon::parse(""), Error);
    CHECK_THROWS_AS(Lexicon::parse("# only a comment\n"), Error);
}

TEST_CASE("comment lines and blank lines are ignored") {
    const Lexicon lex =
        Lexicon::parse("#英 اردو lexicon\nnews\tنیوز\n\n# more\nlift\tلفٹ\n");
    CHECK(lex.size() == 2);
}

TEST_CASE("a missing trailing newline changes nothing") {
    const Lexicon a = Lexicon::parse("news\tنیوز\nlift\tلفٹ");
    const Lexicon b = Lexicon::parse("news\tنیوز\nlift\tلفٹ\n");
    CHECK(a == b);
    CHECK(a.size() == 2);
}

TEST_CASE("lookup_english finds normalized tokens only") {
    const Lexicon lex = Lexicon::parse(kSampleLexicon);
    REQUIRE(lex.lookup_english("athlete").has_value());
    CHECK(*lex.lookup_english("athlete") == 0);
    CHECK_FALSE(lex.lookup_english("zzzz").has_value());
    // Callers normalize first; composition lands on the same id.
    CHECK(lex.lookup_english("news") == lex.lookup_english("news"));
    CHECK(*lex.lookup_english("news") == 1);
}

TEST_CASE("lookup_urdu returns every matching entry id") {
    const Lexicon lex = Lexicon::parse(kSampleLexicon);
    const auto videos = lex.lookup_urdu("ویڈیوز");
    REQUIRE(videos.size() == 1);
    CHECK(videos[0] == *lex.lookup_english("videos"));

    CHECK(lex.lookup_urdu("اسلام").empty()); // native word, no entry

    const Lexicon bank = Lexicon::parse("bank\tبینک\nbank\tبنک\n");
    const auto hits = bank.lookup_urdu("بینک");
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == 0);
}

TEST_CASE("a shared urdu spelling feeds every entry") {
    const Lexicon lex = Lexicon::parse("lift\tلفٹ\nelevator\tلفٹ\n");
    const auto ids = lex.lookup_urdu("لفٹ");
    REQUIRE(ids.size() == 2);
    CHECK(ids[0] == 0);
    CHECK(ids[1] == 1);
    CHECK(lex.stats().ambiguous_urdu == 1);
}

TEST_CASE("stats count entries, variants and ambiguity") {
    const LexiconStats s = Lexicon::parse(kSampleLexicon).stats();
    CHECK(s.entries == 11);
    CHECK(s.variants == 11);
    CHECK(s.ambiguous_urdu == 0);
    CHECK(s.variants >= s.entries); // every entry carries >= 1 variant

    const LexiconStats t =
        Lexicon::parse("bank\tبینک\nbank\tبنک\nlift\tلفٹ\nelevator\tلفٹ\n").stats();
    CHECK(t.entries == 3);
    CHECK(t.variants == 4);
    CHECK(t.ambiguous_urdu == 1);
}

TEST_CASE("urdu side is stored ZWNJ-free") {
    const Lexicon lex = Lexicon::parse("newsportal\tنیوز‌پورٹل\n");
    CHECK(lex.entries()[0].urdu_variants ==
          std::vector<std::string>{"نیوزپورٹل"});
    CHECK_FALSE(lex.lookup_urdu("نیوزپورٹل").empty());
}

TEST_CASE("the shipped starter lexicon loads cleanly") {
    const Lexicon lex =
        Lexicon::load(std::filesystem::path(XLSIM_DATA_DIR) / "lexicon.tsv");
    const LexiconStats s = lex.stats();
    CHECK(s.entries == 21);
    CHECK(s.variants == 21);
    CHECK(s.ambiguous_urdu == 0);
    REQUIRE(lex.lookup_english("news").has_value());
    CHECK_FALSE(lex.lookup_urdu("نیوز").empty());
    CHECK_FALSE(lex.lookup_urdu("لفٹ").size() > 0); // not a starter entry
}

TEST_CASE("load is deterministic and indexes stay consistent") {
    testutil::TempDir tmp;
    testutil::Rng rng(20260809);
    for (int round = 0; round < 40; ++round) {
        // Random lexicon text with duplicates and shared spellings.
        std::string text;
        std::vector<std::string> en_pool, ur_pool;
        for (int i = 0; i < 6; ++i) en_pool.push_back(testutil::random_ascii_word(rng));
        for (int i = 0; i < 5; ++i) ur_pool.push_back(testutil::random_urdu_word(rng));
        const std::size_t lines = testutil::pick(rng, 1, 14);
        for (std::size_t i = 0; i < lines; ++i) {
            text += en_pool[testutil::pick(rng, 0, en_pool.size() - 1)];
            text += '\t';
            text += ur_pool[testutil::pick(rng, 0, ur_pool.size() - 1)];
            text += '\n';
        }
        const auto path = tmp.file("lex.tsv");
        testutil::write_file(path, text);
        const Lexicon a = Lexicon::load(path);
        const Lexicon b = Lexicon::load(path);
        CHECK(a == b);

        // Rebuild both indexes from the entries and compare behaviour.
        std::map<std::string, std::uint32_t> en_index;
        std::map<std::string, std::set<std::uint32_t>> ur_index;
        for (const LexiconEntry& e : a.entries()) {
            en_index[e.english] = e.id;
            for (const std::string& v : e.urdu_variants) ur_index[v].insert(e.id);
        }
        for (const auto& [en, id] : en_index) {
            REQUIRE(a.lookup_english(en).has_value());
            CHECK(*a.lookup_english(en) == id);
        }
        for (const auto& [ur, ids] : ur_index) {
            const auto span = a.lookup_urdu(ur);
            CHECK(std::set<std::uint32_t>(span.begin(), span.end()) == ids);
        }

        // Bidirectional closure over every entry and variant.
        for (const LexiconEntry& e : a.entries()) {
            CHECK(e.id == static_cast<std::uint32_t>(&e - a.entries().data()));
            for (const std::string& v : e.urdu_variants) {
                const auto span = a.lookup_urdu(v);
                CHECK(std::find(span.begin(), span.end(), e.id) != span.end());
            }
        }
    }
}
