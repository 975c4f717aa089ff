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
#include <limits>

#include "testutil.hpp"
#include "xlsim/ranking.hpp"
#include "xlsim/reference.hpp"

using namespace xlsim;

namespace {

// The reference ranking table this engine reproduces: ten scored
// articles, listed here by ascending index.
const std::vector<ScoredArticle> kReferenceScores = {
    {104, 0.470391}, {173, 0.444444}, {281, 0.606788}, {297, 0.538863},
    {306, 0.414781}, {351, 0.437193}, {352, 0.444444}, {393, 0.439886},
    {440, 0.513625}, {445, 0.411476},
};

const std::vector<std::uint32_t> kReferenceOrder = {281, 297, 440, 104, 173,
                                                    352, 393, 351, 306, 445};

const std::vector<double> kReferencePercents = {60.68, 53.89, 51.36, 47.04, 44.44,
                                                44.44, 43.99, 43.72, 41.48, 41.15};

FeatureVector fv(std::vector<std::uint32_t> counts, std::uint32_t index = 0) {
    FeatureVector v;
    v.counts = std::move(counts);
    v.article_index = index;
    return v;
}

Article make_article(std::uint32_t i) {
    Article a;
    a.date = "2021-01-01";
    a.headline = "headline " + std::to_string(i);
    a.body = "body " + std::to_string(i);
    a.source = "s";
    a.url = "https://example.com/" + std::to_string(i);
    return a;
}

// Oracle: full stable sort, take the first k.
std::vector<ScoredArticle> sorted_prefix(std::vector<ScoredArticle> scores,
                                         std::size_t k, SortOrder order) {
    std::stable_sort(scores.begin(), scores.end(),
                     [order](const ScoredArticle& a, const ScoredArticle& b) {
                         if (a.score != b.score) {
                             return order == SortOrder::Descending
                                        ? a.score > b.score
                                        : a.score < b.score;
                         }
                         return a.article_index < b.article_index;
                     });
    if (scores.size() > k) scores.resize(k);
    return scores;
}

} // namespace

TEST_CASE("top_k reproduces the reference table order and percentages") {
    const auto results = top_k(kReferenceScores, 10);
    REQUIRE(results.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(results[i].rank == i);
        CHECK(results[i].article_index == kReferenceOrder[i]);
        CHECK(results[i].percent == kReferencePercents[i]);
    }
    // The tied pair at 0.444444 resolves by ascending index.
    CHECK(results[4].article_index == 173);
    CHECK(results[5].article_index == 352);
}

TEST_CASE("top_k saturates and rejects k = 0") {
    const std::vector<ScoredArticle> scores = {{0, 0.5}, {1, 0.9}, {2, 0.1}};
    CHECK(top_k(scores, 1).size() == 1);
    CHECK(top_k(scores, 1)[0].article_index == 1);

    const auto all = top_k(scores, 10);
    REQUIRE(all.size() == 3);
    CHECK(all[0].article_index == 1);
    CHECK(all[1].article_index == 0);
    CHECK(all[2].article_index == 2);

    CHECK_THROWS_AS(top_k(scores, 0), Error);
}

TEST_CASE("top_k equals the full-sort oracle on random inputs") {
    testutil::Rng rng(20260809);
    for (int round = 0; round < 300; ++round) {
        std::vector<ScoredArticle> scores;
        const std::size_t n = testutil::pick(rng, 0, 40);
        for (std::size_t i = 0; i < n; ++i) {
            // Coarse scores force plenty of ties.
            scores.push_back({static_cast<std::uint32_t>(i),
                              static_cast<double>(testutil::pick(rng, 0, 5)) / 5.0});
        }
        std::shuffle(scores.begin(), scores.end(), rng);
        const std::size_t k = testutil::pick(rng, 1, 12);
        const SortOrder order =
            testutil::pick(rng, 0, 1) == 0 ? SortOrder::Descending : SortOrder::Ascending;

        const auto expect = sorted_prefix(scores, k, order);
        const auto got = top_k(scores, k, order);
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].article_index == expect[i].article_index);
            CHECK(got[i].score == expect[i].score);
            CHECK(got[i].rank == i);
        }
        // Non-increasing scores; equal scores have increasing indices.
        for (std::size_t i = 1; i < got.size(); ++i) {
            if (order == SortOrder::Descending) {
                CHECK(got[i - 1].score >= got[i].score);
            } else {
                CHECK(got[i - 1].score <= got[i].score);
            }
            if (got[i - 1].score == got[i].score) {
                CHECK(got[i - 1].article_index < got[i].article_index);
            }
        }
    }
}

TEST_CASE("to_percent rounds half away from zero to two decimals") {
    CHECK(to_percent(0.606788) == 60.68);
    CHECK(to_percent(0.538863) == 53.89);
    CHECK(to_percent(0.0) == 0.00);
    CHECK(to_percent(0.44445) == 44.45); // exact half rounds away from zero
    CHECK(to_percent(-0.44445) == -44.45);
    CHECK(to_percent(1.0) == 100.0);
    CHECK_THROWS_AS(to_percent(std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(to_percent(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST_CASE("every reference score converts to its published percentage") {
    for (const ScoredArticle& s : kReferenceScores) {
        const auto it = std::find(kReferenceOrder.begin(), kReferenceOrder.end(),
                                  s.article_index);
        REQUIRE(it != kReferenceOrder.end());
        const std::size_t pos =
            static_cast<std::size_t>(it - kReferenceOrder.begin());
        CHECK(to_percent(s.score) == kReferencePercents[pos]);
    }
}

TEST_CASE("score_corpus scores every vector in corpus order") {
    const FeatureVector query = fv({1, 2, 2});
    std::vector<FeatureVector> corpus_vectors = {
        fv({1, 2, 2}, 0), // equal to the query
        fv({0, 0, 0}, 1), // zero overlap
        fv({2, 1, 2}, 2),
    };
    const auto scores = score_corpus(query, corpus_vectors);
    REQUIRE(scores.size() == 3);
    CHECK(scores[0].article_index == 0);
    CHECK(scores[0].score == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(scores[1].score == 0.0);
    CHECK(scores[2].score == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("score_corpus names the offending article on length mismatch") {
    const FeatureVector query = fv({1, 2});
    std::vector<FeatureVector> corpus_vectors = {fv({1, 2}, 0), fv({1, 2, 3}, 7)};
    CHECK_THROWS_WITH_AS(score_corpus(query, corpus_vectors),
                         doctest::Contains("article 7"), Error);
}

TEST_CASE("parallel scoring equals the serial per-pair loop") {
    testutil::Rng rng(555);
    for (int round = 0; round < 50; ++round) {
        const std::size_t dim = testutil::pick(rng, 1, 16);
        FeatureVector query = fv({});
        query.counts.resize(dim);
        for (auto& c : query.counts) {
            c = static_cast<std::uint32_t>(testutil::pick(rng, 0, 5));
        }
        std::vector<FeatureVector> vectors;
        const std::size_t n = testutil::pick(rng, 0, 30);
        for (std::size_t i = 0; i < n; ++i) {
            FeatureVector v = fv({}, static_cast<std::uint32_t>(i));
            v.counts.resize(dim);
            for (auto& c : v.counts) {
                c = static_cast<std::uint32_t>(testutil::pick(rng, 0, 5));
            }
            vectors.push_back(std::move(v));
        }
        CHECK(score_corpus(query, vectors) == serial::score_corpus(query, vectors));
    }
}

TEST_CASE("enrich copies headline and url without reordering") {
    std::vector<Article> articles;
    for (std::uint32_t i = 0; i < 5; ++i) articles.push_back(make_article(i));
    const Corpus corpus(Language::Urdu, std::move(articles));

    const std::vector<ScoredArticle> scores = {{0, 0.1}, {3, 0.9}, {2, 0.4}};
    const auto ranked = top_k(scores, 3);
    const auto enriched = enrich(ranked, corpus);
    REQUIRE(enriched.size() == 3);
    for (std::size_t i = 0; i < enriched.size(); ++i) {
        CHECK(enriched[i].article_index == ranked[i].article_index);
        CHECK(enriched[i].score == ranked[i].score);
        CHECK(enriched[i].headline ==
              corpus.get(enriched[i].article_index).headline);
        CHECK(enriched[i].url == corpus.get(enriched[i].article_index).url);
    }

    CHECK(enrich({}, corpus).empty());

    std::vector<RankedResult> dangling(1);
    dangling[0].article_index = 99;
    CHECK_THROWS_WITH_AS(enrich(dangling, corpus), doctest::Contains("out of range"),
                         Error);
}
