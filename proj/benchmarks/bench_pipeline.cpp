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

// Compares the OpenMP batch kernels against the serial reference on a
// synthetic corpus and verifies both produce identical output.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "xlsim/features.hpp"
#include "xlsim/pipeline.hpp"
#include "xlsim/ranking.hpp"
#include "xlsim/reference.hpp"

using namespace xlsim;
using Clock = std::chrono::steady_clock;

namespace {

std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string random_urdu_word(std::mt19937& rng) {
    static const std::vector<std::string> letters = {
        "ب", "پ", "ت", "ج", "ح", "س", "ش", "ف", "ق", "ک", "گ", "ل",
        "م", "ن", "ہ", "ی", "ا", "د", "ر", "ز", "و", "ے", "ٹ", "آ",
    };
    const std::size_t len = pick(rng, 3, 7);
    std::string word;
    for (std::size_t i = 0; i < len; ++i) {
        word += letters[pick(rng, 0, letters.size() - 1)];
    }
    return word;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel benchmark"};
    std::size_t n_articles = 3000;
    std::size_t n_lexicon = 4000;
    std::size_t tokens_per_article = 180;
    int repeats = 3;
    app.add_option("--articles", n_articles, "corpus size");
    app.add_option("--lexicon", n_lexicon, "lexicon entries");
    app.add_option("--tokens", tokens_per_article, "tokens per article body");
    app.add_option("--repeats", repeats, "timing repetitions");
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(20260809);

    std::string lex_text;
    std::vector<std::string> lex_urdu;
    for (std::size_t i = 0; i < n_lexicon; ++i) {
        lex_urdu.push_back(random_urdu_word(rng));
        lex_text += "word" + std::to_string(i) + "\t" + lex_urdu.back() + "\n";
    }
    const Lexicon lexicon = Lexicon::parse(lex_text);

    std::vector<std::string> background;
    for (std::size_t i = 0; i < n_lexicon; ++i) {
        background.push_back(random_urdu_word(rng));
    }
    std::vector<Article> articles;
    for (std::size_t i = 0; i < n_articles; ++i) {
        std::string body;
        for (std::size_t t = 0; t < tokens_per_article; ++t) {
            body += (pick(rng, 0, 4) == 0)
                        ? lex_urdu[pick(rng, 0, lex_urdu.size() - 1)]
                        : background[pick(rng, 0, background.size() - 1)];
            body += ' ';
        }
        Article a;
        a.date = "2026-01-01";
        a.headline = "headline " + std::to_string(i);
        a.body = std::move(body);
        a.source = "bench";
        a.url = "https://example.com/" + std::to_string(i);
        articles.push_back(std::move(a));
    }
    const Corpus corpus(Language::Urdu, std::move(articles));
    const WordList words = build_wordlist(lexicon, &corpus, std::nullopt);

    std::printf("articles=%zu lexicon=%zu tokens/article=%zu threads=%d\n",
                corpus.size(), lexicon.size(), tokens_per_article,
                omp_get_max_threads());

    std::vector<FeatureVector> serial_vectors, parallel_vectors;
    double serial_vec_ms = 0.0, parallel_vec_ms = 0.0;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = Clock::now();
        serial_vectors = serial::vectorize_corpus(corpus, lexicon, words);
        serial_vec_ms += ms_since(t0);

        t0 = Clock::now();
        parallel_vectors = vectorize_corpus(corpus, lexicon, words);
        parallel_vec_ms += ms_since(t0);
    }
    serial_vec_ms /= repeats;
    parallel_vec_ms /= repeats;
    if (serial_vectors != parallel_vectors) {
        std::fprintf(stderr, "FATAL: parallel vectorize output differs from serial\n");
        return 1;
    }

    FeatureVector query = serial_vectors.front();
    double serial_score_ms = 0.0, parallel_score_ms = 0.0;
    std::vector<ScoredArticle> serial_scores, parallel_scores;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = Clock::now();
        serial_scores = serial::score_corpus(query, serial_vectors);
        serial_score_ms += ms_since(t0);

        t0 = Clock::now();
        parallel_scores = score_corpus(query, parallel_vectors);
        parallel_score_ms += ms_since(t0);
    }
    serial_score_ms /= repeats;
    parallel_score_ms /= repeats;
    if (serial_scores != parallel_scores) {
        std::fprintf(stderr, "FATAL: parallel scoring output differs from serial\n");
        return 1;
    }

    std::printf("vectorize: serial %.1f ms, parallel %.1f ms, speedup %.2fx\n",
                serial_vec_ms, parallel_vec_ms, serial_vec_ms / parallel_vec_ms);
    std::printf("score:     serial %.1f ms, parallel %.1f ms, speedup %.2fx\n",
                serial_score_ms, parallel_score_ms,
                serial_score_ms / parallel_score_ms);
    return 0;
}
