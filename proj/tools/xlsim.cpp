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

// xlsim — ranks Urdu news articles by similarity to an English query
// article (or the reverse) using a transliteration lexicon as the
// cross-language bridge. Subcommands expose each pipeline stage:
// ingest -> normalize/tokenize -> vectorize -> compare/query -> eval.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xlsim/corpus.hpp"
#include "xlsim/error.hpp"
#include "xlsim/features.hpp"
#include "xlsim/lexicon.hpp"
#include "xlsim/normalize.hpp"
#include "xlsim/pipeline.hpp"
#include "xlsim/ranking.hpp"
#include "xlsim/urdu_tokenizer.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw xlsim::Error("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

xlsim::WordList wordlist_for(const std::string& lexicon_path,
                             const std::string& wordlist_path) {
    xlsim::WordList words;
    if (!wordlist_path.empty()) {
        words = xlsim::WordList::from_file(wordlist_path);
    }
    if (!lexicon_path.empty()) {
        const xlsim::Lexicon lex = xlsim::Lexicon::load(lexicon_path);
        for (const xlsim::LexiconEntry& e : lex.entries()) {
            for (const std::string& v : e.urdu_variants) words.add(v);
        }
    }
    return words;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"xlsim: cross-language news similarity via transliterated words"};
    app.require_subcommand(1);

    // --- ingest ---------------------------------------------------------
    auto* ingest = app.add_subcommand(
        "ingest", "Load and validate a news corpus CSV (pipeline stage: data set)");
    std::string ingest_input, ingest_lang = "ur", ingest_output;
    ingest->add_option("input", ingest_input, "corpus CSV file")->required();
    ingest->add_option("--lang", ingest_lang, "corpus language: en or ur");
    ingest->add_option("-o,--output", ingest_output,
                       "write the reindexed corpus CSV here");

    // --- normalize ------------------------------------------------------
    auto* normalize = app.add_subcommand(
        "normalize",
        "Lowercase English text and strip punctuation (pipeline stage: normalization)");
    std::string normalize_input;
    normalize->add_option("input", normalize_input, "text file (default: stdin)");

    // --- tokenize -------------------------------------------------------
    auto* tokenize = app.add_subcommand(
        "tokenize", "Split text into tokens (pipeline stage: tokenization)");
    std::string tok_input, tok_lang = "ur", tok_lexicon, tok_wordlist;
    tokenize->add_option("input", tok_input, "text file (default: stdin)");
    tokenize->add_option("--lang", tok_lang, "text language: en or ur");
    tokenize->add_option("--lexicon", tok_lexicon,
                         "lexicon TSV; its Urdu side seeds the word list");
    tokenize->add_option("--wordlist", tok_wordlist,
                         "extra valid-word file for Urdu segmentation");

    // --- lexicon --------------------------------------------------------
    auto* lexicon = app.add_subcommand(
        "lexicon", "Inspect a transliteration lexicon (pipeline stage: lexicon building)");
    lexicon->require_subcommand(1);
    std::string lex_file;
    auto* lex_validate =
        lexicon->add_subcommand("validate", "parse the lexicon and report problems");
    lex_validate->add_option("file", lex_file, "lexicon TSV file")->required();
    auto* lex_stats = lexicon->add_subcommand("stats", "entry/variant/ambiguity counts");
    lex_stats->add_option("file", lex_file, "lexicon TSV file")->required();

    // --- vectorize ------------------------------------------------------
    auto* vectorize = app.add_subcommand(
        "vectorize", "Emit per-article lexicon term counts (pipeline stage: word count)");
    std::string vec_corpus, vec_lexicon, vec_lang = "ur", vec_wordlist;
    vectorize->add_option("--corpus", vec_corpus, "corpus CSV file")->required();
    vectorize->add_option("--lexicon", vec_lexicon, "lexicon TSV file")->required();
    vectorize->add_option("--lang", vec_lang, "corpus language: en or ur");
    vectorize->add_option("--wordlist", vec_wordlist, "extra valid-word file");

    // --- compare --------------------------------------------------------
    auto* compare = app.add_subcommand(
        "compare", "Score two article files (pipeline stage: similarity measures)");
    std::string cmp_a, cmp_b, cmp_lexicon, cmp_metric = "cosine";
    std::string cmp_lang_a = "en", cmp_lang_b = "ur", cmp_wordlist;
    compare->add_option("file_a", cmp_a, "first article text file")->required();
    compare->add_option("file_b", cmp_b, "second article text file")->required();
    compare->add_option("--lexicon", cmp_lexicon, "lexicon TSV file")->required();
    compare->add_option("--metric", cmp_metric,
                        "cosine | euclidean | manhattan | minkowski:<p>");
    compare->add_option("--lang-a", cmp_lang_a, "language of file_a: en or ur");
    compare->add_option("--lang-b", cmp_lang_b, "language of file_b: en or ur");
    compare->add_option("--wordlist", cmp_wordlist, "extra valid-word file");

    // --- query ----------------------------------------------------------
    auto* query = app.add_subcommand(
        "query",
        "Rank the corpus against one query article (pipeline stages: word count, "
        "cosine similarity, ranking)");
    std::string q_english, q_corpus, q_lexicon, q_metric = "cosine";
    std::string q_format = "table", q_wordlist, q_direction = "en-query";
    std::size_t q_k = 10;
    query->add_option("--english,--query", q_english, "query article text file")
        ->required();
    query->add_option("--corpus", q_corpus, "corpus CSV file")->required();
    query->add_option("--lexicon", q_lexicon, "lexicon TSV file")->required();
    query->add_option("--k", q_k, "number of results (default 10)");
    query->add_option("--metric", q_metric,
                      "cosine | euclidean | manhattan | minkowski:<p>");
    query->add_option("--format", q_format, "table | json | csv");
    query->add_option("--wordlist", q_wordlist, "extra valid-word file");
    query->add_option("--direction", q_direction,
                      "en-query (English query, Urdu corpus) or ur-query");

    // --- eval -----------------------------------------------------------
    auto* eval = app.add_subcommand(
        "eval", "Re-run the ranking for every query in a directory (evaluation)");
    std::string e_queries, e_corpus, e_lexicon, e_metric = "cosine";
    std::string e_format = "table", e_wordlist, e_direction = "en-query";
    std::size_t e_k = 10;
    eval->add_option("--queries", e_queries, "directory of query text files")
        ->required();
    eval->add_option("--corpus", e_corpus, "corpus CSV file")->required();
    eval->add_option("--lexicon", e_lexicon, "lexicon TSV file")->required();
    eval->add_option("--k", e_k, "results per query (default 10)");
    eval->add_option("--metric", e_metric, "similarity metric");
    eval->add_option("--format", e_format, "table | json | csv");
    eval->add_option("--wordlist", e_wordlist, "extra valid-word file");
    eval->add_option("--direction", e_direction, "en-query or ur-query");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) {
            const xlsim::IngestResult r =
                xlsim::ingest_csv(ingest_input, xlsim::parse_language(ingest_lang));
            if (!ingest_output.empty()) {
                xlsim::write_corpus(r.corpus, ingest_output);
            }
            std::cout << "articles: " << r.corpus.size()
                      << "  skipped: " << r.rows_skipped
                      << "  rows: " << r.rows_total << "\n";
        } else if (*normalize) {
            std::cout << xlsim::normalize_english(read_input(normalize_input)).text
                      << "\n";
        } else if (*tokenize) {
            const std::string text = read_input(tok_input);
            xlsim::TokenStream tokens;
            if (xlsim::parse_language(tok_lang) == xlsim::Language::English) {
                tokens = xlsim::tokenize_english(xlsim::normalize_english(text));
            } else {
                const xlsim::WordList words = wordlist_for(tok_lexicon, tok_wordlist);
                tokens = xlsim::tokenize_urdu(text, words);
            }
            for (const std::string& t : tokens) std::cout << t << "\n";
        } else if (*lex_validate) {
            const xlsim::LexiconStats s = xlsim::Lexicon::load(lex_file).stats();
            std::cout << "ok: " << s.entries << " entries, " << s.variants
                      << " variants\n";
        } else if (*lex_stats) {
            const xlsim::LexiconStats s = xlsim::Lexicon::load(lex_file).stats();
            std::cout << "entries: " << s.entries << "\nvariants: " << s.variants
                      << "\nambiguous urdu spellings: " << s.ambiguous_urdu << "\n";
        } else if (*vectorize) {
            const xlsim::Language lang = xlsim::parse_language(vec_lang);
            const xlsim::Corpus corpus = xlsim::ingest_csv(vec_corpus, lang).corpus;
            const xlsim::Lexicon lex = xlsim::Lexicon::load(vec_lexicon);
            std::optional<std::filesystem::path> extra;
            if (!vec_wordlist.empty()) extra = vec_wordlist;
            const xlsim::WordList words = xlsim::build_wordlist(
                lex, lang == xlsim::Language::Urdu ? &corpus : nullptr, extra);
            std::string header = "article_index";
            for (const xlsim::LexiconEntry& e : lex.entries()) {
                header += "," + e.english;
            }
            std::cout << header << "\n";
            for (const xlsim::FeatureVector& v :
                 xlsim::vectorize_corpus(corpus, lex, words)) {
                std::cout << v.article_index;
                for (std::uint32_t c : v.counts) std::cout << ',' << c;
                std::cout << "\n";
            }
        } else if (*compare) {
            const xlsim::Lexicon lex = xlsim::Lexicon::load(cmp_lexicon);
            const xlsim::WordList words = wordlist_for(cmp_lexicon, cmp_wordlist);
            const xlsim::FeatureVector va = xlsim::vectorize_body(
                read_input(cmp_a), xlsim::parse_language(cmp_lang_a), lex, words);
            const xlsim::FeatureVector vb = xlsim::vectorize_body(
                read_input(cmp_b), xlsim::parse_language(cmp_lang_b), lex, words);
            const xlsim::SimilarityScore s =
                xlsim::score_pair(va, vb, xlsim::Metric::parse(cmp_metric));
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f\n", s.value);
            std::cout << buf;
        } else if (*query) {
            xlsim::PipelineConfig config;
            config.corpus_path = q_corpus;
            config.lexicon_path = q_lexicon;
            config.query_path = q_english;
            config.k = q_k;
            config.metric = xlsim::Metric::parse(q_metric);
            config.output_format = xlsim::parse_output_format(q_format);
            if (!q_wordlist.empty()) config.wordlist_path = q_wordlist;
            config.direction = q_direction == "ur-query"
                                   ? xlsim::QueryDirection::UrduQuery
                                   : xlsim::QueryDirection::EnglishQuery;
            const xlsim::QueryOutput out = xlsim::run_query(config);
            std::cerr << "corpus articles: " << out.corpus_articles
                      << "  skipped rows: " << out.skipped_rows << "\n";
            std::cout << xlsim::format_results(out.results, config.output_format);
        } else if (*eval) {
            xlsim::PipelineConfig config;
            config.corpus_path = e_corpus;
            config.lexicon_path = e_lexicon;
            config.k = e_k;
            config.metric = xlsim::Metric::parse(e_metric);
            config.output_format = xlsim::parse_output_format(e_format);
            if (!e_wordlist.empty()) config.wordlist_path = e_wordlist;
            config.direction = e_direction == "ur-query"
                                   ? xlsim::QueryDirection::UrduQuery
                                   : xlsim::QueryDirection::EnglishQuery;
            xlsim::run_eval(config, e_queries, std::cout);
        }
    } catch (const xlsim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
