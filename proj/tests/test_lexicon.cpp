#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "lexicon.hpp"
#include "rng.hpp"
#include "support.hpp"

using namespace finsent;
using testsupport::TempDir;
using testsupport::write_file;

namespace {

Lexicon tiny_lexicon() {
    Lexicon lex;
    lex.add_positive("profit");
    lex.add_positive("strong");
    lex.add_positive("good");
    lex.add_negative("weak");
    lex.add_negative("bad");
    return lex;
}

}  // namespace

TEST_CASE("lexicon load lowercases, dedups and rejects overlap") {
    TempDir dir;
    auto pos = write_file(dir.file("pos.txt"), "Gain\ngain\nprofit # dup on purpose\n");
    auto neg = write_file(dir.file("neg.txt"), "loss\nweak\n");
    Lexicon lex = Lexicon::load(pos, neg);
    CHECK(lex.positive_size() == 2);
    CHECK(lex.negative_size() == 2);
    CHECK(lex.is_positive("gain"));
    CHECK(lex.is_negative("loss"));
    CHECK(!lex.is_positive("loss"));

    auto overlap = write_file(dir.file("overlap.txt"), "gain\n");
    CHECK_THROWS_AS(Lexicon::load(pos, overlap), Error);
    try {
        Lexicon::load(pos, overlap);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::overlapping_entry);
    }

    auto empty = write_file(dir.file("empty.txt"), "# nothing\n");
    Lexicon no_neg = Lexicon::load(pos, empty);
    CHECK(no_neg.negative_size() == 0);
}

TEST_CASE("score_document counts occurrences, not distinct words") {
    Lexicon lex = tiny_lexicon();
    CHECK(score_document({"profit", "strong", "weak"}, lex) == SentimentScore{2, 1, 1});
    CHECK(score_document({}, lex) == SentimentScore{0, 0, 0});
    CHECK(score_document({"good", "good", "bad"}, lex) == SentimentScore{2, 1, 1});
    CHECK(score_document({"filler", "words", "only"}, lex) == SentimentScore{0, 0, 0});
}

TEST_CASE("score_document equals the brute-force membership loop") {
    // Random token lists checked against an independently coded counter.
    std::vector<std::string> pos_words, neg_words, neutral;
    for (int i = 0; i < 20; ++i) {
        pos_words.push_back("p" + std::to_string(i));
        neg_words.push_back("n" + std::to_string(i));
        neutral.push_back("x" + std::to_string(i));
    }
    Lexicon lex;
    for (const auto& w : pos_words) lex.add_positive(w);
    for (const auto& w : neg_words) lex.add_negative(w);

    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> tokens;
        size_t len = uniform_below(gen, 51);
        for (size_t i = 0; i < len; ++i) {
            switch (uniform_below(gen, 3)) {
                case 0: tokens.push_back(pos_words[uniform_below(gen, 20)]); break;
                case 1: tokens.push_back(neg_words[uniform_below(gen, 20)]); break;
                default: tokens.push_back(neutral[uniform_below(gen, 20)]); break;
            }
        }
        size_t pos = 0, neg = 0;
        for (const auto& t : tokens) {
            for (const auto& w : pos_words) {
                if (t == w) ++pos;
            }
            for (const auto& w : neg_words) {
                if (t == w) ++neg;
            }
        }
        SentimentScore got = score_document(tokens, lex);
        CHECK(got.pos_matches == pos);
        CHECK(got.neg_matches == neg);
        CHECK(got.score == (long long)(pos) - (long long)(neg));
    }
}

TEST_CASE("appending lexicon tokens moves the score one way only") {
    Lexicon lex = tiny_lexicon();
    std::vector<std::string> tokens{"weak", "filler"};
    long long prev = score_document(tokens, lex).score;
    for (int i = 0; i < 5; ++i) {
        tokens.push_back("good");
        long long next = score_document(tokens, lex).score;
        CHECK(next >= prev);
        prev = next;
    }
    for (int i = 0; i < 5; ++i) {
        tokens.push_back("bad");
        long long next = score_document(tokens, lex).score;
        CHECK(next <= prev);
        prev = next;
    }
    // Neutral tokens never move it.
    long long before = score_document(tokens, lex).score;
    tokens.push_back("unrelated");
    CHECK(score_document(tokens, lex).score == before);
}

TEST_CASE("label_from_score thresholds at zero, tie positive") {
    CHECK(label_from_score({0, 0, 0}) == Polarity::positive);
    CHECK(label_from_score({2, 2, 0}) == Polarity::positive);
    CHECK(label_from_score({0, 1, -1}) == Polarity::negative);
    CHECK(label_from_score({5, 0, 5}) == Polarity::positive);
}

TEST_CASE("label_corpus scores headline and body together") {
    Lexicon lex = tiny_lexicon();
    StopList stops;
    stops.add("the");

    ArticleSet set;
    set.articles.push_back({"a1", Date{2014, 1, 2}, "Strong profit", "The outlook is good.",
                            std::nullopt});
    set.articles.push_back({"a2", Date{2014, 1, 3}, "Weak quarter", "Bad results, weak sales.",
                            std::nullopt});
    set.articles.push_back({"a3", Date{2014, 1, 4}, "The the", "", std::nullopt});
    set.articles.push_back({"a4", Date{2014, 1, 5}, "Good news", "", Polarity::negative});

    auto labeled = label_corpus(set, lex, stops);
    REQUIRE(labeled.size() == 4);
    CHECK(labeled[0].score == SentimentScore{3, 0, 3});
    CHECK(labeled[0].article.label == Polarity::positive);
    CHECK(labeled[1].score == SentimentScore{0, 3, -3});
    CHECK(labeled[1].article.label == Polarity::negative);
    // All-stopword article scores 0 and lands positive.
    CHECK(labeled[2].score == SentimentScore{0, 0, 0});
    CHECK(labeled[2].article.label == Polarity::positive);
    // Headline alone is enough, and any prior label is replaced.
    CHECK(labeled[3].article.label == Polarity::positive);
    // Raw article text is never mutated.
    CHECK(labeled[0].article.headline == "Strong profit");
    CHECK(labeled[0].article.body == "The outlook is good.");
}
