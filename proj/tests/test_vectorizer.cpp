#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"
#include "support.hpp"
#include "vectorizer.hpp"

using namespace finsent;
using testsupport::TempDir;

namespace {

std::vector<TokenizedDoc> three_docs() {
    return {
        {"d1", {"beat", "beat", "miss"}},
        {"d2", {"beat"}},
        {"d3", {"drop"}},
    };
}

}  // namespace

TEST_CASE("fit_vocabulary keeps terms by document frequency, sorted") {
    std::vector<TokenizedDoc> docs{
        {"d1", {"apple", "gain"}}, {"d2", {"apple", "gain"}}, {"d3", {"apple", "gain"}},
        {"d4", {"apple"}},         {"d5", {"zoo"}},
    };
    Vocabulary vocab = fit_vocabulary(docs, 3);
    REQUIRE(vocab.terms == std::vector<std::string>{"apple", "gain"});
    CHECK(vocab.df == std::vector<uint32_t>{4, 3});
    CHECK(vocab.n_docs == 5);
    CHECK(vocab.index_of("apple") == 0);
    CHECK(vocab.index_of("gain") == 1);
    CHECK(!vocab.index_of("zoo").has_value());

    Vocabulary single = fit_vocabulary({{"only", {"b", "a", "b"}}}, 1);
    CHECK(single.terms == std::vector<std::string>{"a", "b"});
    CHECK(single.n_docs == 1);

    CHECK_THROWS_AS(fit_vocabulary(docs, 6), Error);
    try {
        fit_vocabulary({}, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_vocabulary);
    }
    CHECK_THROWS_AS(fit_vocabulary(docs, 0), Error);
}

TEST_CASE("tfidf_weight matches the closed form") {
    CHECK(tfidf_weight(2, 1, 10) == doctest::Approx(4.6051701859880918).epsilon(1e-12));
    CHECK(tfidf_weight(3, 10, 10) == 0.0);  // term in every doc
    CHECK(tfidf_weight(0, 1, 10) == 0.0);
    CHECK_THROWS_AS(tfidf_weight(1, 0, 10), Error);
    CHECK_THROWS_AS(tfidf_weight(1, 11, 10), Error);

    VectorizerOptions sub;
    sub.sublinear_tf = true;
    CHECK(tfidf_weight(8, 1, 10, sub) ==
          doctest::Approx((1.0 + std::log(8.0)) * std::log(10.0)).epsilon(1e-12));
    VectorizerOptions add;
    add.add_one_idf = true;
    CHECK(tfidf_weight(3, 10, 10, add) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("tfidf_weight is monotone in tf and antitone in df") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n_docs = 2 + uniform_below(gen, 200);
        size_t df = 1 + uniform_below(gen, n_docs - 1);  // keep df < n_docs
        size_t tf = 1 + uniform_below(gen, 20);
        CHECK(tfidf_weight(tf, df, n_docs) >= 0.0);
        CHECK(tfidf_weight(tf + 1, df, n_docs) > tfidf_weight(tf, df, n_docs));
        CHECK(tfidf_weight(tf, df + 1, n_docs) < tfidf_weight(tf, df, n_docs));
    }
}

TEST_CASE("transform uses fitted df and ignores unknown tokens") {
    std::vector<TokenizedDoc> docs;
    docs.push_back({"d0", {"rare"}});
    for (int i = 1; i < 10; ++i) docs.push_back({"d" + std::to_string(i), {"filler"}});
    Vocabulary vocab = fit_vocabulary(docs, 1);
    REQUIRE(vocab.n_docs == 10);

    SparseVector v = transform({"rare"}, vocab);
    REQUIRE(v.entries.size() == 1);
    CHECK(v.entries[0].first == vocab.index_of("rare"));
    CHECK(v.entries[0].second == doctest::Approx(2.3025850929940459).epsilon(1e-12));

    CHECK(transform({"unseen", "words"}, vocab).entries.empty());

    // Unseen docs never change the fitted table.
    uint64_t before = vocab.fingerprint();
    (void)transform({"rare", "unseen", "filler", "rare"}, vocab);
    CHECK(vocab.fingerprint() == before);
}

TEST_CASE("fit_transform rows equal transform of each doc") {
    auto docs = three_docs();
    std::vector<Polarity> labels{Polarity::positive, Polarity::positive, Polarity::negative};
    DocumentMatrix matrix = fit_transform(docs, labels, 1);
    REQUIRE(matrix.n_rows() == 3);
    REQUIRE(matrix.has_labels());
    CHECK(matrix.labels == labels);
    for (size_t i = 0; i < docs.size(); ++i) {
        CHECK(matrix.rows[i] == transform(docs[i].tokens, matrix.vocab));
    }

    // Duplicate documents come out as identical rows.
    auto twice = docs;
    twice.push_back({"dup", docs[0].tokens});
    DocumentMatrix m2 = fit_transform(twice, {}, 1);
    CHECK(m2.rows[0] == m2.rows[3]);

    CHECK_THROWS_AS(fit_transform({}, {}, 1), Error);
    CHECK_THROWS_AS(fit_transform(docs, {Polarity::positive}, 1), Error);
}

TEST_CASE("weights of an all-docs term vanish from rows but stay in vocab") {
    std::vector<TokenizedDoc> docs{
        {"d1", {"common", "spike"}},
        {"d2", {"common", "spike"}},
        {"d3", {"common"}},
    };
    DocumentMatrix matrix = fit_transform(docs, {}, 1);
    REQUIRE(matrix.vocab.index_of("common").has_value());
    for (const auto& row : matrix.rows) {
        for (const auto& [idx, w] : row.entries) {
            CHECK(idx != *matrix.vocab.index_of("common"));
            CHECK(w > 0.0);
        }
    }
}

TEST_CASE("vocabulary fingerprint tracks content") {
    Vocabulary a = fit_vocabulary(three_docs(), 1);
    Vocabulary b = fit_vocabulary(three_docs(), 1);
    CHECK(a.fingerprint() == b.fingerprint());

    Vocabulary c = a;
    c.df[0] += 1;
    CHECK(c.fingerprint() != a.fingerprint());
    Vocabulary d = a;
    d.n_docs += 1;
    CHECK(d.fingerprint() != a.fingerprint());
}

TEST_CASE("matrix dump bytes are frozen") {
    auto docs = three_docs();
    std::vector<Polarity> labels{Polarity::positive, Polarity::positive, Polarity::negative};
    DocumentMatrix matrix = fit_transform(docs, labels, 1);
    TempDir dir;
    auto path = dir.file("matrix.txt");
    write_matrix(matrix, path);
    // vocab order: beat(0, df 2), drop(1, df 1), miss(2, df 1); n_docs 3
    CHECK(testsupport::read_file(path) ==
          "3 3\n"
          "0:0.81093021621632877 2:1.0986122886681098 pos\n"
          "0:0.40546510810816438 pos\n"
          "1:1.0986122886681098 neg\n");
}
