#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "corpus.hpp"
#include "textprep.hpp"

namespace finsent {

// Polarity word lists. The two sets are disjoint by construction; a word in
// both files is a load error, not a silent preference.
class Lexicon {
public:
    static Lexicon load(const std::string& positive_path, const std::string& negative_path);

    void add_positive(std::string_view word);
    void add_negative(std::string_view word);

    bool is_positive(std::string_view word) const;
    bool is_negative(std::string_view word) const;

    size_t positive_size() const { return positive_.size(); }
    size_t negative_size() const { return negative_.size(); }

private:
    std::unordered_set<std::string> positive_;
    std::unordered_set<std::string> negative_;
};

struct SentimentScore {
    size_t pos_matches = 0;
    size_t neg_matches = 0;
    // pos_matches - neg_matches; signed so a negative-heavy document is < 0
    long long score = 0;

    bool operator==(const SentimentScore&) const = default;
};

// Counts token occurrences (not distinct types) found in each word set.
// Tokens must be the stop-filtered, un-stemmed stream.
SentimentScore score_document(const std::vector<std::string>& tokens, const Lexicon& lex);

// Threshold at zero; the tie goes to positive.
Polarity label_from_score(const SentimentScore& s);

struct LabeledArticle {
    NewsArticle article;  // label filled in
    SentimentScore score;
};

// Scores headline + " " + body of every article and assigns the resulting
// polarity, replacing any label already present.
std::vector<LabeledArticle> label_corpus(const ArticleSet& articles, const Lexicon& lex,
                                         const StopList& stoplist);

}  // namespace finsent
