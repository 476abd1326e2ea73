#include "lexicon.hpp"

#include <fstream>

#include "errors.hpp"
#include "strutil.hpp"

namespace finsent {

namespace {

void load_word_file(const std::string& path, std::unordered_set<std::string>& into) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::io_error, "cannot open lexicon file: " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string word = trim(line);
        if (word.empty()) continue;
        word = to_lower(word);
        for (char c : word) {
            if (c < 'a' || c > 'z') {
                raise(ErrorKind::malformed_record,
                      path + ": line " + std::to_string(lineno) +
                          ": expected a single alphabetic word, got \"" + word + "\"");
            }
        }
        into.insert(std::move(word));
    }
}

}  // namespace

Lexicon Lexicon::load(const std::string& positive_path, const std::string& negative_path) {
    Lexicon lex;
    load_word_file(positive_path, lex.positive_);
    load_word_file(negative_path, lex.negative_);
    for (const auto& word : lex.positive_) {
        if (lex.negative_.count(word)) {
            raise(ErrorKind::overlapping_entry,
                  "word '" + word + "' appears in both polarity lists");
        }
    }
    return lex;
}

void Lexicon::add_positive(std::string_view word) {
    std::string w(word);
    if (negative_.count(w)) {
        raise(ErrorKind::overlapping_entry, "word '" + w + "' is already negative");
    }
    positive_.insert(std::move(w));
}

void Lexicon::add_negative(std::string_view word) {
    std::string w(word);
    if (positive_.count(w)) {
        raise(ErrorKind::overlapping_entry, "word '" + w + "' is already positive");
    }
    negative_.insert(std::move(w));
}

bool Lexicon::is_positive(std::string_view word) const {
    return positive_.find(std::string(word)) != positive_.end();
}

bool Lexicon::is_negative(std::string_view word) const {
    return negative_.find(std::string(word)) != negative_.end();
}

SentimentScore score_document(const std::vector<std::string>& tokens, const Lexicon& lex) {
    SentimentScore s;
    for (const auto& t : tokens) {
        if (lex.is_positive(t)) {
            ++s.pos_matches;
        } else if (lex.is_negative(t)) {
            ++s.neg_matches;
        }
    }
    s.score = (long long)(s.pos_matches) - (long long)(s.neg_matches);
    return s;
}

Polarity label_from_score(const SentimentScore& s) {
    return s.score >= 0 ? Polarity::positive : Polarity::negative;
}

std::vector<LabeledArticle> label_corpus(const ArticleSet& articles, const Lexicon& lex,
                                         const StopList& stoplist) {
    std::vector<LabeledArticle> out;
    out.reserve(articles.size());
    for (const auto& a : articles) {
        LabeledArticle la;
        la.article = a;
        la.score = score_document(scoring_tokens(a.headline + " " + a.body, stoplist), lex);
        la.article.label = label_from_score(la.score);
        out.push_back(std::move(la));
    }
    return out;
}

}  // namespace finsent
