#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace finsent {

struct TokenizedDoc {
    std::string doc_id;
    std::vector<std::string> tokens;
};

// Lowercase word set loaded from plain-text files (one word per line, '#'
// starts a comment). Multiple files merge into one list.
class StopList {
public:
    static StopList load(const std::vector<std::string>& paths);

    void add(std::string_view word);
    bool contains(std::string_view word) const;
    size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Splits on every non-alphabetic character and lowercases, so digits,
// punctuation runs and whitespace never survive into tokens.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopList& stoplist);

// Classic suffix-stripping stem (Porter). Input must be a lowercase a-z word;
// words of length <= 2 pass through unchanged.
std::string porter_stem(std::string_view word);

struct MinDfResult {
    std::vector<TokenizedDoc> docs;
    std::unordered_set<std::string> vocabulary;
};

// Keeps only terms occurring in at least min_df distinct documents. Token
// order inside each doc is preserved; a doc may come back empty.
MinDfResult min_df_filter(const std::vector<TokenizedDoc>& docs, size_t min_df);

struct PrepOptions {
    bool stem = true;
    size_t min_token_len = 2;  // applied after stemming, vectorization stream only
};

// Stream fed to the polarity scorer: tokenize then drop stop words. Kept
// unstemmed because polarity word lists hold inflected forms.
std::vector<std::string> scoring_tokens(std::string_view text, const StopList& stoplist);

// Stream fed to the vectorizer: tokenize, drop stop words, stem, drop
// too-short leftovers of the split rule.
std::vector<std::string> vector_tokens(std::string_view text, const StopList& stoplist,
                                       const PrepOptions& opts);

}  // namespace finsent
