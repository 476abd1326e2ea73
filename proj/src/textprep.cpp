#include "textprep.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"
#include "strutil.hpp"

namespace finsent {

StopList StopList::load(const std::vector<std::string>& paths) {
    StopList out;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) raise(ErrorKind::io_error, "cannot open stop list: " + path);
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
            out.add(word);
        }
    }
    return out;
}

void StopList::add(std::string_view word) {
    words_.emplace(word);
}

bool StopList::contains(std::string_view word) const {
    return words_.find(std::string(word)) != words_.end();
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (std::isalpha(c)) {
            current.push_back(char(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopList& stoplist) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (!stoplist.contains(t)) kept.push_back(t);
    }
    return kept;
}

MinDfResult min_df_filter(const std::vector<TokenizedDoc>& docs, size_t min_df) {
    if (min_df < 1) raise(ErrorKind::config_error, "min_df must be at least 1");

    std::unordered_map<std::string, size_t> df;
    for (const auto& doc : docs) {
        std::unordered_set<std::string_view> seen;
        for (const auto& t : doc.tokens) {
            if (seen.insert(t).second) ++df[t];
        }
    }

    MinDfResult out;
    for (const auto& [term, count] : df) {
        if (count >= min_df) out.vocabulary.insert(term);
    }
    out.docs.reserve(docs.size());
    for (const auto& doc : docs) {
        TokenizedDoc filtered;
        filtered.doc_id = doc.doc_id;
        for (const auto& t : doc.tokens) {
            if (out.vocabulary.count(t)) filtered.tokens.push_back(t);
        }
        out.docs.push_back(std::move(filtered));
    }
    return out;
}

std::vector<std::string> scoring_tokens(std::string_view text, const StopList& stoplist) {
    return remove_stopwords(tokenize(text), stoplist);
}

std::vector<std::string> vector_tokens(std::string_view text, const StopList& stoplist,
                                       const PrepOptions& opts) {
    std::vector<std::string> out;
    for (const auto& token : remove_stopwords(tokenize(text), stoplist)) {
        std::string term = opts.stem ? porter_stem(token) : token;
        if (term.size() >= opts.min_token_len) out.push_back(std::move(term));
    }
    return out;
}

}  // namespace finsent
