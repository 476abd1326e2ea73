#include "vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>

#include "errors.hpp"
#include "rng.hpp"
#include "strutil.hpp"

namespace finsent {

std::optional<size_t> Vocabulary::index_of(std::string_view term) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), term);
    if (it == terms.end() || *it != term) return std::nullopt;
    return size_t(it - terms.begin());
}

uint64_t Vocabulary::fingerprint() const {
    std::string canon = "vocab/" + std::to_string(n_docs) + "\n";
    for (size_t i = 0; i < terms.size(); ++i) {
        canon += terms[i];
        canon += ' ';
        canon += std::to_string(df[i]);
        canon += '\n';
    }
    return fnv1a64(canon);
}

Vocabulary fit_vocabulary(const std::vector<TokenizedDoc>& docs, size_t min_df) {
    if (min_df < 1) raise(ErrorKind::config_error, "min_df must be at least 1");

    // std::map gives the lexicographic order for free.
    std::map<std::string, uint32_t> counts;
    for (const auto& doc : docs) {
        std::unordered_set<std::string_view> seen;
        for (const auto& t : doc.tokens) {
            if (seen.insert(t).second) ++counts[t];
        }
    }

    Vocabulary vocab;
    vocab.n_docs = docs.size();
    for (const auto& [term, df] : counts) {
        if (df >= min_df) {
            vocab.terms.push_back(term);
            vocab.df.push_back(df);
        }
    }
    if (vocab.terms.empty()) {
        raise(ErrorKind::empty_vocabulary,
              "no term reaches the minimum document frequency of " + std::to_string(min_df));
    }
    return vocab;
}

double tfidf_weight(size_t tf, size_t df, size_t n_docs, const VectorizerOptions& opts) {
    if (df < 1 || df > n_docs) {
        raise(ErrorKind::config_error,
              "document frequency " + std::to_string(df) + " outside [1, " +
                  std::to_string(n_docs) + "]");
    }
    if (tf == 0) return 0.0;
    double tf_part = opts.sublinear_tf ? 1.0 + std::log(double(tf)) : double(tf);
    double idf = std::log(double(n_docs) / double(df));
    if (opts.add_one_idf) idf += 1.0;
    return tf_part * idf;
}

SparseVector transform(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                       const VectorizerOptions& opts) {
    std::unordered_map<size_t, size_t> tf;
    for (const auto& t : tokens) {
        if (auto idx = vocab.index_of(t)) ++tf[*idx];
    }
    SparseVector vec;
    vec.entries.reserve(tf.size());
    for (const auto& [idx, count] : tf) {
        double w = tfidf_weight(count, vocab.df[idx], vocab.n_docs, opts);
        if (w != 0.0) vec.entries.emplace_back(uint32_t(idx), w);
    }
    std::sort(vec.entries.begin(), vec.entries.end());
    return vec;
}

DocumentMatrix fit_transform(const std::vector<TokenizedDoc>& docs,
                             const std::vector<Polarity>& labels, size_t min_df,
                             const VectorizerOptions& opts) {
    if (!labels.empty() && labels.size() != docs.size()) {
        raise(ErrorKind::config_error,
              "label count " + std::to_string(labels.size()) + " does not match doc count " +
                  std::to_string(docs.size()));
    }
    DocumentMatrix matrix;
    matrix.vocab = fit_vocabulary(docs, min_df);
    matrix.labels = labels;
    matrix.rows.reserve(docs.size());
    for (const auto& doc : docs) {
        matrix.rows.push_back(transform(doc.tokens, matrix.vocab, opts));
    }
    return matrix;
}

void write_matrix(const DocumentMatrix& matrix, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::io_error, "cannot write matrix dump: " + path);
    out << matrix.n_rows() << ' ' << matrix.vocab.size() << '\n';
    for (size_t i = 0; i < matrix.n_rows(); ++i) {
        bool first = true;
        for (const auto& [idx, w] : matrix.rows[i].entries) {
            if (!first) out << ' ';
            out << idx << ':' << format_double(w);
            first = false;
        }
        if (matrix.has_labels()) {
            if (!first) out << ' ';
            out << polarity_name(matrix.labels[i]);
        }
        out << '\n';
    }
    if (!out.good()) raise(ErrorKind::io_error, "write failed for matrix dump: " + path);
}

}  // namespace finsent
