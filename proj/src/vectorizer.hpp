#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "textprep.hpp"

namespace finsent {

// Term table fitted on a training corpus. Terms are kept sorted so matrices
// and serialized artifacts are identical across runs; df and n_docs are
// frozen at fit time and reused for every later transform.
struct Vocabulary {
    std::vector<std::string> terms;
    std::vector<uint32_t> df;
    size_t n_docs = 0;

    size_t size() const { return terms.size(); }
    std::optional<size_t> index_of(std::string_view term) const;

    // Stable content hash; models remember it and refuse foreign matrices.
    uint64_t fingerprint() const;
};

// Sorted (index, weight) pairs; zero weights are never stored.
struct SparseVector {
    std::vector<std::pair<uint32_t, double>> entries;

    bool operator==(const SparseVector&) const = default;
};

inline double sparse_value_at(const SparseVector& x, uint32_t feature) {
    auto it = std::lower_bound(
        x.entries.begin(), x.entries.end(), feature,
        [](const std::pair<uint32_t, double>& e, uint32_t f) { return e.first < f; });
    if (it == x.entries.end() || it->first != feature) return 0.0;
    return it->second;
}

struct DocumentMatrix {
    std::vector<SparseVector> rows;
    std::vector<Polarity> labels;  // empty when unlabeled, else parallel to rows
    Vocabulary vocab;

    size_t n_rows() const { return rows.size(); }
    bool has_labels() const { return !labels.empty(); }
};

struct VectorizerOptions {
    bool sublinear_tf = false;  // 1 + ln(tf) instead of raw tf
    bool add_one_idf = false;   // ln(n/df) + 1 instead of ln(n/df)
};

Vocabulary fit_vocabulary(const std::vector<TokenizedDoc>& docs, size_t min_df);

// weight = tf_part * idf; default is raw tf times ln(n_docs/df), so a term
// present in every document weighs exactly 0.
double tfidf_weight(size_t tf, size_t df, size_t n_docs, const VectorizerOptions& opts = {});

// Out-of-vocabulary tokens are ignored; df/n_docs come from the fitted
// vocabulary, never from the document being transformed.
SparseVector transform(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                       const VectorizerOptions& opts = {});

// labels may be empty (unlabeled matrix); otherwise one per doc.
DocumentMatrix fit_transform(const std::vector<TokenizedDoc>& docs,
                             const std::vector<Polarity>& labels, size_t min_df,
                             const VectorizerOptions& opts = {});

// Debug dump: "n_rows n_cols" header, then one "index:weight ..." line per
// row with the label appended when present.
void write_matrix(const DocumentMatrix& matrix, const std::string& path);

}  // namespace finsent
