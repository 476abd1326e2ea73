#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "strutil.hpp"

namespace finsent {

namespace {

constexpr const char* kMagic = "finsent-model";
constexpr int kVersion = 1;

void check_indices(const SparseVector& x, size_t dimension) {
    for (const auto& [idx, w] : x.entries) {
        if (idx >= dimension) {
            raise(ErrorKind::vocabulary_mismatch,
                  "vector index " + std::to_string(idx) + " outside vocabulary of size " +
                      std::to_string(dimension));
        }
        (void)w;
    }
}

Prediction predict_nb(const NBParams& nb, const SparseVector& x) {
    double lp[2] = {nb.log_prior[0], nb.log_prior[1]};
    for (const auto& [idx, w] : x.entries) {
        lp[0] += w * nb.log_likelihood[0][idx];
        lp[1] += w * nb.log_likelihood[1][idx];
    }
    double hi = std::max(lp[0], lp[1]);
    double lse = hi + std::log(std::exp(lp[0] - hi) + std::exp(lp[1] - hi));
    Prediction p;
    p.score = std::exp(lp[1] - lse);
    p.label = lp[1] >= lp[0] ? Polarity::positive : Polarity::negative;
    return p;
}

Polarity tree_vote(const DecisionTree& tree, const SparseVector& x) {
    size_t node = 0;
    while (tree.nodes[node].feature >= 0) {
        const TreeNode& n = tree.nodes[node];
        node = size_t(sparse_value_at(x, uint32_t(n.feature)) <= n.threshold ? n.left : n.right);
    }
    const TreeNode& leaf = tree.nodes[node];
    return leaf.count[1] >= leaf.count[0] ? Polarity::positive : Polarity::negative;
}

Prediction predict_rf(const RFParams& rf, const SparseVector& x) {
    size_t votes_pos = 0;
    for (const auto& tree : rf.trees) {
        if (tree_vote(tree, x) == Polarity::positive) ++votes_pos;
    }
    Prediction p;
    p.score = double(votes_pos) / double(rf.trees.size());
    p.label = p.score >= 0.5 ? Polarity::positive : Polarity::negative;
    return p;
}

Prediction predict_svm(const SVMParams& svm, const SparseVector& x) {
    double margin = svm.bias;
    for (const auto& [idx, w] : x.entries) margin += w * svm.weights[idx];
    Prediction p;
    p.score = margin;
    p.label = margin >= 0.0 ? Polarity::positive : Polarity::negative;
    return p;
}

// ---- serialization helpers ----

void expect_word(std::istream& in, const char* expected, const std::string& path) {
    std::string word;
    if (!(in >> word) || word != expected) {
        raise(ErrorKind::malformed_record,
              path + ": expected '" + expected + "' in model file, got '" + word + "'");
    }
}

template <typename T>
T read_value(std::istream& in, const char* what, const std::string& path) {
    T v{};
    if (!(in >> v)) {
        raise(ErrorKind::malformed_record, path + ": cannot read " + std::string(what));
    }
    return v;
}

template <typename T>
T read_field(std::istream& in, const char* key, const std::string& path) {
    expect_word(in, key, path);
    return read_value<T>(in, key, path);
}

}  // namespace

const char* model_variant_name(ModelVariant v) {
    switch (v) {
        case ModelVariant::naive_bayes: return "nb";
        case ModelVariant::random_forest: return "rf";
        case ModelVariant::svm: return "svm";
    }
    return "?";
}

ModelVariant TrainedModel::variant() const {
    return ModelVariant(uint8_t(params.index()));
}

Prediction predict(const TrainedModel& model, const SparseVector& x, uint64_t x_fingerprint) {
    if (x_fingerprint != model.vocab_fingerprint) {
        raise(ErrorKind::vocabulary_mismatch,
              "vector was built against a different vocabulary than the model");
    }
    check_indices(x, model.vocab.size());
    if (const auto* nb = std::get_if<NBParams>(&model.params)) return predict_nb(*nb, x);
    if (const auto* rf = std::get_if<RFParams>(&model.params)) return predict_rf(*rf, x);
    return predict_svm(std::get<SVMParams>(model.params), x);
}

std::vector<Prediction> predict_matrix(const TrainedModel& model, const DocumentMatrix& matrix) {
    uint64_t fp = matrix.vocab.fingerprint();
    std::vector<Prediction> out;
    out.reserve(matrix.n_rows());
    for (const auto& row : matrix.rows) out.push_back(predict(model, row, fp));
    return out;
}

void save_model(const TrainedModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::io_error, "cannot write model file: " + path);

    out << kMagic << ' ' << kVersion << '\n';
    out << "variant " << model_variant_name(model.variant()) << '\n';
    out << "fingerprint " << model.vocab_fingerprint << '\n';
    out << "stem " << (model.prep.stem ? 1 : 0) << '\n';
    out << "min_token_len " << model.prep.min_token_len << '\n';
    out << "sublinear_tf " << (model.weighting.sublinear_tf ? 1 : 0) << '\n';
    out << "add_one_idf " << (model.weighting.add_one_idf ? 1 : 0) << '\n';
    out << "n_docs " << model.vocab.n_docs << '\n';
    out << "terms " << model.vocab.size() << '\n';
    for (size_t i = 0; i < model.vocab.size(); ++i) {
        out << model.vocab.terms[i] << ' ' << model.vocab.df[i] << '\n';
    }

    if (const auto* nb = std::get_if<NBParams>(&model.params)) {
        out << "alpha " << format_double(nb->alpha) << '\n';
        out << "log_prior " << format_double(nb->log_prior[0]) << ' '
            << format_double(nb->log_prior[1]) << '\n';
        out << "likelihoods " << nb->log_likelihood[0].size() << '\n';
        for (size_t i = 0; i < nb->log_likelihood[0].size(); ++i) {
            out << format_double(nb->log_likelihood[0][i]) << ' '
                << format_double(nb->log_likelihood[1][i]) << '\n';
        }
    } else if (const auto* rf = std::get_if<RFParams>(&model.params)) {
        out << "n_trees " << rf->n_trees << '\n';
        out << "m_try " << rf->m_try << '\n';
        out << "max_depth " << rf->max_depth << '\n';
        out << "bootstrap " << (rf->bootstrap ? 1 : 0) << '\n';
        out << "seed " << rf->seed << '\n';
        for (size_t t = 0; t < rf->trees.size(); ++t) {
            const auto& nodes = rf->trees[t].nodes;
            out << "tree " << t << " nodes " << nodes.size() << '\n';
            for (const auto& n : nodes) {
                out << n.feature << ' ' << format_double(n.threshold) << ' ' << n.left << ' '
                    << n.right << ' ' << n.count[0] << ' ' << n.count[1] << '\n';
            }
        }
    } else {
        const auto& svm = std::get<SVMParams>(model.params);
        out << "c " << format_double(svm.c) << '\n';
        out << "epochs " << svm.epochs << '\n';
        out << "converged " << (svm.converged ? 1 : 0) << '\n';
        out << "bias " << format_double(svm.bias) << '\n';
        out << "weights " << svm.weights.size() << '\n';
        for (double w : svm.weights) out << format_double(w) << '\n';
    }
    out << "end\n";
    if (!out.good()) raise(ErrorKind::io_error, "write failed for model file: " + path);
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::io_error, "cannot open model file: " + path);

    expect_word(in, kMagic, path);
    int version = read_value<int>(in, "version", path);
    if (version != kVersion) {
        raise(ErrorKind::malformed_record,
              path + ": unsupported model version " + std::to_string(version));
    }
    expect_word(in, "variant", path);
    std::string variant = read_value<std::string>(in, "variant", path);

    TrainedModel model;
    model.vocab_fingerprint = read_field<uint64_t>(in, "fingerprint", path);
    model.prep.stem = read_field<int>(in, "stem", path) != 0;
    model.prep.min_token_len = read_field<size_t>(in, "min_token_len", path);
    model.weighting.sublinear_tf = read_field<int>(in, "sublinear_tf", path) != 0;
    model.weighting.add_one_idf = read_field<int>(in, "add_one_idf", path) != 0;
    model.vocab.n_docs = read_field<size_t>(in, "n_docs", path);
    size_t n_terms = read_field<size_t>(in, "terms", path);
    model.vocab.terms.reserve(n_terms);
    model.vocab.df.reserve(n_terms);
    for (size_t i = 0; i < n_terms; ++i) {
        model.vocab.terms.push_back(read_value<std::string>(in, "term", path));
        model.vocab.df.push_back(read_value<uint32_t>(in, "df", path));
        if (i > 0 && model.vocab.terms[i] <= model.vocab.terms[i - 1]) {
            raise(ErrorKind::malformed_record, path + ": vocabulary terms not sorted");
        }
        if (model.vocab.df[i] < 1 || model.vocab.df[i] > model.vocab.n_docs) {
            raise(ErrorKind::malformed_record,
                  path + ": df out of range for term '" + model.vocab.terms[i] + "'");
        }
    }
    if (model.vocab.fingerprint() != model.vocab_fingerprint) {
        raise(ErrorKind::malformed_record,
              path + ": vocabulary fingerprint mismatch, file is corrupt");
    }

    if (variant == "nb") {
        NBParams nb;
        nb.alpha = read_field<double>(in, "alpha", path);
        expect_word(in, "log_prior", path);
        nb.log_prior[0] = read_value<double>(in, "log_prior", path);
        nb.log_prior[1] = read_value<double>(in, "log_prior", path);
        size_t n = read_field<size_t>(in, "likelihoods", path);
        if (n != n_terms) {
            raise(ErrorKind::malformed_record, path + ": likelihood count != term count");
        }
        nb.log_likelihood[0].reserve(n);
        nb.log_likelihood[1].reserve(n);
        for (size_t i = 0; i < n; ++i) {
            nb.log_likelihood[0].push_back(read_value<double>(in, "likelihood", path));
            nb.log_likelihood[1].push_back(read_value<double>(in, "likelihood", path));
        }
        model.params = std::move(nb);
    } else if (variant == "rf") {
        RFParams rf;
        rf.n_trees = read_field<uint32_t>(in, "n_trees", path);
        rf.m_try = read_field<uint32_t>(in, "m_try", path);
        rf.max_depth = read_field<uint32_t>(in, "max_depth", path);
        rf.bootstrap = read_field<int>(in, "bootstrap", path) != 0;
        rf.seed = read_field<uint64_t>(in, "seed", path);
        rf.trees.reserve(rf.n_trees);
        for (uint32_t t = 0; t < rf.n_trees; ++t) {
            expect_word(in, "tree", path);
            uint32_t index = read_value<uint32_t>(in, "tree index", path);
            if (index != t) raise(ErrorKind::malformed_record, path + ": tree indices not sequential");
            size_t n_nodes = read_field<size_t>(in, "nodes", path);
            DecisionTree tree;
            tree.nodes.reserve(n_nodes);
            for (size_t i = 0; i < n_nodes; ++i) {
                TreeNode n;
                n.feature = read_value<int32_t>(in, "feature", path);
                n.threshold = read_value<double>(in, "threshold", path);
                n.left = read_value<int32_t>(in, "left", path);
                n.right = read_value<int32_t>(in, "right", path);
                n.count[0] = read_value<uint32_t>(in, "count", path);
                n.count[1] = read_value<uint32_t>(in, "count", path);
                bool leaf = n.feature < 0;
                if (!leaf && (size_t(n.feature) >= n_terms || n.left < 0 || n.right < 0 ||
                              size_t(n.left) >= n_nodes || size_t(n.right) >= n_nodes)) {
                    raise(ErrorKind::malformed_record, path + ": tree node out of range");
                }
                tree.nodes.push_back(n);
            }
            if (tree.nodes.empty()) raise(ErrorKind::malformed_record, path + ": empty tree");
            rf.trees.push_back(std::move(tree));
        }
        model.params = std::move(rf);
    } else if (variant == "svm") {
        SVMParams svm;
        svm.c = read_field<double>(in, "c", path);
        svm.epochs = read_field<uint32_t>(in, "epochs", path);
        svm.converged = read_field<int>(in, "converged", path) != 0;
        svm.bias = read_field<double>(in, "bias", path);
        size_t n = read_field<size_t>(in, "weights", path);
        if (n != n_terms) {
            raise(ErrorKind::malformed_record, path + ": weight count != term count");
        }
        svm.weights.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            svm.weights.push_back(read_value<double>(in, "weight", path));
        }
        model.params = std::move(svm);
    } else {
        raise(ErrorKind::malformed_record, path + ": unknown model variant '" + variant + "'");
    }
    expect_word(in, "end", path);
    return model;
}

}  // namespace finsent
