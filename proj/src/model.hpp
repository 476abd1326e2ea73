#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "corpus.hpp"
#include "textprep.hpp"
#include "vectorizer.hpp"

namespace finsent {

enum class ModelVariant : uint8_t { naive_bayes, random_forest, svm };

const char* model_variant_name(ModelVariant v);

// Multinomial model over TF-IDF weights. Index 0 holds the negative class,
// index 1 the positive class, matching Polarity's underlying values.
struct NBParams {
    double alpha = 1.0;
    double log_prior[2] = {0, 0};
    std::vector<double> log_likelihood[2];  // one entry per vocab term
};

// feature < 0 marks a leaf; counts are the training samples that landed
// there, by class.
struct TreeNode {
    int32_t feature = -1;
    double threshold = 0.0;
    int32_t left = -1;
    int32_t right = -1;
    uint32_t count[2] = {0, 0};
};

struct DecisionTree {
    std::vector<TreeNode> nodes;  // node 0 is the root
};

struct RFParams {
    uint32_t n_trees = 0;
    uint32_t m_try = 0;
    uint32_t max_depth = 0;  // 0 = unlimited
    bool bootstrap = true;
    uint64_t seed = 0;
    std::vector<DecisionTree> trees;
};

struct SVMParams {
    double c = 1.0;
    uint32_t epochs = 0;
    bool converged = false;
    double bias = 0.0;
    std::vector<double> weights;  // one per vocab term
};

// A trained classifier plus everything needed to vectorize unseen text the
// same way the training corpus was: the fitted vocabulary and the prep and
// weighting flags in force at training time.
struct TrainedModel {
    std::variant<NBParams, RFParams, SVMParams> params;
    Vocabulary vocab;
    uint64_t vocab_fingerprint = 0;
    PrepOptions prep;
    VectorizerOptions weighting;

    ModelVariant variant() const;
};

struct Prediction {
    Polarity label = Polarity::positive;
    // NB: positive posterior; RF: positive vote fraction; SVM: margin.
    // Threshold is 0.5 for the first two, 0 for the margin; ties go positive.
    double score = 0.0;
};

// x must come from the same vocabulary the model was trained on; the caller
// passes that vocabulary's fingerprint as proof.
Prediction predict(const TrainedModel& model, const SparseVector& x, uint64_t x_fingerprint);

std::vector<Prediction> predict_matrix(const TrainedModel& model, const DocumentMatrix& matrix);

// Versioned plain-text model file; byte-stable for a given model.
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace finsent
