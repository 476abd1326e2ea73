#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "model.hpp"
#include "vectorizer.hpp"

namespace finsent {

struct FoldPlan {
    size_t k = 0;
    std::vector<size_t> assignments;  // instance index -> fold index
    uint64_t seed = 0;
};

// Shuffles within each class and deals extras to the least-loaded folds, so
// fold sizes differ by at most one and per-fold class counts stay within one
// of proportional. stratified=false shuffles the whole index range instead.
FoldPlan make_fold_plan(const std::vector<Polarity>& labels, size_t k, uint64_t seed,
                        bool stratified = true);

// Shuffle then cut: train takes round(n * train_fraction) indices. Both sides
// come back sorted ascending.
std::pair<std::vector<size_t>, std::vector<size_t>> percentage_split(size_t n,
                                                                     double train_fraction,
                                                                     uint64_t seed);

struct PredictionRecord {
    Polarity gold = Polarity::positive;
    Polarity label = Polarity::positive;
    double score = 0.0;
};

struct ConfusionMatrix {
    size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    size_t support = 0;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

struct EvalReport {
    size_t n_correct = 0;
    size_t n_total = 0;
    double accuracy = 0.0;
    ClassMetrics per_class[2];  // indexed by Polarity value
    double weighted_precision = 0.0;
    double weighted_recall = 0.0;
    std::vector<RocPoint> roc;
    double auc = 0.0;
    ConfusionMatrix confusion;
};

// Positive is the reference class of the confusion matrix. AUC uses the
// Mann-Whitney rank statistic with average ranks on ties; a single-class
// input has no ranking information and reports 0.5.
EvalReport compute_metrics(const std::vector<PredictionRecord>& predictions);

// Trains on the out-of-fold rows and predicts the held-out rows, fold by
// fold; all held-out predictions pool into one report keyed by instance
// index, so the result is independent of fold completion order.
using FoldTrainer = std::function<TrainedModel(const DocumentMatrix& train, size_t fold)>;
EvalReport cross_validate(const DocumentMatrix& matrix, const FoldPlan& plan,
                          const FoldTrainer& trainer);

// Train/test split evaluation with the same pooling conventions.
EvalReport split_evaluate(const DocumentMatrix& matrix, const std::vector<size_t>& train_idx,
                          const std::vector<size_t>& test_idx, const FoldTrainer& trainer);

// Applies a frozen model to an already-vectorized labeled set.
EvalReport evaluate_unknown(const TrainedModel& model, const DocumentMatrix& labeled);

// Rows of `indices` copied out of `matrix`; the vocabulary is shared.
DocumentMatrix submatrix(const DocumentMatrix& matrix, const std::vector<size_t>& indices);

}  // namespace finsent
