#include "evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace finsent {

namespace {

// Quota of instances for each fold of one class: base share plus one extra
// for the currently least-loaded folds (lowest index wins ties).
void deal_class(const std::vector<size_t>& class_indices, size_t k, std::mt19937_64& rng,
                std::vector<size_t>& assignments, std::vector<size_t>& fold_load) {
    std::vector<size_t> shuffled = class_indices;
    shuffle_values(shuffled, rng);

    size_t base = shuffled.size() / k;
    size_t extra = shuffled.size() % k;
    std::vector<size_t> quota(k, base);

    std::vector<size_t> fold_order(k);
    for (size_t f = 0; f < k; ++f) fold_order[f] = f;
    std::stable_sort(fold_order.begin(), fold_order.end(),
                     [&](size_t a, size_t b) { return fold_load[a] < fold_load[b]; });
    for (size_t e = 0; e < extra; ++e) ++quota[fold_order[e]];

    size_t cursor = 0;
    for (size_t f = 0; f < k; ++f) {
        for (size_t q = 0; q < quota[f]; ++q) {
            assignments[shuffled[cursor++]] = f;
            ++fold_load[f];
        }
    }
}

}  // namespace

FoldPlan make_fold_plan(const std::vector<Polarity>& labels, size_t k, uint64_t seed,
                        bool stratified) {
    size_t n = labels.size();
    if (k < 2) raise(ErrorKind::config_error, "fold count must be at least 2");
    if (k > n) {
        raise(ErrorKind::too_few_instances,
              std::to_string(n) + " instances cannot fill " + std::to_string(k) + " folds");
    }

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.assignments.assign(n, 0);
    std::mt19937_64 rng(seed);

    if (stratified) {
        std::vector<size_t> by_class[2];
        for (size_t i = 0; i < n; ++i) by_class[size_t(labels[i])].push_back(i);
        std::vector<size_t> fold_load(k, 0);
        // Positive class dealt first, then negative; the load balancing keeps
        // overall fold sizes within one either way.
        deal_class(by_class[1], k, rng, plan.assignments, fold_load);
        deal_class(by_class[0], k, rng, plan.assignments, fold_load);
    } else {
        std::vector<size_t> order(n);
        for (size_t i = 0; i < n; ++i) order[i] = i;
        shuffle_values(order, rng);
        size_t base = n / k, extra = n % k;
        size_t cursor = 0;
        for (size_t f = 0; f < k; ++f) {
            size_t take = base + (f < extra ? 1 : 0);
            for (size_t q = 0; q < take; ++q) plan.assignments[order[cursor++]] = f;
        }
    }
    return plan;
}

std::pair<std::vector<size_t>, std::vector<size_t>> percentage_split(size_t n,
                                                                     double train_fraction,
                                                                     uint64_t seed) {
    if (n == 0) raise(ErrorKind::too_few_instances, "cannot split an empty set");
    auto train_size = size_t(std::lround(double(n) * train_fraction));
    if (train_size == 0 || train_size >= n) {
        raise(ErrorKind::degenerate_split,
              "train fraction " + std::to_string(train_fraction) + " leaves an empty side for n=" +
                  std::to_string(n));
    }

    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    shuffle_values(order, rng);

    std::vector<size_t> train(order.begin(), order.begin() + ptrdiff_t(train_size));
    std::vector<size_t> test(order.begin() + ptrdiff_t(train_size), order.end());
    std::sort(train.begin(), train.end());
    std::sort(test.begin(), test.end());
    return {std::move(train), std::move(test)};
}

EvalReport compute_metrics(const std::vector<PredictionRecord>& predictions) {
    if (predictions.empty()) {
        raise(ErrorKind::empty_prediction_set, "no predictions to score");
    }

    EvalReport r;
    r.n_total = predictions.size();
    for (const auto& p : predictions) {
        // NaN scores would poison the rank sort, whose comparator requires a
        // strict weak ordering.
        if (!std::isfinite(p.score)) {
            raise(ErrorKind::config_error, "prediction scores must be finite");
        }
        bool gold_pos = p.gold == Polarity::positive;
        bool pred_pos = p.label == Polarity::positive;
        if (gold_pos && pred_pos) ++r.confusion.tp;
        if (gold_pos && !pred_pos) ++r.confusion.fn;
        if (!gold_pos && pred_pos) ++r.confusion.fp;
        if (!gold_pos && !pred_pos) ++r.confusion.tn;
    }
    r.n_correct = r.confusion.tp + r.confusion.tn;
    r.accuracy = double(r.n_correct) / double(r.n_total);

    auto safe_div = [](size_t num, size_t den) {
        return den == 0 ? 0.0 : double(num) / double(den);
    };
    const auto& c = r.confusion;
    r.per_class[size_t(Polarity::positive)] = {safe_div(c.tp, c.tp + c.fp),
                                               safe_div(c.tp, c.tp + c.fn), c.tp + c.fn};
    r.per_class[size_t(Polarity::negative)] = {safe_div(c.tn, c.tn + c.fn),
                                               safe_div(c.tn, c.tn + c.fp), c.tn + c.fp};
    const auto& pos = r.per_class[size_t(Polarity::positive)];
    const auto& neg = r.per_class[size_t(Polarity::negative)];
    r.weighted_precision =
        (pos.precision * double(pos.support) + neg.precision * double(neg.support)) /
        double(r.n_total);
    r.weighted_recall =
        (pos.recall * double(pos.support) + neg.recall * double(neg.support)) /
        double(r.n_total);

    // AUC by average ranks over ascending scores.
    size_t n_pos = pos.support, n_neg = neg.support;
    if (n_pos == 0 || n_neg == 0) {
        r.auc = 0.5;
    } else {
        std::vector<size_t> order(predictions.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return predictions[a].score < predictions[b].score;
        });
        double rank_sum_pos = 0.0;
        for (size_t i = 0; i < order.size();) {
            size_t j = i + 1;  // group always absorbs its leader, so i advances
            while (j < order.size() &&
                   predictions[order[j]].score == predictions[order[i]].score) {
                ++j;
            }
            double avg_rank = (double(i + 1) + double(j)) / 2.0;  // 1-based ranks
            for (size_t t = i; t < j; ++t) {
                if (predictions[order[t]].gold == Polarity::positive) rank_sum_pos += avg_rank;
            }
            i = j;
        }
        double u = rank_sum_pos - double(n_pos) * double(n_pos + 1) / 2.0;
        r.auc = u / (double(n_pos) * double(n_neg));
    }

    // ROC sweep from the most permissive threshold: group equal scores so a
    // tie never splits across a segment.
    {
        std::vector<size_t> order(predictions.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return predictions[a].score > predictions[b].score;
        });
        r.roc.push_back({0.0, 0.0});
        size_t tp = 0, fp = 0;
        for (size_t i = 0; i < order.size();) {
            size_t j = i + 1;
            while (j < order.size() &&
                   predictions[order[j]].score == predictions[order[i]].score) {
                ++j;
            }
            for (size_t t = i; t < j; ++t) {
                if (predictions[order[t]].gold == Polarity::positive) ++tp; else ++fp;
            }
            r.roc.push_back({n_neg == 0 ? 1.0 : double(fp) / double(n_neg),
                             n_pos == 0 ? 1.0 : double(tp) / double(n_pos)});
            i = j;
        }
    }
    return r;
}

DocumentMatrix submatrix(const DocumentMatrix& matrix, const std::vector<size_t>& indices) {
    DocumentMatrix out;
    out.vocab = matrix.vocab;
    out.rows.reserve(indices.size());
    for (size_t i : indices) out.rows.push_back(matrix.rows[i]);
    if (matrix.has_labels()) {
        out.labels.reserve(indices.size());
        for (size_t i : indices) out.labels.push_back(matrix.labels[i]);
    }
    return out;
}

EvalReport cross_validate(const DocumentMatrix& matrix, const FoldPlan& plan,
                          const FoldTrainer& trainer) {
    if (plan.assignments.size() != matrix.n_rows()) {
        raise(ErrorKind::config_error, "fold plan does not cover the matrix");
    }
    if (!matrix.has_labels()) {
        raise(ErrorKind::config_error, "cross-validation requires gold labels");
    }

    std::vector<PredictionRecord> pooled(matrix.n_rows());
    uint64_t fp = matrix.vocab.fingerprint();
    for (size_t fold = 0; fold < plan.k; ++fold) {
        std::vector<size_t> train_idx, test_idx;
        for (size_t i = 0; i < plan.assignments.size(); ++i) {
            (plan.assignments[i] == fold ? test_idx : train_idx).push_back(i);
        }
        TrainedModel model = trainer(submatrix(matrix, train_idx), fold);
        for (size_t i : test_idx) {
            Prediction p = predict(model, matrix.rows[i], fp);
            pooled[i] = {matrix.labels[i], p.label, p.score};
        }
    }
    return compute_metrics(pooled);
}

EvalReport split_evaluate(const DocumentMatrix& matrix, const std::vector<size_t>& train_idx,
                          const std::vector<size_t>& test_idx, const FoldTrainer& trainer) {
    if (!matrix.has_labels()) {
        raise(ErrorKind::config_error, "split evaluation requires gold labels");
    }
    TrainedModel model = trainer(submatrix(matrix, train_idx), 0);
    uint64_t fp = matrix.vocab.fingerprint();
    std::vector<PredictionRecord> records;
    records.reserve(test_idx.size());
    for (size_t i : test_idx) {
        Prediction p = predict(model, matrix.rows[i], fp);
        records.push_back({matrix.labels[i], p.label, p.score});
    }
    return compute_metrics(records);
}

EvalReport evaluate_unknown(const TrainedModel& model, const DocumentMatrix& labeled) {
    if (labeled.n_rows() == 0) {
        raise(ErrorKind::empty_prediction_set, "unknown set is empty");
    }
    if (!labeled.has_labels()) {
        raise(ErrorKind::config_error, "unknown-set evaluation requires gold labels");
    }
    auto preds = predict_matrix(model, labeled);
    std::vector<PredictionRecord> records;
    records.reserve(preds.size());
    for (size_t i = 0; i < preds.size(); ++i) {
        records.push_back({labeled.labels[i], preds[i].label, preds[i].score});
    }
    return compute_metrics(records);
}

}  // namespace finsent
