#include "svm.hpp"

#include <cmath>

#include "errors.hpp"
#include "train_common.hpp"

namespace finsent {

namespace {

struct Iterate {
    std::vector<double> w;
    double b = 0.0;
};

double objective(const Iterate& it, const DocumentMatrix& matrix, double lambda) {
    double norm2 = 0.0;
    for (double v : it.w) norm2 += v * v;
    double hinge = 0.0;
    for (size_t i = 0; i < matrix.n_rows(); ++i) {
        double margin = it.b;
        for (const auto& [idx, v] : matrix.rows[i].entries) margin += v * it.w[idx];
        double y = matrix.labels[i] == Polarity::positive ? 1.0 : -1.0;
        hinge += std::max(0.0, 1.0 - y * margin);
    }
    return 0.5 * lambda * norm2 + hinge / double(matrix.n_rows());
}

}  // namespace

TrainedModel train_svm(const DocumentMatrix& matrix, const SVMOptions& opts,
                       std::vector<double>* objective_trace) {
    if (!(opts.c > 0)) raise(ErrorKind::config_error, "svm c must be > 0");
    if (opts.epochs < 1) raise(ErrorKind::config_error, "svm needs at least one epoch");
    require_two_classes(matrix);

    const size_t n = matrix.n_rows();
    const size_t dim = matrix.vocab.size();
    const double lambda = 1.0 / (opts.c * double(n));

    Iterate cur;
    cur.w.assign(dim, 0.0);
    double f_cur = objective(cur, matrix, lambda);
    if (objective_trace) {
        objective_trace->clear();
        objective_trace->push_back(f_cur);
    }

    std::vector<double> grad_w(dim);
    bool converged = false;
    for (uint32_t t = 1; t <= opts.epochs; ++t) {
        // Full-batch subgradient: lambda*w minus the mean of y*x over rows
        // inside the margin; bias is unregularized.
        for (size_t d = 0; d < dim; ++d) grad_w[d] = lambda * cur.w[d];
        double grad_b = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double margin = cur.b;
            for (const auto& [idx, v] : matrix.rows[i].entries) margin += v * cur.w[idx];
            double y = matrix.labels[i] == Polarity::positive ? 1.0 : -1.0;
            if (y * margin < 1.0) {
                for (const auto& [idx, v] : matrix.rows[i].entries) {
                    grad_w[idx] -= y * v / double(n);
                }
                grad_b -= y / double(n);
            }
        }

        // Trial step 1/(lambda*t), halved until the objective strictly drops.
        // Demanding a strict drop walks through hinge plateaus instead of
        // parking on them.
        double step = 1.0 / (lambda * double(t));
        Iterate cand;
        double f_cand = 0.0;
        bool accepted = false;
        for (int halvings = 0; halvings < 60; ++halvings, step *= 0.5) {
            cand.w.resize(dim);
            for (size_t d = 0; d < dim; ++d) cand.w[d] = cur.w[d] - step * grad_w[d];
            cand.b = cur.b - step * grad_b;
            f_cand = objective(cand, matrix, lambda);
            if (f_cand < f_cur) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // No subgradient step improves the objective; we are at (or
            // numerically indistinguishable from) a minimizer.
            converged = true;
            if (objective_trace) objective_trace->push_back(f_cur);
            break;
        }
        double improvement = f_cur - f_cand;
        cur = std::move(cand);
        f_cur = f_cand;
        if (objective_trace) objective_trace->push_back(f_cur);
        if (improvement < opts.tolerance) {
            converged = true;
            break;
        }
    }

    SVMParams svm;
    svm.c = opts.c;
    svm.epochs = opts.epochs;
    svm.converged = converged;
    svm.bias = cur.b;
    svm.weights = std::move(cur.w);

    TrainedModel model;
    model.params = std::move(svm);
    model.vocab = matrix.vocab;
    model.vocab_fingerprint = matrix.vocab.fingerprint();
    return model;
}

}  // namespace finsent
