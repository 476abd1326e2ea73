#include "naive_bayes.hpp"

#include <array>
#include <cmath>

#include "errors.hpp"
#include "train_common.hpp"

namespace finsent {

TrainedModel train_naive_bayes(const DocumentMatrix& matrix, double alpha) {
    if (!(alpha > 0)) raise(ErrorKind::config_error, "nb alpha must be > 0");
    auto class_counts = require_two_classes(matrix);

    const size_t n_terms = matrix.vocab.size();
    NBParams nb;
    nb.alpha = alpha;
    nb.log_prior[0] = std::log(double(class_counts[0]) / double(matrix.n_rows()));
    nb.log_prior[1] = std::log(double(class_counts[1]) / double(matrix.n_rows()));

    // Aggregate per-class term mass, then add-alpha normalize.
    std::array<std::vector<double>, 2> mass{std::vector<double>(n_terms, 0.0),
                                            std::vector<double>(n_terms, 0.0)};
    std::array<double, 2> total{0.0, 0.0};
    for (size_t i = 0; i < matrix.n_rows(); ++i) {
        size_t c = size_t(matrix.labels[i]);
        for (const auto& [idx, w] : matrix.rows[i].entries) {
            // Multinomial likelihoods are only defined over non-negative mass.
            if (!(w >= 0.0)) {
                raise(ErrorKind::config_error, "nb requires non-negative feature weights");
            }
            mass[c][idx] += w;
            total[c] += w;
        }
    }
    for (size_t c = 0; c < 2; ++c) {
        nb.log_likelihood[c].resize(n_terms);
        double denom = std::log(total[c] + alpha * double(n_terms));
        for (size_t t = 0; t < n_terms; ++t) {
            nb.log_likelihood[c][t] = std::log(mass[c][t] + alpha) - denom;
        }
    }

    TrainedModel model;
    model.params = std::move(nb);
    model.vocab = matrix.vocab;
    model.vocab_fingerprint = matrix.vocab.fingerprint();
    return model;
}

}  // namespace finsent
