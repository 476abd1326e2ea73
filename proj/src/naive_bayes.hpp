#pragma once

#include "model.hpp"

namespace finsent {

// Multinomial Naive Bayes over TF-IDF weights with add-alpha smoothing.
// Requires at least one training row of each class.
TrainedModel train_naive_bayes(const DocumentMatrix& matrix, double alpha = 1.0);

}  // namespace finsent
