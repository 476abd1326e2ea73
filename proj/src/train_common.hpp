#pragma once

#include <array>

#include "errors.hpp"
#include "vectorizer.hpp"

namespace finsent {

// Shared trainer precondition: a labeled matrix containing both classes.
// Returns per-class row counts indexed by Polarity value.
inline std::array<size_t, 2> require_two_classes(const DocumentMatrix& matrix) {
    if (!matrix.has_labels()) {
        raise(ErrorKind::config_error, "training requires a labeled matrix");
    }
    std::array<size_t, 2> counts{0, 0};
    for (Polarity label : matrix.labels) ++counts[size_t(label)];
    if (counts[0] == 0 || counts[1] == 0) {
        raise(ErrorKind::single_class_training,
              "training set contains only one class (" + std::to_string(counts[0]) +
                  " negative, " + std::to_string(counts[1]) + " positive)");
    }
    return counts;
}

}  // namespace finsent
