#pragma once

#include <cstdint>
#include <vector>

#include "model.hpp"

namespace finsent {

struct SVMOptions {
    double c = 1.0;
    uint32_t epochs = 1000;
    double tolerance = 1e-6;  // stop once an epoch improves less than this
};

// Deterministic full-batch subgradient descent on the primal soft-margin
// hinge objective, lambda = 1 / (c * n). Each epoch tries the 1/(lambda*t)
// step and halves it until the objective does not increase, so the recorded
// trace is monotone non-increasing. Seedless: same matrix, same model.
TrainedModel train_svm(const DocumentMatrix& matrix, const SVMOptions& opts = {},
                       std::vector<double>* objective_trace = nullptr);

}  // namespace finsent
