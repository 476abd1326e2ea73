#pragma once

#include <cstdint>

#include "model.hpp"

namespace finsent {

struct RFOptions {
    uint32_t n_trees = 100;
    uint32_t m_try = 0;     // 0 = floor(log2(n_features)) + 1
    uint32_t max_depth = 0;  // 0 = unlimited
    bool bootstrap = true;
    uint64_t seed = 42;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Bagged Gini-split trees. Tree i draws its bootstrap sample and feature
// candidates from a stream seeded with seed + i, so the forest is identical
// for any thread count.
TrainedModel train_random_forest(const DocumentMatrix& matrix, const RFOptions& opts = {});

}  // namespace finsent
