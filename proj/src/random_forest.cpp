#include "random_forest.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "errors.hpp"
#include "rng.hpp"
#include "train_common.hpp"

namespace finsent {

namespace {

double gini(size_t neg, size_t pos) {
    double n = double(neg + pos);
    if (n == 0) return 0.0;
    double p0 = double(neg) / n;
    double p1 = double(pos) / n;
    return 1.0 - p0 * p0 - p1 * p1;
}

struct BestSplit {
    bool found = false;
    uint32_t feature = 0;
    double threshold = 0.0;
    double gain = 0.0;
};

class TreeBuilder {
public:
    TreeBuilder(const DocumentMatrix& matrix, uint32_t m_try, uint32_t max_depth, uint64_t seed)
        : matrix_(matrix), m_try_(m_try), max_depth_(max_depth), rng_(seed) {}

    DecisionTree build(bool bootstrap) {
        size_t n = matrix_.n_rows();
        std::vector<uint32_t> samples;
        samples.reserve(n);
        if (bootstrap) {
            for (size_t i = 0; i < n; ++i) {
                samples.push_back(uint32_t(uniform_below(rng_, n)));
            }
        } else {
            for (size_t i = 0; i < n; ++i) samples.push_back(uint32_t(i));
        }
        grow(samples, 0);
        return std::move(tree_);
    }

private:
    const DocumentMatrix& matrix_;
    uint32_t m_try_;
    uint32_t max_depth_;
    std::mt19937_64 rng_;
    DecisionTree tree_;
    std::vector<std::pair<double, uint8_t>> scratch_;  // (value, class) per node sample

    int32_t make_leaf(size_t neg, size_t pos) {
        TreeNode leaf;
        leaf.count[0] = uint32_t(neg);
        leaf.count[1] = uint32_t(pos);
        tree_.nodes.push_back(leaf);
        return int32_t(tree_.nodes.size() - 1);
    }

    // Best threshold for one feature over the node samples, or no split when
    // the feature is constant there.
    BestSplit scan_feature(const std::vector<uint32_t>& samples, uint32_t feature,
                           double parent_gini, size_t neg, size_t pos) {
        scratch_.clear();
        for (uint32_t s : samples) {
            scratch_.emplace_back(sparse_value_at(matrix_.rows[s], feature),
                                  uint8_t(matrix_.labels[s]));
        }
        std::sort(scratch_.begin(), scratch_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        BestSplit best;
        if (scratch_.front().first == scratch_.back().first) return best;  // constant

        best.feature = feature;
        size_t total = samples.size();
        size_t left_neg = 0, left_pos = 0;
        for (size_t i = 0; i + 1 < scratch_.size();) {
            // Consume one group of equal values so ties never straddle a cut.
            double v = scratch_[i].first;
            while (i < scratch_.size() && scratch_[i].first == v) {
                if (scratch_[i].second == 0) ++left_neg; else ++left_pos;
                ++i;
            }
            if (i == scratch_.size()) break;
            size_t right_neg = neg - left_neg, right_pos = pos - left_pos;
            double weighted =
                (double(left_neg + left_pos) * gini(left_neg, left_pos) +
                 double(right_neg + right_pos) * gini(right_neg, right_pos)) /
                double(total);
            double gain = parent_gini - weighted;
            if (!best.found || gain > best.gain) {
                best.found = true;
                best.gain = gain;
                // Midpoint can round up onto the next value; fall back to the
                // left value so neither side of the cut is ever empty.
                double thr = v + (scratch_[i].first - v) / 2.0;
                if (!(thr >= v && thr < scratch_[i].first)) thr = v;
                best.threshold = thr;
            }
        }
        return best;
    }

    int32_t grow(const std::vector<uint32_t>& samples, uint32_t depth) {
        size_t neg = 0, pos = 0;
        for (uint32_t s : samples) {
            if (matrix_.labels[s] == Polarity::negative) ++neg; else ++pos;
        }
        if (neg == 0 || pos == 0 || samples.size() < 2 ||
            (max_depth_ != 0 && depth >= max_depth_)) {
            return make_leaf(neg, pos);
        }

        double parent_gini = gini(neg, pos);
        size_t n_features = matrix_.vocab.size();
        std::vector<uint32_t> order(n_features);
        for (size_t f = 0; f < n_features; ++f) order[f] = uint32_t(f);

        // Lazy Fisher-Yates walk over features. Constant-in-node features do
        // not count against m_try, so the draw continues until enough real
        // candidates have been scored or the features run out.
        BestSplit best;
        uint32_t scored = 0;
        for (size_t i = 0; i < n_features && scored < m_try_; ++i) {
            size_t j = i + size_t(uniform_below(rng_, n_features - i));
            std::swap(order[i], order[j]);
            BestSplit cand = scan_feature(samples, order[i], parent_gini, neg, pos);
            if (!cand.found) continue;
            ++scored;
            if (!best.found || cand.gain > best.gain) best = cand;
        }
        if (!best.found) return make_leaf(neg, pos);

        std::vector<uint32_t> left_samples, right_samples;
        for (uint32_t s : samples) {
            if (sparse_value_at(matrix_.rows[s], best.feature) <= best.threshold) {
                left_samples.push_back(s);
            } else {
                right_samples.push_back(s);
            }
        }

        TreeNode node;
        node.feature = int32_t(best.feature);
        node.threshold = best.threshold;
        node.count[0] = uint32_t(neg);
        node.count[1] = uint32_t(pos);
        tree_.nodes.push_back(node);
        int32_t self = int32_t(tree_.nodes.size() - 1);
        int32_t left = grow(left_samples, depth + 1);
        int32_t right = grow(right_samples, depth + 1);
        tree_.nodes[size_t(self)].left = left;
        tree_.nodes[size_t(self)].right = right;
        return self;
    }
};

}  // namespace

TrainedModel train_random_forest(const DocumentMatrix& matrix, const RFOptions& opts) {
    require_two_classes(matrix);
    size_t n_features = matrix.vocab.size();
    if (opts.n_trees < 1) raise(ErrorKind::config_error, "rf needs at least one tree");
    uint32_t m_try = opts.m_try;
    if (m_try == 0) {
        m_try = uint32_t(std::floor(std::log2(double(n_features)))) + 1;
    }
    if (m_try < 1 || size_t(m_try) > n_features) {
        raise(ErrorKind::config_error,
              "rf m_try " + std::to_string(m_try) + " outside [1, " +
                  std::to_string(n_features) + "]");
    }

    RFParams rf;
    rf.n_trees = opts.n_trees;
    rf.m_try = m_try;
    rf.max_depth = opts.max_depth;
    rf.bootstrap = opts.bootstrap;
    rf.seed = opts.seed;
    rf.trees.resize(opts.n_trees);

    // Tree i depends only on seed + i, so scheduling cannot change the forest.
    unsigned n_threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<unsigned>(n_threads, opts.n_trees);

    std::atomic<uint32_t> next{0};
    auto worker = [&] {
        for (uint32_t t; (t = next.fetch_add(1)) < opts.n_trees;) {
            TreeBuilder builder(matrix, m_try, opts.max_depth, rf.seed + t);
            rf.trees[t] = builder.build(opts.bootstrap);
        }
    };
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    TrainedModel model;
    model.params = std::move(rf);
    model.vocab = matrix.vocab;
    model.vocab_fingerprint = matrix.vocab.fingerprint();
    return model;
}

}  // namespace finsent
