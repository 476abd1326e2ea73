#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace finsent {

// Resolved run configuration. Field defaults are the shipped defaults; the
// canonical echo (render_config) makes every run self-describing.
struct RunConfig {
    // [paths]
    std::string articles;
    std::string prices;
    std::string positive_words;
    std::string negative_words;
    std::vector<std::string> stoplists;
    std::string unknown_articles;  // optional sixth test option
    std::string output_dir = "out";

    // [prep]
    size_t min_df = 3;
    bool stem = true;
    size_t min_token_len = 2;

    // [vectorizer]
    bool sublinear_tf = false;
    bool add_one_idf = false;
    bool dump_matrix = false;

    // [nb]
    double nb_alpha = 1.0;

    // [rf]
    uint32_t rf_trees = 100;
    uint32_t rf_m_try = 0;     // 0 = floor(log2(n_features)) + 1
    uint32_t rf_max_depth = 0;  // 0 = unlimited
    bool rf_bootstrap = true;

    // [svm]
    double svm_c = 1.0;
    uint32_t svm_epochs = 1000;
    double svm_tolerance = 1e-6;

    // [eval]
    std::vector<size_t> folds = {5, 10, 15};
    std::vector<double> splits = {0.7, 0.8};
    uint64_t seed = 42;  // every random stream is derived from this
    bool stratified = true;
    unsigned threads = 0;  // 0 = hardware concurrency

    // [plot]
    bool plot_mean = false;  // aggregate = net | mean

    bool operator==(const RunConfig&) const = default;
};

// INI-style file: [section] headers, key = value lines, full-line # comments.
// Unknown sections or keys fail loudly.
RunConfig parse_config_file(const std::string& path);

// Single override, dotted_key like "eval.seed". Same validation as the file.
void apply_setting(RunConfig& cfg, const std::string& dotted_key, const std::string& value);

// Range checks that do not need the input files (fold counts, fractions, ...).
void validate_config(const RunConfig& cfg);

// Canonical echo: parsing the result reproduces cfg exactly.
std::string render_config(const RunConfig& cfg);

}  // namespace finsent
