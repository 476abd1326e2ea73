#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lexicon.hpp"

namespace finsent {

// One trading day's aggregated news sentiment. Calendar dates are mapped to
// trading days first, so weekend news lands on the following bar.
struct DailySentiment {
    Date date;
    double net_score = 0.0;
    size_t article_count = 0;
    double mean_score = 0.0;  // net_score / article_count

    bool operator==(const DailySentiment&) const = default;
};

enum class TrendDirection : uint8_t { down = 0, up = 1 };

struct TrendSignal {
    Date date;
    TrendDirection direction = TrendDirection::up;
};

// Groups scored articles by trading day, ascending by date. Days without
// news do not appear. Raises after_series_end for news past the last bar.
std::vector<DailySentiment> daily_series(const std::vector<LabeledArticle>& articles,
                                         const PriceSeries& prices);

// Up iff the day's net score is non-negative, matching the labeling boundary.
TrendSignal trend_signal(const DailySentiment& day);

struct AlignmentStats {
    double correlation = 0.0;  // Pearson, net score vs next-day adj-close return
    double hit_rate = 0.0;     // trend direction matches next-day return sign
    size_t aligned_days = 0;   // days with news and a following bar
    bool zero_variance = false;  // correlation undefined, reported as 0
};

// Compares each news day's net score with the following bar's adjusted-close
// return. News on the last bar has no next return and is skipped. Fewer than
// three comparable points raise insufficient_data.
AlignmentStats alignment_stats(const std::vector<DailySentiment>& sentiment,
                               const PriceSeries& prices);

struct PlotOptions {
    bool use_mean = false;  // plot mean_score instead of net_score
};

// Renders the sentiment-vs-price comparison: adjusted close on the left axis
// over every bar between the first and last news day, sentiment on the right
// axis for news days only, plus a CSV with one row per news day. Output bytes
// depend only on the inputs.
void render_comparison(const std::vector<DailySentiment>& sentiment, const PriceSeries& prices,
                       const std::string& svg_path, const std::string& csv_path,
                       const PlotOptions& options = {});

}  // namespace finsent
