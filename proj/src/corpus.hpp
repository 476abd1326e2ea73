#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "date.hpp"

namespace finsent {

// Two-class sentiment label. Ties in every scoring rule fall on the positive
// side, so positive is the reference class throughout.
enum class Polarity : uint8_t { negative = 0, positive = 1 };

inline const char* polarity_name(Polarity p) {
    return p == Polarity::positive ? "pos" : "neg";
}

struct NewsArticle {
    std::string id;
    Date date;
    std::string headline;
    std::string body;
    std::optional<Polarity> label;

    bool operator==(const NewsArticle&) const = default;
};

struct ArticleSet {
    std::vector<NewsArticle> articles;

    size_t size() const { return articles.size(); }
    bool empty() const { return articles.empty(); }
    auto begin() const { return articles.begin(); }
    auto end() const { return articles.end(); }
};

struct PriceBar {
    Date date;
    double open = 0;
    double high = 0;
    double low = 0;
    double close = 0;
    double adj_close = 0;
    uint64_t volume = 0;
};

// Date-ordered daily bars; strictly increasing dates.
struct PriceSeries {
    std::vector<PriceBar> bars;

    size_t size() const { return bars.size(); }
    bool empty() const { return bars.empty(); }
    bool has_date(const Date& d) const;
};

// Article file: UTF-8, one record per line, tab-delimited
// id, date (YYYY-MM-DD), headline, body, optional label (pos|neg).
// The whole load fails on the first bad record; no partial sets.
ArticleSet load_articles(const std::string& path);

// Fields must be tab- and newline-free; load_articles output always is, so
// write/load round-trips field for field.
void write_articles(const ArticleSet& set, const std::string& path);

// Price file: CSV with header Date,Open,High,Low,Close,Adj Close,Volume.
// Rows may arrive out of order; the returned series is sorted ascending.
PriceSeries load_prices(const std::string& path);

// Maps a calendar date to the trading day its news affects: the date itself
// when it is a bar date, otherwise the next bar date. Dates past the end of
// the series have no trading day and raise after_series_end.
Date align_to_trading_day(const Date& article_date, const PriceSeries& prices);

}  // namespace finsent
