#include "signal_report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "errors.hpp"
#include "strutil.hpp"

namespace finsent {

namespace {

size_t bar_index_of(const PriceSeries& prices, const Date& d) {
    auto it = std::lower_bound(prices.bars.begin(), prices.bars.end(), d,
                               [](const PriceBar& bar, const Date& date) { return bar.date < date; });
    if (it == prices.bars.end() || !(it->date == d)) {
        raise(ErrorKind::config_error,
              "sentiment date " + format_date(d) + " is not a trading day in the price series");
    }
    return size_t(it - prices.bars.begin());
}

}  // namespace

std::vector<DailySentiment> daily_series(const std::vector<LabeledArticle>& articles,
                                         const PriceSeries& prices) {
    std::map<Date, std::pair<double, size_t>> by_day;
    for (const auto& a : articles) {
        Date day = align_to_trading_day(a.article.date, prices);
        auto& slot = by_day[day];
        slot.first += double(a.score.score);
        slot.second += 1;
    }
    std::vector<DailySentiment> out;
    out.reserve(by_day.size());
    for (const auto& [date, slot] : by_day) {
        DailySentiment d;
        d.date = date;
        d.net_score = slot.first;
        d.article_count = slot.second;
        d.mean_score = slot.first / double(slot.second);
        out.push_back(d);
    }
    return out;
}

TrendSignal trend_signal(const DailySentiment& day) {
    return {day.date, day.net_score >= 0.0 ? TrendDirection::up : TrendDirection::down};
}

AlignmentStats alignment_stats(const std::vector<DailySentiment>& sentiment,
                               const PriceSeries& prices) {
    if (prices.empty()) raise(ErrorKind::empty_series, "price series is empty");

    std::vector<double> score, ret;
    size_t hits = 0;
    for (const auto& day : sentiment) {
        size_t i = bar_index_of(prices, day.date);
        if (i + 1 >= prices.size()) continue;  // no next bar, no return
        double base = prices.bars[i].adj_close;
        double r = (prices.bars[i + 1].adj_close - base) / base;
        score.push_back(day.net_score);
        ret.push_back(r);
        bool up_signal = day.net_score >= 0.0;
        bool up_price = r >= 0.0;
        if (up_signal == up_price) ++hits;
    }

    AlignmentStats stats;
    stats.aligned_days = score.size();
    if (stats.aligned_days < 3) {
        raise(ErrorKind::insufficient_data,
              std::to_string(stats.aligned_days) + " aligned days, need at least 3");
    }
    stats.hit_rate = double(hits) / double(stats.aligned_days);

    double n = double(score.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (size_t i = 0; i < score.size(); ++i) {
        mean_x += score[i];
        mean_y += ret[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < score.size(); ++i) {
        double dx = score[i] - mean_x, dy = ret[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        stats.zero_variance = true;
        stats.correlation = 0.0;
    } else {
        stats.correlation = sxy / std::sqrt(sxx * syy);
    }
    return stats;
}

namespace {

constexpr double kWidth = 960, kHeight = 480;
constexpr double kLeft = 70, kRight = 890, kTop = 40, kBottom = 390;

std::string num(double v) { return format_fixed(v, 2); }

void text_at(std::string& svg, double x, double y, const std::string& anchor, int size,
             const std::string& body, const std::string& extra = "") {
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor +
           "\" font-size=\"" + std::to_string(size) + "\"" + extra + ">" + body + "</text>\n";
}

void line_at(std::string& svg, double x1, double y1, double x2, double y2,
             const std::string& style) {
    svg += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
           num(y2) + "\" " + style + "/>\n";
}

}  // namespace

void render_comparison(const std::vector<DailySentiment>& sentiment, const PriceSeries& prices,
                       const std::string& svg_path, const std::string& csv_path,
                       const PlotOptions& options) {
    if (sentiment.empty()) raise(ErrorKind::empty_series, "no sentiment days to plot");
    if (prices.empty()) raise(ErrorKind::empty_series, "price series is empty");

    std::vector<size_t> day_order(sentiment.size());
    for (size_t i = 0; i < day_order.size(); ++i) day_order[i] = i;
    std::sort(day_order.begin(), day_order.end(), [&](size_t a, size_t b) {
        return sentiment[a].date < sentiment[b].date;
    });

    std::vector<size_t> bar_of(sentiment.size());
    for (size_t i : day_order) bar_of[i] = bar_index_of(prices, sentiment[i].date);
    size_t i0 = bar_of[day_order.front()];
    size_t i1 = bar_of[day_order.back()];
    size_t n_x = i1 - i0 + 1;

    auto x_of = [&](size_t bar) {
        if (n_x == 1) return (kLeft + kRight) / 2.0;
        return kLeft + double(bar - i0) * (kRight - kLeft) / double(n_x - 1);
    };

    double price_lo = prices.bars[i0].adj_close, price_hi = price_lo;
    for (size_t b = i0; b <= i1; ++b) {
        price_lo = std::min(price_lo, prices.bars[b].adj_close);
        price_hi = std::max(price_hi, prices.bars[b].adj_close);
    }
    if (price_lo == price_hi) {
        price_lo -= 1.0;
        price_hi += 1.0;
    } else {
        double pad = (price_hi - price_lo) * 0.05;
        price_lo -= pad;
        price_hi += pad;
    }
    auto y_price = [&](double v) {
        return kTop + (price_hi - v) * (kBottom - kTop) / (price_hi - price_lo);
    };

    auto value_of = [&](const DailySentiment& d) {
        return options.use_mean ? d.mean_score : d.net_score;
    };
    double mag = 0.0;
    for (const auto& d : sentiment) mag = std::max(mag, std::abs(value_of(d)));
    if (mag == 0.0) mag = 1.0;
    mag *= 1.1;  // symmetric range keeps the zero line centered
    auto y_sent = [&](double v) { return kTop + (mag - v) * (kBottom - kTop) / (2.0 * mag); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 480\" "
           "font-family=\"sans-serif\">\n";
    svg += "<rect width=\"960\" height=\"480\" fill=\"#ffffff\"/>\n";
    text_at(svg, (kLeft + kRight) / 2.0, 24, "middle", 14,
            "daily news sentiment vs adjusted close");

    // Frame and zero line for the sentiment axis.
    line_at(svg, kLeft, kTop, kLeft, kBottom, "stroke=\"#333333\" stroke-width=\"1\"");
    line_at(svg, kRight, kTop, kRight, kBottom, "stroke=\"#333333\" stroke-width=\"1\"");
    line_at(svg, kLeft, kBottom, kRight, kBottom, "stroke=\"#333333\" stroke-width=\"1\"");
    line_at(svg, kLeft, y_sent(0.0), kRight, y_sent(0.0),
            "stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");

    for (int t = 0; t < 5; ++t) {
        double pv = price_lo + double(t) * (price_hi - price_lo) / 4.0;
        double sv = -mag + double(t) * mag / 2.0;
        line_at(svg, kLeft - 4, y_price(pv), kLeft, y_price(pv),
                "stroke=\"#333333\" stroke-width=\"1\"");
        text_at(svg, kLeft - 8, y_price(pv) + 3, "end", 10, num(pv));
        line_at(svg, kRight, y_sent(sv), kRight + 4, y_sent(sv),
                "stroke=\"#333333\" stroke-width=\"1\"");
        text_at(svg, kRight + 8, y_sent(sv) + 3, "start", 10, num(sv));
    }

    size_t n_ticks = std::min<size_t>(6, n_x);
    for (size_t t = 0; t < n_ticks; ++t) {
        size_t bar = n_ticks == 1 ? i0
                                  : i0 + (t * (n_x - 1) + (n_ticks - 1) / 2) / (n_ticks - 1);
        double x = x_of(bar);
        line_at(svg, x, kBottom, x, kBottom + 4, "stroke=\"#333333\" stroke-width=\"1\"");
        text_at(svg, x, kBottom + 18, "middle", 10, format_date(prices.bars[bar].date));
    }

    text_at(svg, 20, (kTop + kBottom) / 2.0, "middle", 11, "adjusted close",
            " transform=\"rotate(-90 20 " + num((kTop + kBottom) / 2.0) + ")\"");
    std::string sent_name = options.use_mean ? "mean sentiment" : "net sentiment";
    text_at(svg, 940, (kTop + kBottom) / 2.0, "middle", 11, sent_name,
            " transform=\"rotate(90 940 " + num((kTop + kBottom) / 2.0) + ")\"");

    if (n_x >= 2) {
        std::string pts;
        for (size_t b = i0; b <= i1; ++b) {
            if (!pts.empty()) pts += ' ';
            pts += num(x_of(b)) + ',' + num(y_price(prices.bars[b].adj_close));
        }
        svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"" + pts +
               "\"/>\n";
    } else {
        svg += "<circle cx=\"" + num(x_of(i0)) + "\" cy=\"" +
               num(y_price(prices.bars[i0].adj_close)) +
               "\" r=\"3\" fill=\"#1f77b4\"/>\n";
    }

    if (day_order.size() >= 2) {
        std::string pts;
        for (size_t i : day_order) {
            if (!pts.empty()) pts += ' ';
            pts += num(x_of(bar_of[i])) + ',' + num(y_sent(value_of(sentiment[i])));
        }
        svg += "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"" + pts +
               "\"/>\n";
    }
    for (size_t i : day_order) {
        svg += "<circle cx=\"" + num(x_of(bar_of[i])) + "\" cy=\"" +
               num(y_sent(value_of(sentiment[i]))) + "\" r=\"3\" fill=\"#d62728\"/>\n";
    }

    line_at(svg, kRight - 190, 52, kRight - 160, 52, "stroke=\"#1f77b4\" stroke-width=\"1.5\"");
    text_at(svg, kRight - 154, 56, "start", 11, "adjusted close");
    line_at(svg, kRight - 190, 70, kRight - 160, 70, "stroke=\"#d62728\" stroke-width=\"1.5\"");
    text_at(svg, kRight - 154, 74, "start", 11, sent_name);
    svg += "</svg>\n";

    std::ofstream svg_out(svg_path, std::ios::binary);
    if (!svg_out) raise(ErrorKind::io_error, "cannot write " + svg_path);
    svg_out << svg;

    std::ofstream csv_out(csv_path, std::ios::binary);
    if (!csv_out) raise(ErrorKind::io_error, "cannot write " + csv_path);
    csv_out << "date,net_score,article_count,adj_close\n";
    for (size_t i : day_order) {
        const auto& d = sentiment[i];
        csv_out << format_date(d.date) << ',' << format_shortest(d.net_score) << ','
                << d.article_count << ',' << format_shortest(prices.bars[bar_of[i]].adj_close)
                << '\n';
    }
}

}  // namespace finsent
