#include "corpus.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <unordered_set>

#include "errors.hpp"
#include "strutil.hpp"

namespace finsent {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        raise(ErrorKind::io_error, "cannot open '" + path + "': " + std::strerror(errno));
    }
    return in;
}

// getline that tolerates both \n and \r\n endings.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

double parse_price_field(const std::string& field, const std::string& name, size_t line_no) {
    try {
        size_t used = 0;
        double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        raise(ErrorKind::malformed_record,
              "line " + std::to_string(line_no) + ": bad " + name + " value '" + field + "'");
    }
}

}  // namespace

bool PriceSeries::has_date(const Date& d) const {
    auto it = std::lower_bound(bars.begin(), bars.end(), d,
                               [](const PriceBar& b, const Date& v) { return b.date < v; });
    return it != bars.end() && it->date == d;
}

ArticleSet load_articles(const std::string& path) {
    std::ifstream in = open_input(path);
    ArticleSet set;
    std::unordered_set<std::string> ids;
    std::string line;
    size_t line_no = 0;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields.size() != 4 && fields.size() != 5) {
            raise(ErrorKind::malformed_record,
                  path + ": line " + std::to_string(line_no) + ": expected 4 or 5 tab-separated fields, got " +
                      std::to_string(fields.size()));
        }
        NewsArticle a;
        a.id = fields[0];
        if (a.id.empty()) {
            raise(ErrorKind::malformed_record,
                  path + ": line " + std::to_string(line_no) + ": empty article id");
        }
        a.date = parse_date(fields[1]);
        a.headline = fields[2];
        a.body = fields[3];
        if (fields.size() == 5) {
            if (fields[4] == "pos") {
                a.label = Polarity::positive;
            } else if (fields[4] == "neg") {
                a.label = Polarity::negative;
            } else {
                raise(ErrorKind::malformed_record,
                      path + ": line " + std::to_string(line_no) + ": label must be 'pos' or 'neg', got '" +
                          fields[4] + "'");
            }
        }
        if (!ids.insert(a.id).second) {
            raise(ErrorKind::duplicate_id, path + ": duplicate article id '" + a.id + "'");
        }
        set.articles.push_back(std::move(a));
    }
    return set;
}

void write_articles(const ArticleSet& set, const std::string& path) {
    for (const auto& a : set.articles) {
        for (const std::string* f : {&a.id, &a.headline, &a.body}) {
            if (f->find('\t') != std::string::npos || f->find('\n') != std::string::npos) {
                raise(ErrorKind::malformed_record,
                      "article '" + a.id + "' contains a tab or newline and cannot be written");
            }
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        raise(ErrorKind::io_error, "cannot write '" + path + "': " + std::strerror(errno));
    }
    for (const auto& a : set.articles) {
        out << a.id << '\t' << format_date(a.date) << '\t' << a.headline << '\t' << a.body;
        if (a.label) out << '\t' << polarity_name(*a.label);
        out << '\n';
    }
    if (!out.good()) {
        raise(ErrorKind::io_error, "write failed for '" + path + "'");
    }
}

PriceSeries load_prices(const std::string& path) {
    static const char kHeader[] = "Date,Open,High,Low,Close,Adj Close,Volume";
    std::ifstream in = open_input(path);
    std::string line;
    if (!next_line(in, line) || line != kHeader) {
        raise(ErrorKind::malformed_record,
              path + ": expected header '" + std::string(kHeader) + "'");
    }
    PriceSeries series;
    size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() != 7) {
            raise(ErrorKind::malformed_record,
                  path + ": line " + std::to_string(line_no) + ": expected 7 comma-separated fields, got " +
                      std::to_string(fields.size()));
        }
        PriceBar bar;
        bar.date = parse_date(fields[0]);
        bar.open = parse_price_field(fields[1], "Open", line_no);
        bar.high = parse_price_field(fields[2], "High", line_no);
        bar.low = parse_price_field(fields[3], "Low", line_no);
        bar.close = parse_price_field(fields[4], "Close", line_no);
        bar.adj_close = parse_price_field(fields[5], "Adj Close", line_no);
        double vol = parse_price_field(fields[6], "Volume", line_no);
        if (vol < 0 || vol != double(uint64_t(vol))) {
            raise(ErrorKind::malformed_record,
                  path + ": line " + std::to_string(line_no) + ": volume must be a non-negative integer");
        }
        bar.volume = uint64_t(vol);
        if (bar.adj_close <= 0) {
            raise(ErrorKind::non_positive_price,
                  path + ": line " + std::to_string(line_no) + ": adjusted close must be > 0");
        }
        if (bar.low > std::min(bar.open, bar.close) || bar.high < std::max(bar.open, bar.close)) {
            raise(ErrorKind::malformed_record,
                  path + ": line " + std::to_string(line_no) + ": OHLC range violated (low " +
                      format_double(bar.low) + ", high " + format_double(bar.high) + ")");
        }
        series.bars.push_back(bar);
    }
    std::stable_sort(series.bars.begin(), series.bars.end(),
                     [](const PriceBar& a, const PriceBar& b) { return a.date < b.date; });
    for (size_t i = 1; i < series.bars.size(); ++i) {
        if (series.bars[i].date == series.bars[i - 1].date) {
            raise(ErrorKind::duplicate_date,
                  path + ": duplicate trading date " + format_date(series.bars[i].date));
        }
    }
    return series;
}

Date align_to_trading_day(const Date& article_date, const PriceSeries& prices) {
    if (prices.empty()) {
        raise(ErrorKind::empty_series, "cannot align against an empty price series");
    }
    auto it = std::lower_bound(prices.bars.begin(), prices.bars.end(), article_date,
                               [](const PriceBar& b, const Date& v) { return b.date < v; });
    if (it == prices.bars.end()) {
        raise(ErrorKind::after_series_end,
              "article date " + format_date(article_date) + " is after the last trading day " +
                  format_date(prices.bars.back().date));
    }
    return it->date;
}

}  // namespace finsent
