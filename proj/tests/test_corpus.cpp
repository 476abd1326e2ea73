#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "corpus.hpp"
#include "date.hpp"
#include "errors.hpp"
#include "support.hpp"

using namespace finsent;
using testsupport::TempDir;
using testsupport::write_file;

namespace {

const char* kPriceHeader = "Date,Open,High,Low,Close,Adj Close,Volume\n";

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error to be thrown");
    return ErrorKind::io_error;
}

}  // namespace

TEST_CASE("date parsing accepts strict ISO form only") {
    Date d = parse_date("2014-02-28");
    CHECK(d.year == 2014);
    CHECK(d.month == 2);
    CHECK(d.day == 28);
    CHECK(format_date(d) == "2014-02-28");

    CHECK(parse_date("2012-02-29") == Date{2012, 2, 29});  // leap year
    CHECK(kind_of([] { parse_date("2013-02-29"); }) == ErrorKind::unparseable_date);
    CHECK(kind_of([] { parse_date("2014-13-01"); }) == ErrorKind::unparseable_date);
    CHECK(kind_of([] { parse_date("2014-00-10"); }) == ErrorKind::unparseable_date);
    CHECK(kind_of([] { parse_date("14-01-02"); }) == ErrorKind::unparseable_date);
    CHECK(kind_of([] { parse_date("2014/01/02"); }) == ErrorKind::unparseable_date);
    CHECK(kind_of([] { parse_date("2014-1-2"); }) == ErrorKind::unparseable_date);
    CHECK(kind_of([] { parse_date(""); }) == ErrorKind::unparseable_date);
}

TEST_CASE("date ordering is by year, month, day") {
    CHECK(Date{2014, 1, 31} < Date{2014, 2, 1});
    CHECK(Date{2013, 12, 31} < Date{2014, 1, 1});
    CHECK(Date{2014, 3, 5} == parse_date("2014-03-05"));
}

TEST_CASE("load_articles reads labeled and unlabeled records") {
    TempDir dir;
    auto path = write_file(dir.file("articles.tsv"),
                           "a1\t2014-01-02\tApple rises\tShares gained today.\tpos\n"
                           "a2\t2014-01-03\tApple falls\tShares dropped hard.\tneg\n"
                           "a3\t2014-01-04\tApple steady\tNo big move.\n");
    ArticleSet set = load_articles(path);
    REQUIRE(set.size() == 3);
    CHECK(set.articles[0].id == "a1");
    CHECK(set.articles[0].date == Date{2014, 1, 2});
    CHECK(set.articles[0].headline == "Apple rises");
    CHECK(set.articles[0].body == "Shares gained today.");
    CHECK(set.articles[0].label == Polarity::positive);
    CHECK(set.articles[1].label == Polarity::negative);
    CHECK(!set.articles[2].label.has_value());
}

TEST_CASE("load_articles on an empty file yields an empty set") {
    TempDir dir;
    auto path = write_file(dir.file("empty.tsv"), "");
    CHECK(load_articles(path).empty());
}

TEST_CASE("load_articles rejects malformed input") {
    TempDir dir;
    CHECK(kind_of([&] {
              load_articles(write_file(dir.file("short.tsv"), "a1\tApple rises\tbody\n"));
          }) == ErrorKind::malformed_record);
    CHECK(kind_of([&] {
              load_articles(write_file(dir.file("dup.tsv"),
                                       "a1\t2014-01-02\th\tb\n"
                                       "a1\t2014-01-03\th\tb\n"));
          }) == ErrorKind::duplicate_id);
    CHECK(kind_of([&] {
              load_articles(write_file(dir.file("date.tsv"), "a1\t02/01/2014\th\tb\n"));
          }) == ErrorKind::unparseable_date);
    CHECK(kind_of([&] {
              load_articles(write_file(dir.file("label.tsv"), "a1\t2014-01-02\th\tb\tmaybe\n"));
          }) == ErrorKind::malformed_record);
    CHECK(kind_of([&] {
              load_articles(write_file(dir.file("noid.tsv"), "\t2014-01-02\th\tb\n"));
          }) == ErrorKind::malformed_record);
    CHECK(kind_of([&] { load_articles(dir.file("missing.tsv")); }) == ErrorKind::io_error);
}

TEST_CASE("article write then load round-trips field for field") {
    TempDir dir;
    ArticleSet set;
    set.articles.push_back({"n1", Date{2014, 5, 1}, "Up day", "Gains on earnings beat.",
                            Polarity::positive});
    set.articles.push_back({"n2", Date{2014, 5, 2}, "Down day", "Losses on weak guidance.",
                            Polarity::negative});
    set.articles.push_back({"n3", Date{2014, 5, 3}, "Quiet day", "Nothing moved.", std::nullopt});
    auto path = dir.file("roundtrip.tsv");
    write_articles(set, path);
    ArticleSet back = load_articles(path);
    REQUIRE(back.size() == set.size());
    for (size_t i = 0; i < set.size(); ++i) CHECK(back.articles[i] == set.articles[i]);
}

TEST_CASE("write_articles refuses fields that would corrupt the format") {
    TempDir dir;
    ArticleSet set;
    set.articles.push_back({"t1", Date{2014, 5, 1}, "bad\theadline", "body", std::nullopt});
    CHECK(kind_of([&] { write_articles(set, dir.file("x.tsv")); }) == ErrorKind::malformed_record);
}

TEST_CASE("load_prices sorts rows and parses all six value columns") {
    TempDir dir;
    auto path = write_file(dir.file("prices.csv"),
                           std::string(kPriceHeader) +
                               "2014-01-06,76.78,78.11,76.23,77.07,71.40,103152700\n"
                               "2014-01-02,79.38,79.58,78.86,79.02,73.21,58671200\n"
                               "2014-01-03,78.98,79.10,77.20,77.28,71.60,98116900\n");
    PriceSeries series = load_prices(path);
    REQUIRE(series.size() == 3);
    CHECK(series.bars[0].date == Date{2014, 1, 2});
    CHECK(series.bars[1].date == Date{2014, 1, 3});
    CHECK(series.bars[2].date == Date{2014, 1, 6});
    CHECK(series.bars[0].open == doctest::Approx(79.38));
    CHECK(series.bars[0].high == doctest::Approx(79.58));
    CHECK(series.bars[0].low == doctest::Approx(78.86));
    CHECK(series.bars[0].close == doctest::Approx(79.02));
    CHECK(series.bars[0].adj_close == doctest::Approx(73.21));
    CHECK(series.bars[0].volume == 58671200u);
    CHECK(series.has_date(Date{2014, 1, 3}));
    CHECK(!series.has_date(Date{2014, 1, 4}));
}

TEST_CASE("load_prices enforces bar invariants") {
    TempDir dir;
    CHECK(kind_of([&] {
              load_prices(write_file(dir.file("h.csv"), "Date,Open,High,Low,Close\n"));
          }) == ErrorKind::malformed_record);
    CHECK(kind_of([&] {
              load_prices(write_file(dir.file("zero.csv"),
                                     std::string(kPriceHeader) +
                                         "2014-01-02,79.38,79.58,78.86,79.02,0,58671200\n"));
          }) == ErrorKind::non_positive_price);
    CHECK(kind_of([&] {
              load_prices(write_file(dir.file("dup.csv"),
                                     std::string(kPriceHeader) +
                                         "2014-01-02,79.38,79.58,78.86,79.02,73.21,58671200\n"
                                         "2014-01-02,78.98,79.10,77.20,77.28,71.60,98116900\n"));
          }) == ErrorKind::duplicate_date);
    CHECK(kind_of([&] {
              load_prices(write_file(dir.file("range.csv"),
                                     std::string(kPriceHeader) +
                                         "2014-01-02,79.38,79.20,78.86,79.02,73.21,58671200\n"));
          }) == ErrorKind::malformed_record);
    CHECK(kind_of([&] {
              load_prices(write_file(dir.file("vol.csv"),
                                     std::string(kPriceHeader) +
                                         "2014-01-02,79.38,79.58,78.86,79.02,73.21,-3\n"));
          }) == ErrorKind::malformed_record);
    CHECK(kind_of([&] {
              load_prices(write_file(dir.file("num.csv"),
                                     std::string(kPriceHeader) +
                                         "2014-01-02,abc,79.58,78.86,79.02,73.21,58671200\n"));
          }) == ErrorKind::malformed_record);
}

TEST_CASE("align_to_trading_day maps forward onto bar dates") {
    TempDir dir;
    auto path = write_file(dir.file("prices.csv"),
                           std::string(kPriceHeader) +
                               "2014-01-03,78.98,79.10,77.20,77.28,71.60,98116900\n"
                               "2014-01-06,76.78,78.11,76.23,77.07,71.40,103152700\n"
                               "2014-01-07,77.76,77.99,76.85,77.64,71.93,79302300\n");
    PriceSeries series = load_prices(path);

    // Listed trading date maps to itself.
    CHECK(align_to_trading_day(Date{2014, 1, 6}, series) == Date{2014, 1, 6});
    // Saturday the 4th rolls to Monday the 6th.
    CHECK(align_to_trading_day(Date{2014, 1, 4}, series) == Date{2014, 1, 6});
    CHECK(align_to_trading_day(Date{2014, 1, 5}, series) == Date{2014, 1, 6});
    // Before the first bar still lands on a bar.
    CHECK(align_to_trading_day(Date{2014, 1, 1}, series) == Date{2014, 1, 3});
    CHECK(kind_of([&] { align_to_trading_day(Date{2014, 1, 8}, series); }) ==
          ErrorKind::after_series_end);
    CHECK(kind_of([&] { align_to_trading_day(Date{2014, 1, 8}, PriceSeries{}); }) ==
          ErrorKind::empty_series);

    // Alignment never moves a date backwards and always lands on a bar.
    for (int day = 1; day <= 7; ++day) {
        Date d{2014, 1, int8_t(day)};
        Date aligned = align_to_trading_day(d, series);
        CHECK(aligned >= d);
        CHECK(series.has_date(aligned));
    }
}
