#include "date.hpp"

#include <cctype>
#include <cstdio>

#include "errors.hpp"

namespace finsent {

namespace {

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static const int table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return table[month - 1];
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

bool is_valid_date(int year, int month, int day) {
    if (year < 1 || year > 9999) return false;
    if (month < 1 || month > 12) return false;
    if (day < 1 || day > days_in_month(year, month)) return false;
    return true;
}

Date parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
        !all_digits(text.substr(8, 2))) {
        raise(ErrorKind::unparseable_date,
              "unparseable date '" + std::string(text) + "' (expected YYYY-MM-DD)");
    }
    auto num = [&](size_t pos, size_t len) {
        int v = 0;
        for (size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
        return v;
    };
    int year = num(0, 4), month = num(5, 2), day = num(8, 2);
    if (!is_valid_date(year, month, day)) {
        raise(ErrorKind::unparseable_date,
              "invalid calendar date '" + std::string(text) + "'");
    }
    return Date{static_cast<int16_t>(year), static_cast<int8_t>(month),
                static_cast<int8_t>(day)};
}

std::string format_date(const Date& d) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", int(d.year), int(d.month), int(d.day));
    return buf;
}

}  // namespace finsent
