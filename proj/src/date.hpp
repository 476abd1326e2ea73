#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace finsent {

// Calendar date with no time zone or time-of-day notion. Stored as plain
// fields; ordering compares year, then month, then day.
struct Date {
    int16_t year = 0;
    int8_t month = 0;
    int8_t day = 0;

    auto operator<=>(const Date&) const = default;
};

bool is_valid_date(int year, int month, int day);

// Parses strict "YYYY-MM-DD". Throws Error(unparseable_date) on anything else.
Date parse_date(std::string_view text);

// Formats back to "YYYY-MM-DD".
std::string format_date(const Date& d);

}  // namespace finsent
