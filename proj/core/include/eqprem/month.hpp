#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>

#include "eqprem/errors.hpp"

namespace eqprem {

// Calendar month stored as integer year*100 + month (e.g. 195001).
// All data in this library is monthly; no finer timestamp exists.
class Month {
public:
    Month() = default;

    explicit Month(int ym) : index_(to_index(ym)) {}

    Month(int year, int month) : Month(year * 100 + month) {}

    static Month from_index(int index) {
        Month m;
        m.index_ = index;
        return m;
    }

    int year() const { return index_ / 12; }
    int month() const { return index_ % 12 + 1; }
    int ym() const { return year() * 100 + month(); }

    // Months since year 0; the arithmetic basis for offsets and spans.
    int index() const { return index_; }

    Month operator+(int months) const { return from_index(index_ + months); }
    Month operator-(int months) const { return from_index(index_ - months); }
    int operator-(Month other) const { return index_ - other.index_; }
    Month& operator++() {
        ++index_;
        return *this;
    }

    auto operator<=>(const Month&) const = default;

    std::string str() const {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "%04d-%02d", year(), month());
        return buf;
    }

    // Accepts "YYYY-MM", "YYYY-MM-DD", or bare "YYYYMM".
    static Month parse(const std::string& s);

private:
    static int to_index(int ym) {
        int y = ym / 100, m = ym % 100;
        if (m < 1 || m > 12 || y < 0)
            throw DataError("invalid year-month: " + std::to_string(ym));
        return y * 12 + (m - 1);
    }

    int index_ = 0;
};

inline Month Month::parse(const std::string& s) {
    if (s.size() >= 7 && s[4] == '-') {
        int y = std::stoi(s.substr(0, 4));
        int m = std::stoi(s.substr(5, 2));
        return Month(y, m);
    }
    if (s.size() == 6) return Month(std::stoi(s));
    throw DataError("unparsable date: '" + s + "'");
}

}  // namespace eqprem
