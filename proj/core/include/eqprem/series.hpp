#pragma once

#include <string>
#include <vector>

#include "eqprem/errors.hpp"
#include "eqprem/month.hpp"

namespace eqprem {

// One value per calendar month, gap-free by construction. The date of
// values[i] is start + i.
struct MonthlySeries {
    Month start;
    std::vector<double> values;
    std::string name;

    MonthlySeries() = default;
    MonthlySeries(Month start, std::vector<double> values, std::string name = "")
        : start(start), values(std::move(values)), name(std::move(name)) {}

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    Month date(std::size_t i) const { return start + static_cast<int>(i); }
    Month last_date() const { return start + static_cast<int>(values.size()) - 1; }

    bool covers(Month m) const { return m >= start && m <= last_date(); }

    double at(Month m) const {
        if (!covers(m))
            throw DomainError("series '" + name + "' has no value for " + m.str());
        return values[static_cast<std::size_t>(m - start)];
    }

    // Sub-series over [from, to], both ends clamped to the available range.
    MonthlySeries slice(Month from, Month to) const {
        Month lo = from < start ? start : from;
        Month hi = to > last_date() ? last_date() : to;
        if (lo > hi) return MonthlySeries(lo, {}, name);
        auto b = values.begin() + (lo - start);
        auto e = values.begin() + (hi - start) + 1;
        return MonthlySeries(lo, std::vector<double>(b, e), name);
    }
};

// Latest common start and earliest common end across series.
// Throws AlignmentError when the intersection is empty.
Month aligned_start(const std::vector<const MonthlySeries*>& series);
Month aligned_end(const std::vector<const MonthlySeries*>& series);

}  // namespace eqprem
