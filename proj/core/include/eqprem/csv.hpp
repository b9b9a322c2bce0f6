#pragma once

#include <string>
#include <vector>

namespace eqprem::csv {

// Parsed CSV with a header row. Cells are kept as raw strings; numeric
// conversion happens at the call site where the column semantics are known.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, -1 when absent.
    int column(const std::string& name) const;
};

Table read_file(const std::string& path);

// Strict double parsing: the whole cell must be a number.
// Returns false on failure instead of throwing; callers add row context.
bool parse_double(const std::string& cell, double& out);

// Shortest representation that round-trips bit-for-bit.
std::string format_double(double v);

std::string join_row(const std::vector<std::string>& cells);

}  // namespace eqprem::csv
