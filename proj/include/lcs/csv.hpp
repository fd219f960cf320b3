#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcs {

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

// Minimal CSV reader for our own output: leading '#' lines are comments,
// the first data line is the header, fields never contain commas or quotes.
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    static CsvTable load(std::istream& is);
    long column(const std::string& name) const;  // -1 when absent
};

}  // namespace lcs
