#pragma once

#include <string>
#include <vector>

namespace exptest {

// Whitespace/comma-separated positive values; '#' starts a comment. Throws
// input_error on anything unparsable.
std::vector<double> read_values(const std::string& path);
std::vector<double> parse_values(const std::string& text);

// Censored records, one "time,status" pair per line (status 1 = event,
// 0 = censored). A non-numeric first line is treated as a header.
struct CensoredRecords {
    std::vector<double> times;
    std::vector<int> events;
};
CensoredRecords read_censored(const std::string& path);
CensoredRecords parse_censored(const std::string& text);

} // namespace exptest
