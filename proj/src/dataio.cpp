#include "exptest/dataio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "exptest/errors.hpp"

namespace exptest {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

double parse_number(const std::string& token, const std::string& context) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw input_error("not a number: '" + token + "' in " + context);
    }
    if (used != token.size())
        throw input_error("trailing characters after number: '" + token +
                          "' in " + context);
    return v;
}

} // namespace

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> values;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line = strip_comment(line);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token)
            values.push_back(parse_number(token, "data"));
    }
    if (values.empty()) throw input_error("no data values found");
    return values;
}

std::vector<double> read_values(const std::string& path) {
    return parse_values(slurp(path));
}

CensoredRecords parse_censored(const std::string& text) {
    CensoredRecords rec;
    std::istringstream lines(text);
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
        line = strip_comment(line);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream tokens(line);
        std::string a, b;
        if (!(tokens >> a)) continue;
        if (first && !std::isdigit(static_cast<unsigned char>(a[0])) &&
            a[0] != '.' && a[0] != '-') {
            first = false;
            continue; // header row
        }
        first = false;
        if (!(tokens >> b))
            throw input_error("expected 'time,status' but got: " + line);
        std::string extra;
        if (tokens >> extra)
            throw input_error("too many fields on line: " + line);
        rec.times.push_back(parse_number(a, "time column"));
        double status = parse_number(b, "status column");
        if (status != 0.0 && status != 1.0)
            throw input_error("status must be 0 or 1, got " + b);
        rec.events.push_back(static_cast<int>(status));
    }
    if (rec.times.empty()) throw input_error("no censored records found");
    return rec;
}

CensoredRecords read_censored(const std::string& path) {
    return parse_censored(slurp(path));
}

} // namespace exptest
