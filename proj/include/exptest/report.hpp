#pragma once

#include <limits>
#include <string>
#include <vector>

namespace exptest {

enum class Alternative { indse, dndse };
enum class Decision { reject, fail_to_reject };

const char* to_string(Alternative a);
const char* to_string(Decision d);
Alternative alternative_from_string(const std::string& s);

struct TestReport {
    std::string method;
    int n = 0;
    double statistic = 0.0;
    double p_value = 0.0;
    double alpha = 0.0;
    // NaN when the method has no critical value on the statistic scale.
    double critical_value = std::numeric_limits<double>::quiet_NaN();
    Alternative alternative = Alternative::indse;
    Decision decision = Decision::fail_to_reject;
    std::vector<std::string> warnings;
};

// JSON with fixed field names: method, n, statistic, p_value, alpha,
// critical_value, alternative, decision, warnings. NaN maps to null.
std::string to_json(const TestReport& r);
TestReport report_from_json(const std::string& text);

std::string to_text(const TestReport& r);

} // namespace exptest
