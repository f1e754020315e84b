#include "exptest/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "exptest/errors.hpp"

namespace exptest {

const char* to_string(Alternative a) {
    return a == Alternative::indse ? "indse" : "dndse";
}

const char* to_string(Decision d) {
    return d == Decision::reject ? "reject" : "fail-to-reject";
}

Alternative alternative_from_string(const std::string& s) {
    if (s == "indse") return Alternative::indse;
    if (s == "dndse") return Alternative::dndse;
    throw input_error("alternative must be 'indse' or 'dndse'");
}

std::string to_json(const TestReport& r) {
    nlohmann::json j;
    j["method"] = r.method;
    j["n"] = r.n;
    j["statistic"] = r.statistic;
    j["p_value"] = std::isnan(r.p_value) ? nlohmann::json() : nlohmann::json(r.p_value);
    j["alpha"] = r.alpha;
    j["critical_value"] = std::isnan(r.critical_value)
                              ? nlohmann::json()
                              : nlohmann::json(r.critical_value);
    j["alternative"] = to_string(r.alternative);
    j["decision"] = to_string(r.decision);
    j["warnings"] = r.warnings;
    return j.dump(2);
}

TestReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TestReport r;
    r.method = j.at("method").get<std::string>();
    r.n = j.at("n").get<int>();
    r.statistic = j.at("statistic").get<double>();
    r.p_value = j.at("p_value").is_null()
                    ? std::numeric_limits<double>::quiet_NaN()
                    : j.at("p_value").get<double>();
    r.alpha = j.at("alpha").get<double>();
    r.critical_value = j.at("critical_value").is_null()
                           ? std::numeric_limits<double>::quiet_NaN()
                           : j.at("critical_value").get<double>();
    r.alternative = alternative_from_string(j.at("alternative").get<std::string>());
    r.decision = j.at("decision").get<std::string>() == "reject"
                     ? Decision::reject
                     : Decision::fail_to_reject;
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

std::string to_text(const TestReport& r) {
    std::ostringstream os;
    os.precision(6);
    os << "method:         " << r.method << "\n"
       << "n:              " << r.n << "\n"
       << "statistic:      " << r.statistic << "\n"
       << "p-value:        " << r.p_value << "\n"
       << "alpha:          " << r.alpha << "\n";
    if (!std::isnan(r.critical_value))
        os << "critical value: " << r.critical_value << "\n";
    os << "alternative:    " << to_string(r.alternative) << "\n"
       << "decision:       " << to_string(r.decision) << "\n";
    for (const auto& w : r.warnings) os << "warning:        " << w << "\n";
    return os.str();
}

} // namespace exptest
