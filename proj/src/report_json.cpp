#include "mayer/report_json.hpp"

namespace mayer {

std::string report_value_str(const Rational& value, bool integral) {
    if (integral) return numerator(value).str();
    return rational_str(value);
}

nlohmann::ordered_json report_to_json(const IdentityReport& report) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    return nlohmann::ordered_json{
        {"command", report.name},
        {"params", std::move(params)},
        {"computed", report_value_str(report.computed, report.integral)},
        {"expected", report_value_str(report.expected, report.integral)},
        {"match", report.match},
        {"work", {{"graphs", report.work.graphs}, {"pairs", report.work.pairs}}},
        {"millis", report.millis},
    };
}

} // namespace mayer
