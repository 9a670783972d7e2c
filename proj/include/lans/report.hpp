#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace lans {

/// Structured pass/fail record emitted by every verification experiment.
struct CaseReport {
    std::string id;
    std::map<std::string, std::string> inputs;
    std::map<std::string, double> measured;
    std::string expected;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

inline nlohmann::json to_json(const CaseReport& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["inputs"] = r.inputs;
    j["measured"] = r.measured;
    j["expected"] = r.expected;
    j["tolerance"] = r.tolerance;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["detail"] = r.detail;
    return j;
}

inline void write_report_json(const std::string& path, const std::vector<CaseReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::ofstream os(path);
    if (!os) throw std::runtime_error("report: cannot open " + path + " for writing");
    os << arr.dump(2) << "\n";
    if (!os) throw std::runtime_error("report: write failed for " + path);
}

inline bool all_pass(const std::vector<CaseReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return !reports.empty();
}

} // namespace lans
