// End-to-end acceptance harness: runs the full verification suite twice
// through the CLI and grades one criterion per line.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> grade;
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

/// All cases whose id starts with one of the prefixes must exist and pass.
bool group_passes(const json& report, const std::vector<std::string>& prefixes,
                  std::string& why) {
    int matched = 0;
    for (const auto& c : report) {
        const std::string id = c.at("id").get<std::string>();
        bool hit = false;
        for (const auto& p : prefixes)
            if (id.rfind(p, 0) == 0) hit = true;
        if (!hit) continue;
        ++matched;
        if (c.at("verdict").get<std::string>() != "pass") {
            why = id + " failed";
            const std::string detail = c.value("detail", "");
            if (!detail.empty()) why += ": " + detail;
            return false;
        }
    }
    if (matched == 0) {
        why = "no cases matched " + prefixes.front();
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-lans-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path run1 = "acceptance-run-1";
    const fs::path run2 = "acceptance-run-2";
    fs::remove_all(run1);
    fs::remove_all(run2);

    auto verify_all = [&](const fs::path& out) {
        const std::string cmd =
            "\"" + cli + "\" verify all --out " + out.string() + " > " + out.string() + ".log 2>&1";
        return std::system(cmd.c_str());
    };
    std::cout << "running full verification suite (pass 1)..." << std::endl;
    const int rc1 = verify_all(run1);
    std::cout << "running full verification suite (pass 2)..." << std::endl;
    const int rc2 = verify_all(run2);

    json report;
    try {
        report = json::parse(slurp(run1 / "report.json"));
    } catch (const std::exception& e) {
        std::cerr << "cannot parse " << (run1 / "report.json").string() << ": " << e.what()
                  << "\n";
        return 1;
    }

    std::vector<Criterion> criteria = {
        {"01 projector identity, idempotence, and tau ~ alpha^2 scaling",
         [&](std::string& w) { return group_passes(report, {"projector-", "tau-alpha2-"}, w); }},
        {"02 heat-semigroup smoothing exponents",
         [&](std::string& w) { return group_passes(report, {"smoothing-"}, w); }},
        {"03 Picard iteration contracts and halved data contracts faster",
         [&](std::string& w) { return group_passes(report, {"picard-contraction"}, w); }},
        {"04 Picard fixed point matches the timestepper",
         [&](std::string& w) { return group_passes(report, {"picard-vs-timestepper"}, w); }},
        {"05 alpha-energy monotonicity and dissipation rate",
         [&](std::string& w) { return group_passes(report, {"energy-"}, w); }},
        {"06 H^2 a priori bound across the data ensemble",
         [&](std::string& w) { return group_passes(report, {"h2-bound-"}, w); }},
        {"07 bilinear divergence bound and Lipschitz quotient",
         [&](std::string& w) { return group_passes(report, {"bilinear-", "lipschitz-"}, w); }},
        {"08 local-existence condition lists and scan agreement",
         [&](std::string& w) { return group_passes(report, {"conditions-"}, w); }},
        {"09 higher-regularity weighted bounds of the mild solution",
         [&](std::string& w) { return group_passes(report, {"higher-reg-"}, w); }},
        {"10 alpha -> 0 convergence to Navier-Stokes at rate alpha^2",
         [&](std::string& w) {
             return group_passes(report, {"alpha-limit-", "taylor-green-2d-"}, w);
         }},
        {"11 full suite exits cleanly twice with byte-identical artifacts",
         [&](std::string& w) {
             if (rc1 != 0) { w = "first run exit code " + std::to_string(rc1); return false; }
             if (rc2 != 0) { w = "second run exit code " + std::to_string(rc2); return false; }
             if (slurp(run1 / "report.json") != slurp(run2 / "report.json")) {
                 w = "report.json differs between runs";
                 return false;
             }
             if (slurp(run1 / "scan.csv") != slurp(run2 / "scan.csv")) {
                 w = "scan.csv differs between runs";
                 return false;
             }
             if (slurp(run1 / "scan.csv").empty()) { w = "scan.csv missing or empty"; return false; }
             return true;
         }},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string why;
        const bool ok = c.grade(why);
        std::cout << (ok ? "PASS  " : "FAIL  ") << c.name;
        if (!ok) std::cout << "  [" << why << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "all 11 acceptance criteria satisfied\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
