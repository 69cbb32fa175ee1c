// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "symcoh/render.hpp"
#include "symcoh/suite.hpp"

using namespace symcoh;

namespace {

const std::map<int, double> kSeconds = {{1, 120}, {2, 120}, {3, 300}, {4, 900}, {5, 300},
                                        {6, 120}, {7, 600}, {8, 60},  {9, 300}};

const std::map<int, std::string> kTitle = {
    {1, "d d = 0"},
    {2, "subcomplex closure"},
    {3, "oracle agreement"},
    {4, "comparison maps"},
    {5, "symmetry and coboundary criteria"},
    {6, "crossed-extension sections"},
    {7, "symmetric sections vs image of symmetric H^3"},
    {8, "degree-2 cross-check"},
    {9, "2-group layer"},
    {10, "determinism across --jobs"},
};

bool run_cli(const std::string& args, std::string& out, int& status) {
    const std::string cmd = std::string(SYMCOH_CLI) + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return false;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    status = pclose(p);
    return true;
}

}  // namespace

int main() {
    SuiteOptions opt;
    opt.fixture_dir = SYMCOH_FIXTURES;
    opt.jobs = 1;
    const auto report = run_suite(opt);

    bool all = true;
    for (const auto& [crit, limit] : kSeconds) {
        double seconds = 0;
        std::size_t claims = 0;
        std::string failed;
        for (const auto& c : report.claims) {
            if (c.info.criterion != crit) continue;
            ++claims;
            seconds += c.seconds;
            if (c.verdict != Verdict::pass) failed += " " + c.info.id + "=" + to_string(c.verdict);
        }
        const bool ok = claims > 0 && failed.empty() && seconds < limit;
        all = all && ok;
        std::printf("criterion %d: %s  %s (%zu claims, %.1fs of %.0fs)%s\n", crit, ok ? "PASS" : "FAIL",
                    kTitle.at(crit).c_str(), claims, seconds, limit, failed.c_str());
        for (const auto& c : report.claims)
            if (c.info.criterion == crit && c.verdict == Verdict::fail)
                std::printf("  %s witness: %s\n", c.info.id.c_str(), c.witness.dump().c_str());
    }

    // criterion 10: two CLI runs with different job counts, plus the in-process report
    const std::string base = std::string("suite --format json --fixtures ") + SYMCOH_FIXTURES;
    std::string one, three;
    int s1 = -1, s3 = -1;
    const bool ran = run_cli(base + " --jobs 1", one, s1) && run_cli(base + " --jobs 3", three, s3);
    const std::string here = render_document(report_to_json(report));
    const bool ok10 = ran && s1 == 0 && s3 == 0 && !one.empty() && one == three && one == here;
    all = all && ok10;
    std::printf("criterion 10: %s  %s (%zu bytes, exit %d/%d)\n", ok10 ? "PASS" : "FAIL", kTitle.at(10).c_str(),
                one.size(), s1, s3);

    for (const auto& c : report.claims)
        for (const auto& f : c.findings) std::printf("finding [%s]: %s\n", c.info.id.c_str(), f.c_str());
    return all ? 0 : 1;
}
