// Runs every acceptance suite and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any gating criterion fails.

#include <chrono>
#include <cstdio>
#include <map>

#include "localwitt/suites.hpp"

using namespace localwitt;

int main() {
    // Wall-clock limits in seconds, where one applies.
    const std::map<int, double> limits{{1, 60.0}, {5, 120.0}};
    SuiteOptions opts;
    bool ok = true;
    for (const auto& entry : suite_registry()) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteReport rep;
        std::string error;
        try {
            rep = entry.run(opts);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = error.empty() && rep.pass();
        std::string why;
        if (auto it = limits.find(entry.criterion); it != limits.end() && secs > it->second) {
            pass = false;
            why = " over time limit " + std::to_string(static_cast<int>(it->second)) + "s";
        }
        if (!error.empty()) why += " error: " + error;
        const std::string id = entry.criterion > 0 ? "criterion " + std::to_string(entry.criterion) : "examples";
        std::printf("%s %-12s %-16s %zu/%zu cases %7.2fs%s%s\n", pass ? "PASS" : "FAIL", id.c_str(), entry.name,
                    rep.passed(), rep.cases.size(), secs, entry.gating ? "" : " (non-gating)", why.c_str());
        if (!pass)
            for (const auto& c : rep.cases)
                if (!c.pass)
                    std::printf("    failed: %s [%s] expected %s got %s\n", c.name.c_str(), c.input.c_str(),
                                c.expected.c_str(), c.got.c_str());
        for (const auto& n : rep.notes) std::printf("    note: %s\n", n.c_str());
        std::fflush(stdout);
        if (entry.gating && !pass) ok = false;
    }
    return ok ? 0 : 1;
}
