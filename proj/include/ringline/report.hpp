#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace ringline {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // non-empty whenever pass is false
};

struct VerificationReport {
    std::string suite;
    std::string descriptor;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Accumulates check results and keeps failing entries witnessed.
struct Checker {
    VerificationReport rep;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Checker(std::string suite, std::string descriptor) {
        rep.suite = std::move(suite);
        rep.descriptor = std::move(descriptor);
    }

    void check(const std::string& name, bool ok, const std::string& witness = "") {
        rep.checks.push_back({name, ok, ok ? witness : (witness.empty() ? "failed" : witness)});
    }

    VerificationReport finish() {
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return std::move(rep);
    }
};

}  // namespace ringline
