#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace sy {

/// Outcome of checking one structural claim over a window of instances.
struct ClaimReport {
    ClaimReport() = default;
    ClaimReport(std::string c, std::string cfg, std::string w)
        : claim(std::move(c)), config(std::move(cfg)), window(std::move(w)) {}

    std::string claim;
    std::string config;
    std::string window;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::string counterexample;
    bool ok() const { return failures == 0; }
    std::string status() const { return ok() ? "pass" : "fail"; }
    void fail(const std::string& what) {
        if (!failures++) counterexample = what;
    }
};

}  // namespace sy
