#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rankgen {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Ordered list of named pass/fail comparisons. Failures never throw; they
// are entries, so a run always reports every check it performed.
class VerificationReport {
public:
    void add(std::string name, bool pass, std::string detail = {}) {
        checks_.push_back({std::move(name), pass, std::move(detail)});
    }
    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void merge(const VerificationReport& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }
    bool all_pass() const {
        for (const auto& c : checks_) {
            if (!c.pass) return false;
        }
        return true;
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& c : checks_) n += c.pass ? 0 : 1;
        return n;
    }
    const std::vector<CheckResult>& checks() const { return checks_; }

private:
    std::vector<CheckResult> checks_;
};

}  // namespace rankgen
