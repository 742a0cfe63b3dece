#pragma once

#include <string>
#include <vector>

namespace cevian {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail; ///< counterexample or value on failure
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    void append(const Report &other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
    bool all_passed() const {
        for (const auto &c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

} // namespace cevian
