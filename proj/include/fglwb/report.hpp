#pragma once

#include <string>
#include <vector>

namespace fglwb {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;  // first counterexample on failure, a summary otherwise
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    /// Informational lines (findings, tables) that do not affect pass/fail.
    std::vector<std::string> notes;

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void note(std::string line) { notes.push_back(std::move(line)); }
    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

}  // namespace fglwb
