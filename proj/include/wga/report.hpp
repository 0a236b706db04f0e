#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace wga {

struct CheckItem {
    std::string name;
    bool pass = false;
    // "ok" | "fail" | "error" -- errors flag violated preconditions, which
    // are reported distinctly from genuine check failures.
    std::string status;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back({name, pass, pass ? "ok" : "fail", detail});
    }
    void add_error(const std::string& name, const std::string& detail) {
        items.push_back({name, false, "error", detail});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& it : items)
            if (!it.pass) ++n;
        return n;
    }
    void print(std::ostream& os) const {
        os << "== " << title << " ==\n";
        for (const auto& it : items) {
            os << (it.pass ? "  [pass] " : (it.status == "error" ? "  [error] " : "  [FAIL] "))
               << it.name;
            if (!it.detail.empty()) os << "  (" << it.detail << ")";
            os << "\n";
        }
    }
};

}  // namespace wga
