#ifndef QSA_REPORT_HPP
#define QSA_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace qsa {

using Json = nlohmann::ordered_json;

/// One verified property: named check, pass/fail, witness on failure.
struct CheckResult {
    std::string property;
    bool pass = false;
    Json witness = Json::object();
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    void add(std::string property, bool pass, Json witness = Json::object()) {
        checks.push_back({std::move(property), pass, std::move(witness)});
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    Json to_json() const {
        Json rows = Json::array();
        for (const auto& c : checks) {
            Json row;
            row["property"] = c.property;
            row["status"] = c.pass ? "pass" : "fail";
            if (!c.witness.empty()) row["witness"] = c.witness;
            rows.push_back(std::move(row));
        }
        Json out;
        out["title"] = title;
        out["allPass"] = all_pass();
        out["checks"] = std::move(rows);
        return out;
    }

    std::string to_text() const {
        std::string out;
        for (const auto& c : checks) {
            out += (c.pass ? "pass  " : "FAIL  ") + c.property;
            if (!c.pass && !c.witness.empty()) out += "  witness: " + c.witness.dump();
            out += "\n";
        }
        return out;
    }
};

} // namespace qsa

#endif
