#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace yangian {

// One verified identity. lhs/rhs carry the serialized sides only when the
// item failed, so failure reports are self-contained and diffable.
struct ReportItem {
    std::string id;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    int n = 0;
    std::vector<ReportItem> items;
    std::string summary;

    void add_pass(const std::string& id) { items.push_back({id, true, "", ""}); }
    void add_fail(const std::string& id, const std::string& lhs, const std::string& rhs) {
        items.push_back({id, false, lhs, rhs});
    }
    void add(const std::string& id, bool ok, const std::string& lhs = "", const std::string& rhs = "") {
        if (ok)
            add_pass(id);
        else
            add_fail(id, lhs, rhs);
    }

    bool all_pass() const;
    void finalize();  // fills summary

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
};

// Appends the report as one JSON object per line to <dir>/<suite>-n<N>.json.
// Reports are only ever appended, never rewritten.
void append_report_file(const std::string& dir, const Report& r);

// Schema "1" shape check for re-parsed report objects.
bool validate_report_json(const nlohmann::json& j);

}  // namespace yangian
