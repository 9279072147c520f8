#include "yangian/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace yangian {

bool Report::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

void Report::finalize() {
    int passed = 0;
    for (const auto& it : items) passed += it.pass ? 1 : 0;
    summary = std::to_string(passed) + "/" + std::to_string(items.size()) + " identities hold";
}

nlohmann::json Report::to_json() const {
    nlohmann::json js;
    js["schema"] = "1";
    js["suite"] = suite;
    js["n"] = n;
    js["summary"] = summary;
    js["items"] = nlohmann::json::array();
    for (const auto& it : items) {
        nlohmann::json ji = {{"id", it.id}, {"status", it.pass ? "pass" : "fail"}};
        if (!it.pass) {
            ji["lhs"] = it.lhs;
            ji["rhs"] = it.rhs;
        }
        js["items"].push_back(ji);
    }
    return js;
}

Report Report::from_json(const nlohmann::json& j) {
    if (!validate_report_json(j)) throw std::invalid_argument("report JSON does not match schema 1");
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.n = j.at("n").get<int>();
    r.summary = j.at("summary").get<std::string>();
    for (const auto& ji : j.at("items")) {
        ReportItem it;
        it.id = ji.at("id").get<std::string>();
        it.pass = ji.at("status").get<std::string>() == "pass";
        if (ji.contains("lhs")) it.lhs = ji.at("lhs").get<std::string>();
        if (ji.contains("rhs")) it.rhs = ji.at("rhs").get<std::string>();
        r.items.push_back(std::move(it));
    }
    return r;
}

bool validate_report_json(const nlohmann::json& j) {
    if (!j.is_object()) return false;
    if (!j.contains("schema") || j.at("schema") != "1") return false;
    for (const char* key : {"suite", "n", "items", "summary"})
        if (!j.contains(key)) return false;
    if (!j.at("items").is_array()) return false;
    for (const auto& ji : j.at("items")) {
        if (!ji.is_object() || !ji.contains("id") || !ji.contains("status")) return false;
        auto s = ji.at("status").get<std::string>();
        if (s != "pass" && s != "fail") return false;
    }
    return true;
}

void append_report_file(const std::string& dir, const Report& r) {
    std::filesystem::create_directories(dir);
    auto path = std::filesystem::path(dir) / (r.suite + "-n" + std::to_string(r.n) + ".json");
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open report file " + path.string());
    out << r.to_json().dump() << "\n";
}

}  // namespace yangian
