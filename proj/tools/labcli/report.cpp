#include "labcli/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fo52lab {
namespace {

using nlohmann::ordered_json;

std::string csv_cell(const ordered_json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

std::string ExperimentReport::to_json() const {
    ordered_json j;
    j["experiment"] = experiment;
    j["seeds"] = seeds;
    j["parameters"] = parameters;
    j["results"] = results;
    j["anomalies"] = anomalies;
    j["rows"] = rows;
    j["artifact_version"] = artifact_version;
    j["runtime_ms"] = runtime_ms;
    return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
    std::set<std::string> keys;
    for (const auto& r : rows)
        for (const auto& [k, v] : r.items()) keys.insert(k);

    std::vector<ordered_json> sorted = rows;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const ordered_json& a, const ordered_json& b) {
                         const auto ta = a.value("trial", 0L);
                         const auto tb = b.value("trial", 0L);
                         return ta < tb;
                     });

    std::ostringstream out;
    bool first = true;
    for (const auto& k : keys) {
        if (!first) out << ',';
        out << csv_cell(k);
        first = false;
    }
    out << '\n';
    for (const auto& r : sorted) {
        first = true;
        for (const auto& k : keys) {
            if (!first) out << ',';
            if (r.contains(k)) out << csv_cell(r.at(k));
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace fo52lab
